"""Greedy splitting approximations for the minimum k-way cut problem."""

from .analysis import f, h_split_ratio, theoretical_ratio, verify_facts
from .graph import Edge, Graph, components, remove_edges, split_cardinality
from .greedy import SequenceSpec, derive_h_sequence, iterative_h_split, iterative_split
from .instances import RandomGraphConfig, make_random_graph, make_tight_instance
from .solvers import (
    SplitResult,
    TieBreak,
    min_cut_maxadjacency,
    min_split_bruteforce,
    min_split_dp,
    star_closure,
)

__all__ = [
    "Edge", "Graph", "SequenceSpec", "SplitResult", "TieBreak", "RandomGraphConfig",
    "components", "remove_edges", "split_cardinality", "f", "theoretical_ratio",
    "h_split_ratio", "verify_facts", "derive_h_sequence", "iterative_split",
    "iterative_h_split", "make_tight_instance", "make_random_graph",
    "min_split_bruteforce", "min_cut_maxadjacency", "min_split_dp", "star_closure",
]
