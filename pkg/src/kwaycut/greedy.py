"""Greedy splitting: repeatedly remove a minimum h_i-way split.

``iterative_split`` follows an arbitrary nondecreasing plan (h_1, ..., h_q)
with sum(h_i - 1) = k - 1; ``iterative_h_split`` is the plan made of one
(r+1)-way split followed by p rounds of h-way splits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .graph import Graph, components, remove_edges
from .solvers import InfeasibleError, SplitResult, TieBreak, min_split_dp


class SequenceError(ValueError):
    pass


def check_nondecreasing(hs: Sequence[int]) -> None:
    if not hs:
        raise SequenceError("split plan must contain at least one round")
    if hs[0] < 2:
        raise SequenceError(f"every round must split at least 2 ways, got h_1={hs[0]}")
    if any(a > b for a, b in zip(hs, hs[1:])):
        raise SequenceError(f"split plan must be nondecreasing, got {list(hs)}")


@dataclass(frozen=True)
class SequenceSpec:
    k: int
    hs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "hs", tuple(self.hs))
        if self.k < 2:
            raise SequenceError(f"k must be >= 2, got {self.k}")
        check_nondecreasing(self.hs)
        total = sum(h - 1 for h in self.hs)
        if total != self.k - 1:
            raise SequenceError(f"sum(h_i - 1) = {total} but k - 1 = {self.k - 1}")

    @property
    def q(self) -> int:
        return len(self.hs)


def derive_h_sequence(k: int, h: int) -> SequenceSpec:
    if not 2 <= h <= k:
        raise SequenceError(f"need 2 <= h <= k, got h={h}, k={k}")
    p, r = divmod(k - 1, h - 1)
    return SequenceSpec(k, ((r + 1,) if r else ()) + (h,) * p)


@dataclass(frozen=True)
class TraceStep:
    h: int
    split: SplitResult
    component_count_after: int


@dataclass
class GreedyTrace:
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def total_weight(self) -> Fraction:
        return sum((s.split.weight for s in self.steps), Fraction(0))

    @property
    def cut_edge_ids(self) -> frozenset[int]:
        return frozenset().union(*(s.split.edge_ids for s in self.steps))


def run_splits(
    g: Graph, hs: Sequence[int], policy: TieBreak = TieBreak.CANONICAL_LEX
) -> GreedyTrace:
    """Remove a minimum h-way split for each h in the nondecreasing ``hs``.

    Unlike :func:`iterative_split` the plan need not add up to any particular
    k, which is what prefix-wise bound checks need.
    """
    check_nondecreasing(hs)
    trace = GreedyTrace()
    count = components(g).count
    current = g
    for h in hs:
        split = min_split_dp(current, h, policy)
        current = remove_edges(current, split.edge_ids)
        after = components(current).count
        if after != count + h - 1:
            raise AssertionError(f"round h={h} moved component count {count} -> {after}")
        count = after
        trace.steps.append(TraceStep(h, split, after))
    return trace


def iterative_split(
    g: Graph, spec: SequenceSpec, policy: TieBreak = TieBreak.CANONICAL_LEX
) -> GreedyTrace:
    if components(g).count != 1:
        raise InfeasibleError(
            "iterative_split needs a connected graph; connect components with star_closure first"
        )
    if g.n < spec.k:
        raise InfeasibleError(f"cannot cut a graph with n={g.n} into k={spec.k} components")
    return run_splits(g, spec.hs, policy)


def iterative_h_split(
    g: Graph, k: int, h: int, policy: TieBreak = TieBreak.CANONICAL_LEX
) -> GreedyTrace:
    return iterative_split(g, derive_h_sequence(k, h), policy)
