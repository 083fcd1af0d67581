"""Exact-weighted undirected multigraphs and connectivity queries.

Graphs are immutable. Vertices are dense indices ``0..n-1``; every edge carries
a stable integer id that survives deletion, so a cut found on a derived graph
can always be reported in terms of the input edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Raised for malformed graphs or invalid edge references."""


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    weight: Fraction


@dataclass(frozen=True)
class ComponentLabeling:
    labels: tuple[int, ...]
    count: int

    def members(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            groups[c].append(v)
        return groups


class DisjointSet:
    """Union-find with path halving and union by size."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.sets = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.sets -= 1
        return True


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph with positive rational edge weights.

    Parallel edges are allowed, self-loops are not. Edge ids must be unique;
    graphs built directly from input are numbered ``0..m-1``, while graphs
    obtained through :func:`remove_edges` keep the ids of surviving edges.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        seen: set[int] = set()
        for e in self.edges:
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise GraphError(f"edge {e.id}: endpoint out of range for n={self.n}")
            if e.u == e.v:
                raise GraphError(f"edge {e.id}: self-loop at vertex {e.u}")
            if not isinstance(e.weight, Fraction):
                raise GraphError(f"edge {e.id}: weight must be a Fraction")
            if e.weight <= 0:
                raise GraphError(f"edge {e.id}: weight must be positive, got {e.weight}")
            if e.id in seen:
                raise GraphError(f"duplicate edge id {e.id}")
            seen.add(e.id)

    @classmethod
    def from_edges(cls, n: int, triples: Iterable[tuple[int, int, object]]) -> Graph:
        """Build a graph numbering edges 0..m-1 in iteration order.

        Weights may be anything :class:`fractions.Fraction` accepts exactly
        (ints, Fractions, ``"p/q"`` strings); floats are rejected.
        """
        edges = []
        for i, (u, v, w) in enumerate(triples):
            if isinstance(w, float):
                raise GraphError(f"edge {i}: float weights are not exact; use Fraction or 'p/q'")
            edges.append(Edge(i, int(u), int(v), Fraction(w)))
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> frozenset[int]:
        return frozenset(e.id for e in self.edges)

    def edge_map(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def total_weight(self) -> Fraction:
        return sum((e.weight for e in self.edges), Fraction(0))

    def weight_of(self, edge_ids: Iterable[int]) -> Fraction:
        emap = self.edge_map()
        total = Fraction(0)
        for i in edge_ids:
            if i not in emap:
                raise GraphError(f"unknown edge id {i}")
            total += emap[i].weight
        return total


def components(g: Graph) -> ComponentLabeling:
    """Label connected components, numbering them by their smallest vertex."""
    ds = DisjointSet(g.n)
    for e in g.edges:
        ds.union(e.u, e.v)
    root_label: dict[int, int] = {}
    labels = []
    for v in range(g.n):
        r = ds.find(v)
        if r not in root_label:
            root_label[r] = len(root_label)
        labels.append(root_label[r])
    return ComponentLabeling(tuple(labels), len(root_label))


def _check_ids(g: Graph, edge_ids: Iterable[int]) -> frozenset[int]:
    ids = frozenset(edge_ids)
    unknown = ids - g.edge_ids()
    if unknown:
        raise GraphError(f"unknown edge ids: {sorted(unknown)}")
    return ids


def remove_edges(g: Graph, edge_ids: Iterable[int]) -> Graph:
    ids = _check_ids(g, edge_ids)
    if not ids:
        return g
    return Graph(g.n, tuple(e for e in g.edges if e.id not in ids))


def split_cardinality(g: Graph, edge_ids: Iterable[int]) -> int:
    """Return h such that removing ``edge_ids`` is an h-way split of ``g``."""
    after = remove_edges(g, edge_ids)
    return components(after).count - components(g).count + 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``vertices`` (relabelled densely, in sorted order).

    Returns the subgraph and the list mapping new vertex index -> old index.
    Edge ids are preserved.
    """
    old = sorted(set(vertices))
    index = {v: i for i, v in enumerate(old)}
    edges = tuple(
        Edge(e.id, index[e.u], index[e.v], e.weight)
        for e in g.edges
        if e.u in index and e.v in index
    )
    return Graph(len(old), edges), old


def same_graph(a: Graph, b: Graph) -> bool:
    """Equality up to edge order: vertex count plus the set of surviving edges."""
    return a.n == b.n and set(a.edges) == set(b.edges)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Place graphs side by side; vertices and edge ids are renumbered in order."""
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        for e in g.edges:
            edges.append(Edge(len(edges), e.u + offset, e.v + offset, e.weight))
        offset += g.n
    return Graph(offset, tuple(edges))
