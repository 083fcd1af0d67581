"""Exact minimum h-way split solvers.

Three routes to the same optimum:

* :func:`min_split_bruteforce` enumerates vertex partitions (small graphs only)
  and is the ground truth for everything else.
* :func:`min_cut_maxadjacency` is the deterministic maximum-adjacency
  (Stoer-Wagner) global minimum cut, for h = 2 on connected graphs.
* :func:`min_split_dp` handles disconnected graphs: it solves every component
  separately and distributes the h - 1 extra components between them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable

from .graph import (
    DisjointSet,
    Edge,
    Graph,
    components,
    induced_subgraph,
    split_cardinality,
)

BRUTE_FORCE_LIMIT = 14


class SolverError(ValueError):
    pass


class InfeasibleError(SolverError):
    pass


class SizeLimitError(SolverError):
    pass


class TieBreak(str, enum.Enum):
    CANONICAL_LEX = "canonical-lex"
    AVOID_LAST_COMPONENT = "avoid-last-component"


@dataclass(frozen=True)
class SplitResult:
    edge_ids: frozenset[int]
    weight: Fraction
    achieved_h: int

    def sorted_ids(self) -> list[int]:
        return sorted(self.edge_ids)


def _check_feasible(g: Graph, h: int) -> int:
    if h < 1:
        raise InfeasibleError(f"h must be >= 1, got {h}")
    blocks = components(g).count + h - 1
    if blocks > g.n:
        raise InfeasibleError(
            f"cannot split graph with n={g.n} into {blocks} components (h={h})"
        )
    return blocks


def _scaled_weights(g: Graph) -> tuple[dict[int, int], int]:
    """Integer weights proportional to the exact ones, and the scale factor."""
    scale = lcm(*(e.weight.denominator for e in g.edges)) if g.edges else 1
    return {e.id: int(e.weight * scale) for e in g.edges}, scale


def isolation_upper_bound(g: Graph, h: int) -> Fraction:
    """Weight of a cheap edge set whose removal adds at least h - 1 components.

    Repeatedly strips all edges off the non-isolated vertex of least weighted
    degree. Some exact h-way split weighs no more than this (re-adding cut
    edges one at a time removes at most one component each).
    """
    target = components(g).count + h - 1
    live = list(g.edges)
    cut = Fraction(0)
    current = g
    while components(current).count < target:
        degree: dict[int, Fraction] = {}
        for e in live:
            degree[e.u] = degree.get(e.u, Fraction(0)) + e.weight
            degree[e.v] = degree.get(e.v, Fraction(0)) + e.weight
        v = min(degree, key=lambda x: (degree[x], x))
        cut += degree[v]
        live = [e for e in live if v not in (e.u, e.v)]
        current = Graph(g.n, tuple(live))
    return cut


def _tie_key(ids: Iterable[int], weight, policy: TieBreak, last_edges: frozenset[int]):
    ids = tuple(sorted(ids))
    if policy is TieBreak.AVOID_LAST_COMPONENT:
        return (weight, any(i in last_edges for i in ids), ids)
    return (weight, ids)


def _last_component_edges(g: Graph) -> frozenset[int]:
    lab = components(g)
    last = lab.count - 1
    return frozenset(e.id for e in g.edges if lab.labels[e.u] == last)


def min_split_bruteforce(
    g: Graph, h: int, policy: TieBreak = TieBreak.CANONICAL_LEX
) -> SplitResult:
    """Minimum h-way split by exhaustive partition enumeration.

    Vertices are assigned to blocks in restricted-growth order; branches whose
    partial inter-block weight already exceeds the incumbent are pruned. All
    partitions of minimum weight are kept so the tie-break sees every optimum.
    """
    if h < 2:
        raise InfeasibleError(f"h must be >= 2, got {h}")
    blocks = _check_feasible(g, h)
    if g.n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(
            f"brute force refuses n={g.n} > {BRUTE_FORCE_LIMIT}; graph too large to enumerate"
        )
    n = g.n
    weights, scale = _scaled_weights(g)

    # heavier vertices first tightens pruning
    wdeg = [0] * n
    for e in g.edges:
        wdeg[e.u] += weights[e.id]
        wdeg[e.v] += weights[e.id]
    order = sorted(range(n), key=lambda v: (-wdeg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    back: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    agg: dict[tuple[int, int], int] = {}
    for e in g.edges:
        a, b = sorted((pos[e.u], pos[e.v]))
        agg[(a, b)] = agg.get((a, b), 0) + weights[e.id]
    for (a, b), w in agg.items():
        back[b].append((a, w))

    best = int(isolation_upper_bound(g, h) * scale)
    found: list[tuple[int, ...]] = []
    assign = [0] * n

    def search(i: int, used: int, cost: int) -> None:
        nonlocal best, found
        if i == n:
            if used != blocks:
                return
            if cost < best:
                best, found = cost, [tuple(assign)]
            elif cost == best:
                found.append(tuple(assign))
            return
        if n - i < blocks - used:
            return
        for b in range(min(used + 1, blocks)):
            extra = 0
            for j, w in back[i]:
                if assign[j] != b:
                    extra += w
            if cost + extra > best:
                continue
            assign[i] = b
            search(i + 1, max(used, b + 1), cost + extra)

    search(0, 0, 0)
    if not found:
        raise AssertionError("partition search found no split below its own upper bound")

    last_edges = _last_component_edges(g) if policy is TieBreak.AVOID_LAST_COMPONENT else frozenset()
    chosen = None
    for assign_t in found:
        ids = [e.id for e in g.edges if assign_t[pos[e.u]] != assign_t[pos[e.v]]]
        key = _tie_key(ids, 0, policy, last_edges)
        if chosen is None or key < chosen[0]:
            chosen = (key, ids)
    ids = frozenset(chosen[1])
    result = SplitResult(ids, Fraction(best, scale), h)
    if split_cardinality(g, ids) != h:
        raise AssertionError(f"brute force produced a non-{h}-way split")
    return result


def min_cut_maxadjacency(g: Graph) -> SplitResult:
    """Global minimum cut of a connected graph via maximum adjacency orderings.

    Each phase grows an ordering from the smallest surviving super-vertex,
    always adding the most tightly connected vertex (ties to the smallest
    index); the last vertex's connectivity is a cut-of-the-phase, after which
    the last two vertices are merged. Parallel edges are aggregated.
    """
    if g.n < 2:
        raise SolverError("minimum cut needs at least 2 vertices")
    if components(g).count != 1:
        raise SolverError("min_cut_maxadjacency requires a connected graph; use min_split_dp")
    adj: dict[int, dict[int, Fraction]] = {v: {} for v in range(g.n)}
    for e in g.edges:
        adj[e.u][e.v] = adj[e.u].get(e.v, Fraction(0)) + e.weight
        adj[e.v][e.u] = adj[e.v].get(e.u, Fraction(0)) + e.weight
    merged = {v: [v] for v in range(g.n)}

    best_weight: Fraction | None = None
    best_side: list[int] = []
    while len(adj) > 1:
        alive = sorted(adj)
        start = alive[0]
        conn = {v: Fraction(0) for v in alive}
        in_order = {start}
        for u, w in adj[start].items():
            conn[u] += w
        prev, last = None, start
        while len(in_order) < len(alive):
            nxt = max((v for v in alive if v not in in_order), key=lambda v: (conn[v], -v))
            in_order.add(nxt)
            prev, last = last, nxt
            for u, w in adj[nxt].items():
                if u not in in_order:
                    conn[u] += w
        phase_cut = conn[last]
        if best_weight is None or phase_cut < best_weight:
            best_weight, best_side = phase_cut, list(merged[last])
        # merge last into prev
        for u, w in adj.pop(last).items():
            del adj[u][last]
            if u != prev:
                adj[prev][u] = adj[prev].get(u, Fraction(0)) + w
                adj[u][prev] = adj[u].get(prev, Fraction(0)) + w
        merged[prev].extend(merged.pop(last))

    side = set(best_side)
    ids = frozenset(e.id for e in g.edges if (e.u in side) != (e.v in side))
    return SplitResult(ids, best_weight, 2)


def lex_min_cut(g: Graph) -> SplitResult:
    """The canonical-lex minimum cut of a connected graph.

    Weights are rescaled to integers w and replaced by ``w * S - 2**(M - id)``
    with S larger than the whole perturbation. The perturbed optimum is then
    unique: a minimum cut for the true weights whose sorted id list is
    smallest (two distinct minimum cuts are never nested when weights are
    positive, so the order by perturbation agrees with the list order).
    """
    weights, scale = _scaled_weights(g)
    top = max((e.id for e in g.edges), default=0) + 1
    big = 1 << (top + 2)
    perturbed = Graph(
        g.n,
        tuple(
            Edge(e.id, e.u, e.v, Fraction(weights[e.id] * big - (1 << (top - e.id))))
            for e in g.edges
        ),
    )
    ids = min_cut_maxadjacency(perturbed).edge_ids
    return SplitResult(ids, g.weight_of(ids), 2)


def contract_heavy_edges(g: Graph, bound: Fraction) -> tuple[Graph, list[int]]:
    """Merge the endpoints of every edge heavier than ``bound``.

    Returns the contracted graph (surviving edges keep their ids, edges inside
    a merged group are dropped) and the map old vertex -> new vertex.
    """
    ds = DisjointSet(g.n)
    for e in g.edges:
        if e.weight > bound:
            ds.union(e.u, e.v)
    new_index: dict[int, int] = {}
    mapping = []
    for v in range(g.n):
        r = ds.find(v)
        if r not in new_index:
            new_index[r] = len(new_index)
        mapping.append(new_index[r])
    edges = tuple(
        Edge(e.id, mapping[e.u], mapping[e.v], e.weight)
        for e in g.edges
        if mapping[e.u] != mapping[e.v]
    )
    return Graph(len(new_index), edges), mapping


@lru_cache(maxsize=8192)
def _component_min_cut(sub: Graph, j: int) -> SplitResult:
    """Minimum j-way cut of a connected graph, lexicographically smallest among ties.

    j = 2 goes through the maximum-adjacency cut, larger j through enumeration.

    Edges heavier than a known feasible cut can never be in an optimum, so
    they are contracted first; this is what keeps clique-with-heavy-edges
    instances inside the enumeration limit.
    """
    reduced, _ = contract_heavy_edges(sub, isolation_upper_bound(sub, j))
    if j == 2:
        res = lex_min_cut(reduced)
    elif reduced.n <= BRUTE_FORCE_LIMIT:
        res = min_split_bruteforce(reduced, j, TieBreak.CANONICAL_LEX)
    else:
        raise SizeLimitError(
            f"component with {sub.n} vertices ({reduced.n} after contraction) "
            f"exceeds brute-force limit {BRUTE_FORCE_LIMIT} for a {j}-way cut"
        )
    return SplitResult(res.edge_ids, res.weight, j)


def min_split_dp(
    g: Graph, h: int, policy: TieBreak = TieBreak.CANONICAL_LEX
) -> SplitResult:
    """Minimum h-way split of a possibly disconnected graph.

    Each component c contributes a j_c-way cut; a knapsack over components
    picks the j_c with sum(j_c - 1) = h - 1 of least total weight. Ties follow
    ``policy`` over the combined edge set.
    """
    _check_feasible(g, h)
    if h == 1:
        return SplitResult(frozenset(), Fraction(0), 1)
    lab = components(g)
    groups = lab.members()
    last = len(groups) - 1
    need = h - 1

    # state: extra components used -> (key, edge ids)
    states: dict[int, tuple[tuple, tuple[int, ...]]] = {0: ((Fraction(0), False, ()), ())}
    # capacity[c]: most extra components obtainable from groups[c:]
    capacity = [0] * (len(groups) + 1)
    for c in range(len(groups) - 1, -1, -1):
        capacity[c] = capacity[c + 1] + len(groups[c]) - 1
    for c, verts in enumerate(groups):
        options: list[tuple[int, SplitResult]] = []
        if len(verts) > 1:
            sub, _ = induced_subgraph(g, verts)
            lo = max(1, need - capacity[c + 1] - max(states))
            for extra in range(lo, min(len(verts) - 1, need) + 1):
                options.append((extra, _component_min_cut(sub, extra + 1)))
        nxt = dict(states)
        for used, (key, ids) in states.items():
            for extra, res in options:
                total = used + extra
                if total > need:
                    break
                merged = tuple(sorted(ids + tuple(res.edge_ids)))
                touches = key[1] or c == last
                cand = (key[0] + res.weight, touches, merged)
                if total not in nxt or _rank(cand, policy) < _rank(nxt[total][0], policy):
                    nxt[total] = (cand, merged)
        states = nxt

    if need not in states:
        raise InfeasibleError(f"no {h}-way split exists")
    key, ids = states[need]
    result = SplitResult(frozenset(ids), key[0], h)
    if split_cardinality(g, result.edge_ids) != h:
        raise AssertionError(f"dp produced a non-{h}-way split")
    return result


def _rank(key: tuple, policy: TieBreak) -> tuple:
    weight, touches, ids = key
    if policy is TieBreak.AVOID_LAST_COMPONENT:
        return (weight, touches, ids)
    return (weight, ids)


def star_closure(g: Graph, heavy: Fraction) -> Graph:
    """Connect every component to one new vertex with an edge of weight ``heavy``.

    The new vertex gets index n and is joined to the smallest vertex of each
    component; new edge ids continue after the largest existing id.
    """
    heavy = Fraction(heavy)
    if heavy <= 0:
        raise SolverError("heavy weight must be positive")
    hub = g.n
    next_id = max((e.id for e in g.edges), default=-1) + 1
    extra = tuple(
        Edge(next_id + i, members[0], hub, heavy)
        for i, members in enumerate(components(g).members())
    )
    return Graph(g.n + 1, g.edges + extra)
