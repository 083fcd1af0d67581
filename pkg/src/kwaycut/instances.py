"""Instance generators: the tight worst-case family and seeded random graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .graph import Edge, Graph, components
from .greedy import SequenceSpec


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class TightInstance:
    """Cliques H_1..H_q, K on k vertices each (in that vertex order).

    In H_i the edges touching its last h_i - 1 vertices (the set E_i) weigh 1
    and all other edges weigh ``heavy_weight``; every edge of K weighs 1.
    When star-closed, vertex (q+1)*k is a hub joined by heavy edges to the
    first vertex of every clique.
    """

    graph: Graph
    spec: SequenceSpec
    heavy_weight: Fraction
    optimal_cut_edge_ids: frozenset[int]
    adversarial_split_edge_ids: tuple[frozenset[int], ...]
    star_closed: bool

    @property
    def optimal_weight(self) -> Fraction:
        return Fraction(comb(self.spec.k, 2))

    @property
    def adversarial_weight(self) -> Fraction:
        return self.graph.weight_of(frozenset().union(*self.adversarial_split_edge_ids))

    def heavy_edge_ids(self) -> frozenset[int]:
        return frozenset(e.id for e in self.graph.edges if e.weight == self.heavy_weight)


def make_tight_instance(spec: SequenceSpec, star_closed: bool = True) -> TightInstance:
    """Build the instance on which greedy may pay exactly its worst-case ratio.

    Edge ids are laid out as: all E_i (in order of i), heavy clique edges,
    hub edges, then K. Canonical-lex tie-breaking therefore prefers E_i over
    the equally cheap cuts inside K.
    """
    if not isinstance(spec, SequenceSpec):
        raise TypeError("spec must be a SequenceSpec")
    k, q = spec.k, spec.q
    heavy = Fraction(k * k * q * comb(k, 2) + 1)
    one = Fraction(1)

    light: list[tuple[int, int, Fraction]] = []
    heavy_edges: list[tuple[int, int, Fraction]] = []
    marked: list[int] = []
    for i, h in enumerate(spec.hs):
        base = i * k
        covered = set(range(base + k - (h - 1), base + k))
        start = len(light)
        for u, v in combinations(range(base, base + k), 2):
            if u in covered or v in covered:
                light.append((u, v, one))
            else:
                heavy_edges.append((u, v, heavy))
        marked.append(len(light) - start)

    k_base = q * k
    n = (q + 1) * k
    if star_closed:
        hub = n
        n += 1
        heavy_edges.extend((c * k, hub, heavy) for c in range(q + 1))
    k_edges = [(u, v, one) for u, v in combinations(range(k_base, k_base + k), 2)]

    edges = tuple(Edge(i, u, v, w) for i, (u, v, w) in enumerate(light + heavy_edges + k_edges))
    graph = Graph(n, edges)

    adversarial = []
    pos = 0
    for count in marked:
        adversarial.append(frozenset(range(pos, pos + count)))
        pos += count
    first_k = len(light) + len(heavy_edges)
    optimal = frozenset(range(first_k, first_k + len(k_edges)))
    return TightInstance(graph, spec, heavy, optimal, tuple(adversarial), star_closed)


@dataclass(frozen=True)
class RandomGraphConfig:
    n: int
    edge_probability: Fraction = Fraction(1, 2)
    weight_range: tuple[int, int] = (1, 10)
    seed: int = 0
    max_attempts: int = 1000


def make_random_graph(cfg: RandomGraphConfig) -> Graph:
    """Connected simple G(n, p) graph with uniform integer weights.

    Pairs (u, v), u < v, are visited in lexicographic order; each is kept when
    ``randrange(den) < num`` for p = num/den and then drawn a weight with
    ``randint(lo, hi)``. Disconnected draws are discarded and redrawn from the
    same generator, so the output depends only on the config.
    """
    p = Fraction(cfg.edge_probability)
    lo, hi = cfg.weight_range
    if cfg.n < 2:
        raise ValueError("n must be >= 2")
    if not 0 < p <= 1:
        raise ValueError("edge probability must lie in (0, 1]")
    if not 1 <= lo <= hi:
        raise ValueError("weight range must satisfy 1 <= lo <= hi")
    rng = random.Random(cfg.seed)
    for _ in range(cfg.max_attempts):
        triples = []
        for u, v in combinations(range(cfg.n), 2):
            if rng.randrange(p.denominator) < p.numerator:
                triples.append((u, v, rng.randint(lo, hi)))
        g = Graph.from_edges(cfg.n, triples)
        if components(g).count == 1:
            return g
    raise GenerationError(
        f"no connected graph after {cfg.max_attempts} draws (n={cfg.n}, p={p})"
    )
