"""Exit criteria. Each test prints one PASS/FAIL line (also collected into the
terminal summary) and enforces its own runtime budget."""

import time
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from kwaycut.analysis import f, h_split_ratio, theoretical_ratio, verify_facts
from kwaycut.graph import components
from kwaycut.greedy import derive_h_sequence, iterative_split
from kwaycut.instances import make_tight_instance
from kwaycut.solvers import (
    TieBreak,
    min_cut_maxadjacency,
    min_split_bruteforce,
    min_split_dp,
)

from conftest import ACCEPTANCE_LINES
from corpus import disconnected_corpus, random_corpus, specs_for


def report(name, ok, detail, elapsed, budget):
    within = elapsed < budget
    line = (f"[{'PASS' if ok and within else 'FAIL'}] {name}: {detail} "
            f"({elapsed:.2f}s, budget {budget}s)")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


@pytest.fixture(scope="module")
def corpus():
    """>= 200 seeded connected graphs, n in 4..9, with brute-force optima for every k."""
    graphs = random_corpus(200, n_min=4, n_max=9, seed_base=0)
    optima = [
        {k: min_split_bruteforce(g, k).weight for k in range(2, g.n + 1)} for g in graphs
    ]
    return graphs, optima


def test_ac1_tight_ratio_exact():
    start = time.perf_counter()
    mismatches, count = [], 0
    for k in range(2, 7):
        for spec in specs_for(k):
            if spec.q > 3:
                continue
            count += 1
            inst = make_tight_instance(spec)
            trace = iterative_split(inst.graph, spec, TieBreak.CANONICAL_LEX)
            optimum = min_split_dp(inst.graph, k).weight
            expected = 2 - Fraction(sum(comb(h, 2) for h in spec.hs), comb(k, 2))
            if optimum != comb(k, 2) or trace.total_weight / optimum != expected:
                mismatches.append((spec, trace.total_weight, optimum))
    report("AC1 tight-ratio exactness (k<=6, q<=3)",
           not mismatches and count > 0, f"{count} specs, {len(mismatches)} mismatches",
           time.perf_counter() - start, 30)


def test_ac2_h_split_formula():
    start = time.perf_counter()
    bad = []
    for k in range(2, 31):
        for h in range(2, k + 1):
            value = h_split_ratio(k, h)
            if value != theoretical_ratio(derive_h_sequence(k, h)):
                bad.append((k, h))
        if k >= 3:
            odd_even = 2 - Fraction(3, k) if k % 2 else 2 - Fraction(3 * k - 4, k * k - k)
            if h_split_ratio(k, 3) != odd_even:
                bad.append((k, 3, "h=3 form"))
    report("AC2 h-split formula = plan ratio (k<=30)",
           not bad, f"{len(bad)} mismatches", time.perf_counter() - start, 1)


def test_ac3_end_to_end_bound(corpus):
    start = time.perf_counter()
    graphs, optima = corpus
    runs, violations = 0, []
    for g, opt in zip(graphs, optima):
        assert components(g).count == 1 and g.n <= 9
        for k in range(2, min(5, g.n) + 1):
            for spec in specs_for(k):
                runs += 1
                weight = iterative_split(g, spec).total_weight
                if weight > theoretical_ratio(spec) * opt[k]:
                    violations.append((g, spec, weight, opt[k]))
    report("AC3 greedy <= ratio * optimum",
           not violations and len(graphs) >= 200,
           f"{len(graphs)} graphs, {runs} greedy runs, {len(violations)} violations",
           time.perf_counter() - start, 300)


def test_ac4_split_vs_cut_bound(corpus):
    start = time.perf_counter()
    graphs, optima = corpus
    pairs, violations = 0, []
    for g, opt in zip(graphs, optima):
        weight = {1: Fraction(0), **opt}
        for k in range(2, g.n + 1):
            for h in range(1, k + 1):
                pairs += 1
                if weight[h] > f(k, h) * weight[k]:
                    violations.append((g, h, k))
    report("AC4 min h-split <= f(k,h) * min k-split",
           not violations, f"{pairs} (graph, h, k) triples, {len(violations)} violations",
           time.perf_counter() - start, 300)


def test_ac5_analytic_sweep():
    start = time.perf_counter()
    reports = verify_facts(12)
    names = {r.fact_name for r in reports}
    bad = sum(len(r.violations) for r in reports)
    two_sets = next(r for r in reports if r.fact_name == "two_sets_identity")
    ok = (bad == 0 and len(reports) == 7 and "F_bound" in names
          and "exact equality" in two_sets.grid and all(r.checked for r in reports))
    report("AC5 analytic sweep, 6 facts + F bound (k_max=12)", ok,
           f"{len(reports)} reports, {sum(r.checked for r in reports)} checks, {bad} violations",
           time.perf_counter() - start, 60)


def test_ac6_oracle_agreement():
    start = time.perf_counter()
    connected = random_corpus(500, n_min=2, n_max=9, seed_base=50_000)
    cut_bad = [g for g in connected
               if min_cut_maxadjacency(g).weight != min_split_bruteforce(g, 2).weight]
    split_graphs = disconnected_corpus(200)
    dp_bad, dp_checks = [], 0
    for g in split_graphs:
        c = components(g).count
        assert 2 <= c <= 3 and g.n <= 10
        for h in range(2, g.n - c + 2):
            dp_checks += 1
            if min_split_dp(g, h).weight != min_split_bruteforce(g, h).weight:
                dp_bad.append((g, h))
    report("AC6 oracle agreement",
           not cut_bad and not dp_bad and len(connected) == 500 and len(split_graphs) == 200,
           f"max-adjacency vs brute force {len(connected)} graphs / {len(cut_bad)} diffs; "
           f"dp vs brute force {dp_checks} checks / {len(dp_bad)} diffs",
           time.perf_counter() - start, 300)


def test_ac7_combinatorial_identity():
    start = time.perf_counter()
    bad = []
    for k in range(2, 51):
        # an edge is covered by vertices 0..j-1 iff its smaller endpoint is < j
        by_min = Counter(min(u, v) for u, v in combinations(range(k), 2))
        covered = 0
        for h in range(1, k + 1):
            if h >= 2:
                covered += by_min[h - 2]
            if f(k, h) != Fraction(covered, comb(k, 2)):
                bad.append((k, h))
    report("AC7 f(k,h) = covered edges / C(k,2), k<=50",
           not bad, f"{len(bad)} mismatches", time.perf_counter() - start, 1)
