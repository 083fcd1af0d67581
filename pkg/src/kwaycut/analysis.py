"""Exact evaluation of f(k, h), the greedy approximation ratios and the
inequalities they rest on.

``f(k, h) = (2 - h/k) * (h - 1)/(k - 1)`` is the fraction of the edges of the
complete graph K_k that are covered by ``h - 1`` of its vertices. Every value
here is a :class:`fractions.Fraction`; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .greedy import SequenceSpec, derive_h_sequence


class DomainError(ValueError):
    pass


def f(k: int, h: int) -> Fraction:
    if h < 1 or k < max(2, h):
        raise DomainError(f"f(k={k}, h={h}) requires h >= 1 and k >= max(2, h)")
    return Fraction((2 * k - h) * (h - 1), k * (k - 1))


def covered_edges(k: int, j: int) -> int:
    """Number of edges of K_k with at least one endpoint among j fixed vertices."""
    return comb(k, 2) - comb(k - j, 2)


def theoretical_ratio(spec: SequenceSpec) -> Fraction:
    """Approximation ratio of iterative-split for ``spec``: 2 - sum C(h_i,2) / C(k,2)."""
    k = spec.k
    ratio = 2 - Fraction(sum(comb(h, 2) for h in spec.hs), comb(k, 2))
    if ratio != sum((f(k, h) for h in spec.hs), Fraction(0)):
        raise ArithmeticError(f"closed-form ratio disagrees with sum of f for {spec}")
    return ratio


def h_split_ratio(k: int, h: int) -> Fraction:
    """Approximation ratio of iterative-h-split: 2 - h/k + (h-1-r) r / (k (k-1))."""
    if not 2 <= h <= k:
        raise DomainError(f"need 2 <= h <= k, got h={h}, k={k}")
    r = (k - 1) % (h - 1)
    ratio = 2 - Fraction(h, k) + Fraction((h - 1 - r) * r, k * (k - 1))
    if ratio != theoretical_ratio(derive_h_sequence(k, h)):
        raise ArithmeticError(f"h-split ratio disagrees with sequence ratio at k={k}, h={h}")
    return ratio


@dataclass(frozen=True)
class FQuantities:
    D: Fraction
    Wprime: Fraction
    F: Fraction


def lemma_F_quantities(k: int, a: int, hs: Sequence[int]) -> FQuantities:
    """D, W' and F = max(D, W') for a nondecreasing ``hs`` (q >= 2) and offset ``a``."""
    hs = list(hs)
    if len(hs) < 2:
        raise DomainError("need q >= 2")
    if hs[0] < 2 or any(x > y for x, y in zip(hs, hs[1:])):
        raise DomainError(f"sequence must satisfy 2 <= h_1 <= ... <= h_q, got {hs}")
    if not 0 <= a <= hs[0] - 1:
        raise DomainError(f"need 0 <= a <= h_1 - 1, got a={a}")
    if k - 1 < sum(h - 1 for h in hs):
        raise DomainError(f"need k - 1 >= sum(h_i - 1), got k={k}, hs={hs}")
    D = f(k - a, hs[0] - a) + sum((f(k - a, h) for h in hs[1:]), Fraction(0))
    lead = f(k, a + 1)
    Wprime = lead + (1 - lead) * D
    return FQuantities(D, Wprime, max(D, Wprime))


@dataclass
class FactReport:
    fact_name: str
    grid: str
    checked: int = 0
    violations: list[tuple[dict, Fraction, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, params: dict, lhs: Fraction, rhs: Fraction, *, equality: bool = False) -> None:
        self.checked += 1
        if (lhs != rhs) if equality else (lhs > rhs):
            self.violations.append((params, lhs, rhs))

    def to_dict(self) -> dict:
        return {
            "fact_name": self.fact_name,
            "grid": self.grid,
            "checked": self.checked,
            "violations": [
                {"params": p, "lhs": str(lhs), "rhs": str(rhs)} for p, lhs, rhs in self.violations
            ],
        }


def nondecreasing_sequences(budget: int, q_max: int, h_min: int = 2) -> Iterator[tuple[int, ...]]:
    """All nondecreasing (h_1, ..., h_q), 1 <= q <= q_max, h_1 >= h_min, sum(h_i - 1) <= budget."""

    def extend(prefix: tuple[int, ...], lo: int, left: int) -> Iterator[tuple[int, ...]]:
        if prefix:
            yield prefix
        if len(prefix) == q_max:
            return
        for h in range(lo, left + 2):
            yield from extend(prefix + (h,), h, left - (h - 1))

    yield from extend((), h_min, budget)


def _monotonicity(k_max: int) -> FactReport:
    rep = FactReport("monotonicity", f"2 <= k <= {k_max}; h in [1, k]")
    for k in range(2, k_max + 1):
        for h in range(1, k):
            rep.check({"k": k, "h": h, "direction": "h"}, f(k, h), f(k, h + 1))
        for h in range(1, k + 1):
            if k + 1 <= k_max:
                rep.check({"k": k, "h": h, "direction": "k"}, f(k + 1, h), f(k, h))
    return rep


def _product(k_max: int) -> FactReport:
    rep = FactReport("product_bound", f"a >= 0, h >= 2, a + h <= k <= {k_max}")
    for k in range(2, k_max + 1):
        for h in range(2, k + 1):
            for a in range(0, k - h + 1):
                lhs = f(k - a, h) * (1 - f(k, a + 1))
                rep.check({"k": k, "h": h, "a": a}, lhs, f(k, h))
    return rep


def _two_sets(k_max: int) -> FactReport:
    # At h1 = k - 1 (so h2 = 0) the second term has the undefined factor
    # f(1, 1) multiplied by 1 - f(k, k) = 0; those points are skipped.
    rep = FactReport(
        "two_sets_identity",
        f"h1, h2 >= 0, max(h1 + h2 + 1, 2) <= k <= {k_max}, k - h1 >= 2; exact equality",
    )
    for k in range(2, k_max + 1):
        for h1 in range(0, k):
            for h2 in range(0, k - h1):
                if k - h1 < 2:
                    continue
                lead = f(k, h1 + 1)
                rhs = lead + f(k - h1, h2 + 1) * (1 - lead)
                rep.check({"k": k, "h1": h1, "h2": h2}, f(k, h1 + h2 + 1), rhs, equality=True)
    return rep


def _difference(k_max: int) -> FactReport:
    rep = FactReport("difference_bound", f"a >= 0, h2 >= h1 >= 2, a + h2 <= k <= {k_max}")
    for k in range(2, k_max + 1):
        for h2 in range(2, k + 1):
            for h1 in range(2, h2 + 1):
                for a in range(0, k - h2 + 1):
                    lhs = f(k - a, h2) - f(k, h2)
                    rhs = Fraction(h2 - 1, h1 - 1) * (f(k - a, h1) - f(k, h1))
                    rep.check({"k": k, "h1": h1, "h2": h2, "a": a}, lhs, rhs)
    return rep


def _weighted_sum(k_max: int) -> FactReport:
    rep = FactReport("weighted_sum_bound", f"0 <= a < h, h >= 2, a + h <= k <= {k_max}")
    for k in range(2, k_max + 1):
        for h in range(2, k + 1):
            for a in range(0, min(h, k - h + 1)):
                lhs = f(k - a, h - a) + Fraction(k - h, h - 1) * f(k - a, h)
                rhs = Fraction(k - 1, h - 1) * f(k, h)
                rep.check({"k": k, "h": h, "a": a}, lhs, rhs)
    return rep


def _offset_sum(k_max: int, q_max: int) -> FactReport:
    rep = FactReport(
        "offset_sum_bound",
        f"2 <= k <= {k_max}; nondecreasing hs, q <= {q_max}, sum(h_i - 1) <= k - 1; "
        "0 <= a < h_1; k - a >= 2",
    )
    for k in range(2, k_max + 1):
        for hs in nondecreasing_sequences(k - 1, q_max):
            # k - a = 1 only for hs = (k,), a = k - 1, where f(1, 1) is 0/0
            for a in range(0, min(hs[0], k - 1)):
                lhs = f(k - a, hs[0] - a) + sum((f(k - a, h) for h in hs[1:]), Fraction(0))
                rhs = sum((f(k, h) for h in hs), Fraction(0))
                rep.check({"k": k, "hs": list(hs), "a": a}, lhs, rhs)
    return rep


def _f_bound(k_max: int, q_max: int) -> FactReport:
    rep = FactReport(
        "F_bound",
        f"2 <= k <= {k_max}; nondecreasing hs, 2 <= q <= {q_max}, sum(h_i - 1) <= k - 1; 0 <= a < h_1",
    )
    for k in range(2, k_max + 1):
        for hs in nondecreasing_sequences(k - 1, q_max):
            if len(hs) < 2:
                continue
            bound = sum((f(k, h) for h in hs), Fraction(0))
            for a in range(0, hs[0]):
                rep.check({"k": k, "hs": list(hs), "a": a}, lemma_F_quantities(k, a, hs).F, bound)
    return rep


def verify_facts(k_max: int = 12, q_max: int = 4) -> list[FactReport]:
    """Sweep every analytic fact over its integer domain up to ``k_max``.

    Returns one report per inequality (six facts about f plus the F bound);
    a violation is recorded as data, never raised.
    """
    if k_max < 3:
        raise DomainError("k_max must be >= 3")
    if q_max < 2:
        raise DomainError("q_max must be >= 2")
    return [
        _monotonicity(k_max),
        _product(k_max),
        _two_sets(k_max),
        _difference(k_max),
        _weighted_sum(k_max),
        _offset_sum(k_max, q_max),
        _f_bound(k_max, q_max),
    ]
