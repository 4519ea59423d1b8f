"""Growth rate of the tunnel number under connected sum.

For a knot K write

    S_n = (g(E(nK)) - n g(E(K)) + n - 1) / (n - 1),   n >= 2.

For m-small K, g(E(nK)) = n g(E(K)) - max sum f_K(c_j) over compositions of
n-1 into n parts, and the maximum is the unbounded knapsack value at capacity
n-1.  S_n then converges to min_i (1 - i/b_i*), squeezed between two explicit
rational bounds.  All quantities are exact :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import InadmissibleKnot, NotMSmall, NTooSmall
from .optimize import KnapsackSolution, lp_relaxation, max_defect_sum_knapsack
from .spectrum import KnotSpectrum

__all__ = [
    "GrowthReport",
    "SandwichBound",
    "s_n",
    "growth_rate_closed_form",
    "sandwich_bounds",
    "convergence_report",
    "genus_of_nk",
    "growth_upper_bound_any",
]

Knapsack = Callable[[KnotSpectrum, int], KnapsackSolution]


@dataclass(frozen=True)
class SandwichBound:
    n: int
    k: int
    r: int
    lower: Fraction
    upper: Fraction
    pivot_index: int

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, value: Fraction) -> bool:
        """lower <= value < upper; the upper bound is only strict once k >= 1."""
        if self.k == 0:
            return self.lower <= value <= self.upper
        return self.lower <= value < self.upper


@dataclass
class GrowthReport:
    spectrum: KnotSpectrum
    growth_rate: Fraction
    argmin_indices: frozenset[int]
    exact: bool
    s_table: list[tuple[int, Fraction]] = field(default_factory=list)
    bounds_table: list[tuple[int, Fraction | None, Fraction]] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return all(self.checks.values())

    @property
    def divisible_hits(self) -> list[int]:
        return [n for n, s in self.s_table if s == self.growth_rate]


def _require_exact(spectrum: KnotSpectrum) -> None:
    if not spectrum.admissible:
        raise InadmissibleKnot(f"{spectrum.name}: g(E(K)) = g(M)")
    if not spectrum.m_small:
        raise NotMSmall(f"{spectrum.name}: S_n is only computable for m-small knots")


def _require_n(n: int, least: int = 2) -> None:
    if n < least:
        raise NTooSmall(f"n must be >= {least}, got {n}")


def s_n(spectrum: KnotSpectrum, n: int, knapsack: Knapsack = max_defect_sum_knapsack) -> Fraction:
    _require_exact(spectrum)
    _require_n(n)
    return 1 - Fraction(knapsack(spectrum, n - 1).value, n - 1)


def genus_of_nk(spectrum: KnotSpectrum, n: int, knapsack: Knapsack = max_defect_sum_knapsack) -> int:
    """g(E(nK)) for an m-small knot K."""
    _require_exact(spectrum)
    _require_n(n, 1)
    return n * spectrum.exterior_genus - knapsack(spectrum, n - 1).value


def growth_rate_closed_form(spectrum: KnotSpectrum) -> tuple[Fraction, frozenset[int]]:
    """min_i (1 - i/b_i*) and the indices attaining it.

    Inadmissible knots have growth rate 1 and an empty argmin.  For
    admissible knots that are not m-small the value is only an upper bound.
    """
    if not spectrum.admissible:
        return Fraction(1), frozenset()
    terms = [1 - Fraction(i, b) for i, b in enumerate(spectrum.bridge_indices, start=1)]
    low = min(terms)
    return low, frozenset(i for i, t in enumerate(terms, start=1) if t == low)


def sandwich_bounds(spectrum: KnotSpectrum, n: int) -> SandwichBound:
    """Bounds  ((n-r-1)/(n-1)) * gr  <=  S_n  <  1 - (i0/b_i0*) * k/(k+1)  where n-1 = k*b_i0* + r."""
    _require_exact(spectrum)
    _require_n(n)
    lp = lp_relaxation(spectrum, 1)
    i0 = lp.pivot_index
    b0 = spectrum.bridge_indices[i0 - 1]
    k, r = divmod(n - 1, b0)
    rate = 1 - Fraction(i0, b0)
    lower = Fraction(n - r - 1, n - 1) * rate
    upper = 1 - Fraction(i0, b0) * Fraction(k, k + 1)
    return SandwichBound(n, k, r, lower, upper, i0)


def growth_upper_bound_any(spectrum: KnotSpectrum, n: int) -> Fraction:
    """Strict upper bound on S_n valid for every admissible knot (m-small or not).

    Returns 1 when n - 1 < b_1*, where no index gives a bound.
    """
    if not spectrum.admissible:
        raise InadmissibleKnot(f"{spectrum.name}: g(E(K)) = g(M)")
    _require_n(n)
    best = Fraction(1)
    for i, b in enumerate(spectrum.bridge_indices, start=1):
        k = (n - 1) // b
        if k == 0:
            continue
        best = min(best, 1 - Fraction(i, b) * Fraction(k, k + 1))
    return best


def convergence_report(
    spectrum: KnotSpectrum, n_max: int, knapsack: Knapsack = max_defect_sum_knapsack
) -> GrowthReport:
    """Tabulate S_n and its sandwich bounds for 2 <= n <= n_max and certify the limit.

    Inadmissible knots get rate 1 and empty tables.  Admissible knots that
    are not m-small get exact=False, with only the universal upper bound
    tabulated (lower column None).
    """
    _require_n(n_max)
    rate, argmin = growth_rate_closed_form(spectrum)
    if not spectrum.admissible:
        return GrowthReport(spectrum, rate, argmin, True, notes=["inadmissible: growth rate is 1"])
    if not spectrum.m_small:
        bounds = [(n, None, growth_upper_bound_any(spectrum, n)) for n in range(2, n_max + 1)]
        return GrowthReport(
            spectrum,
            rate,
            argmin,
            False,
            bounds_table=bounds,
            notes=["not m-small: growth rate value is an upper bound only"],
        )

    s_table: list[tuple[int, Fraction]] = []
    bounds_table: list[tuple[int, Fraction | None, Fraction]] = []
    sandwiches: list[SandwichBound] = []
    above_rate = divisible_exact = contained = below_any = True
    for n in range(2, n_max + 1):
        s = s_n(spectrum, n, knapsack)
        sb = sandwich_bounds(spectrum, n)
        s_table.append((n, s))
        bounds_table.append((n, sb.lower, sb.upper))
        sandwiches.append(sb)
        above_rate &= s >= rate
        if sb.r == 0:
            divisible_exact &= s == rate
        contained &= sb.contains(s)
        if (n - 1) >= spectrum.bridge_indices[0]:
            below_any &= s < growth_upper_bound_any(spectrum, n)

    b0 = spectrum.bridge_indices[sandwiches[0].pivot_index - 1]
    # one full residue cycle mod b_i0*; compared with the widest bound in the same cycle,
    # since the width at n_max alone can be narrower than earlier gaps (r = 0 at n_max)
    tail_gap = max(abs(s - rate) for _, s in s_table[-b0:])
    tail_width = max(sb.width for sb in sandwiches[-b0:])
    checks = {
        "S_n >= gr": above_rate,
        "S_n = gr when b_i0* | n-1": divisible_exact,
        "lower <= S_n < upper": contained,
        "S_n < universal upper bound": below_any,
        "tail gap <= tail bound width": tail_gap <= tail_width,
    }
    notes = [f"pivot index i0 = {sandwiches[0].pivot_index}, b_i0* = {b0}"]
    return GrowthReport(spectrum, rate, argmin, True, s_table, bounds_table, checks, notes)
