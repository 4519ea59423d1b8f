"""Closed-form genus arithmetic.

Everything here is integer arithmetic on spectra: the defect function
f_K(c) = g(E(K)) + c - g(E(K)^(c)), the genus of drilled exteriors, the
genus of drilled exteriors of connected sums, amalgamation, and the genus
of the Seifert fibred pieces Q^(b,c).

For m-small knots the values are exact.  Without m-smallness only the lower
bound f_K(c) >= i and the trivial 0 <= f_K(c) <= c survive, so results are
returned as :class:`GenusBound` intervals.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyFactorList, InadmissibleKnot, NonPositiveHoleCount, NotMSmall
from .spectrum import KnotSpectrum

__all__ = [
    "GenusBound",
    "DefectProfile",
    "DrilledGenusQuery",
    "SumFactorization",
    "threshold_index",
    "defect",
    "defect_profile",
    "drilled_genus",
    "connected_sum_drilled_genus",
    "composition_genus",
    "amalgamated_genus",
    "q_manifold_genus",
    "relative_genus_q",
]


@dataclass(frozen=True)
class GenusBound:
    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"empty bound [{self.lower}, {self.upper}]")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"genus only known to lie in [{self.lower}, {self.upper}]")
        return self.lower

    def __str__(self) -> str:
        return str(self.lower) if self.exact else f"[{self.lower}, {self.upper}]"


@dataclass(frozen=True)
class DefectProfile:
    """Tabulated f_K(0..c_max) for an m-small knot."""

    spectrum: KnotSpectrum
    values: tuple[int, ...]

    @property
    def c_max(self) -> int:
        return len(self.values) - 1

    @property
    def thresholds(self) -> tuple[int, ...]:
        """The c at which the table steps up (the b_i* that fall inside the table)."""
        return tuple(c for c in range(1, len(self.values)) if self.values[c] != self.values[c - 1])

    def __getitem__(self, c: int) -> int:
        return self.values[c]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DrilledGenusQuery:
    spectrum: KnotSpectrum
    c: int

    def __post_init__(self) -> None:
        if self.c < 0:
            raise ValueError(f"number of drilled curves must be >= 0, got {self.c}")

    def evaluate(self) -> GenusBound:
        return drilled_genus(self.spectrum, self.c)


@dataclass(frozen=True)
class SumFactorization:
    """Witness for a connected-sum genus: each factor with its drilled count c_i."""

    factors: tuple[tuple[KnotSpectrum, int], ...]
    total_c: int

    def __post_init__(self) -> None:
        if not self.factors:
            raise EmptyFactorList("a factorization needs at least one factor")
        if any(ci < 0 for _, ci in self.factors):
            raise ValueError("drilled counts must be nonnegative")
        if sum(ci for _, ci in self.factors) != self.total_c + len(self.factors) - 1:
            raise ValueError("drilled counts must sum to total_c + n - 1")

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(ci for _, ci in self.factors)


def _require_admissible(spectrum: KnotSpectrum) -> None:
    if not spectrum.admissible:
        raise InadmissibleKnot(f"{spectrum.name}: g(E(K)) = g(M), no bridge indices are defined")


def threshold_index(spectrum: KnotSpectrum, c: int) -> int:
    """The unique 0 <= i <= g with b_i* <= c < b_{i+1}*."""
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    return bisect_right(spectrum.bridge_indices, c)


def defect(spectrum: KnotSpectrum, c: int) -> GenusBound:
    """Bounds on f_K(c); exact when the knot is m-small."""
    _require_admissible(spectrum)
    i = threshold_index(spectrum, c)
    return GenusBound(i, i if spectrum.m_small else c)


def defect_profile(spectrum: KnotSpectrum, c_max: int) -> DefectProfile:
    _require_admissible(spectrum)
    if not spectrum.m_small:
        raise NotMSmall(f"{spectrum.name}: f_K is only determined for m-small knots")
    if c_max < 0:
        raise ValueError(f"c_max must be >= 0, got {c_max}")
    return DefectProfile(spectrum, tuple(threshold_index(spectrum, c) for c in range(c_max + 1)))


def drilled_genus(spectrum: KnotSpectrum, c: int) -> GenusBound:
    """g(E(K)^(c)) = g(E(K)) + c - f_K(c)."""
    f = defect(spectrum, c)
    base = spectrum.exterior_genus + c
    return GenusBound(base - f.upper, base - f.lower)


def composition_genus(spectra: Sequence[KnotSpectrum], counts: Sequence[int]) -> int:
    """Genus of the Heegaard surface amalgamated along swallow-follow tori for one choice of c_i.

    This is sum g(E(K_i)^(c_i)) - (n-1), an upper bound on the genus of the
    drilled connected sum for every admissible choice of counts.
    """
    if len(spectra) != len(counts):
        raise ValueError("need one drilled count per factor")
    return sum(drilled_genus(k, ci).value for k, ci in zip(spectra, counts)) - (len(spectra) - 1)


def connected_sum_drilled_genus(
    factors: Sequence[KnotSpectrum], c: int = 0
) -> tuple[GenusBound, SumFactorization]:
    """Genus of E(K_1 # ... # K_n)^(c) for m-small factors, with a minimizing witness.

    Minimizing sum g(E(K_i)^(c_i)) - (n-1) over sum c_i = c + n - 1 is the
    same as maximizing sum f_i(c_i), which the capped DP in
    :func:`tunnelgr.optimize.max_defect_sum_mixed` does exactly.
    """
    from .optimize import max_defect_sum_mixed

    if not factors:
        raise EmptyFactorList("connected sum of zero knots")
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    for k in factors:
        _require_admissible(k)
        if not k.m_small:
            raise NotMSmall(f"{k.name}: connected-sum genus is only exact for m-small factors")
    n = len(factors)
    best, counts = max_defect_sum_mixed(factors, c + n - 1)
    genus = sum(k.exterior_genus for k in factors) + c - best
    witness = SumFactorization(tuple(zip(factors, counts)), c)
    return GenusBound(genus, genus), witness


def amalgamated_genus(g1: int, g2: int, component_genera: Sequence[int]) -> int:
    """Genus of the amalgamation of two splittings along a surface F = F_1 u ... u F_m."""
    if not component_genera:
        raise ValueError("the amalgamating surface needs at least one component")
    if min(g1, g2, *component_genera) < 0:
        raise ValueError("genera must be nonnegative")
    m = len(component_genera)
    return g1 + g2 - sum(component_genera) + (m - 1)


def q_manifold_genus(b: int, c: int, complementary: bool) -> int:
    """Heegaard genus of Q^(b,c): b+c for complementary fibre slopes, b+c+1 otherwise."""
    if b < 1 or c < 1:
        raise NonPositiveHoleCount(f"Q^(b,c) needs b, c >= 1 (got b={b}, c={c})")
    return b + c if complementary else b + c + 1


def relative_genus_q(c: int, complementary: bool) -> int:
    """Genus of Q^(c) relative to an annular decomposition of one boundary torus."""
    if c < 1:
        raise NonPositiveHoleCount(f"Q^(c) needs c >= 1 (got c={c})")
    return c if complementary else c + 1
