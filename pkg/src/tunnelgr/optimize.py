"""Maximizing the defect sum  sum_j f_K(c_j)  over compositions.

Three independent routes to the same optimum:

* :func:`max_defect_sum_bruteforce` enumerates compositions directly and only
  ever reads f_K off a :class:`~tunnelgr.genus.DefectProfile` table;
* :func:`max_defect_sum_knapsack` solves the equivalent unbounded knapsack
  (items of weight b_i* and value i) by dynamic programming;
* :func:`lp_relaxation` gives the real-valued optimum in closed form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import EnumerationTooLarge, InadmissibleKnot, NotMSmall
from .genus import DefectProfile, threshold_index
from .spectrum import KnotSpectrum

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "Composition",
    "KnapsackSolution",
    "LpSolution",
    "compositions",
    "partitions",
    "max_defect_sum_bruteforce",
    "max_defect_sum_knapsack",
    "max_defect_sum_mixed",
    "lp_relaxation",
    "normalize_composition",
]

BRUTE_FORCE_LIMIT = 50_000_000


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]
    capacity: int

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise ValueError(f"parts must be nonnegative: {self.parts}")
        if sum(self.parts) != self.capacity:
            raise ValueError(f"parts {self.parts} do not sum to {self.capacity}")

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Composition":
        parts = tuple(parts)
        return cls(parts, sum(parts))


@dataclass(frozen=True)
class KnapsackSolution:
    counts: tuple[int, ...]
    value: int
    weight: int
    capacity: int

    def as_composition(self, spectrum: KnotSpectrum, parts: int | None = None) -> Composition:
        """Lay the chosen items out as c_1 >= c_2 >= ... with the slack in one extra part."""
        items = [b for b, k in sorted(zip(spectrum.bridge_indices, self.counts), reverse=True) for _ in range(k)]
        out = items + [self.capacity - self.weight]
        if parts is not None:
            if parts < len(out):
                raise ValueError(f"{len(out)} parts needed, only {parts} available")
            out += [0] * (parts - len(out))
        return Composition(tuple(out), self.capacity)


@dataclass(frozen=True)
class LpSolution:
    pivot_index: int
    x: Fraction
    value: Fraction
    argmax: frozenset[int]
    capacity: Fraction


def _require_exact(spectrum: KnotSpectrum) -> None:
    if not spectrum.admissible:
        raise InadmissibleKnot(f"{spectrum.name}: no bridge indices are defined")
    if not spectrum.m_small:
        raise NotMSmall(f"{spectrum.name}: f_K is only determined for m-small knots")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of ``total`` into ``parts`` ordered parts (stars and bars)."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def partitions(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing weak compositions of ``total`` into exactly ``parts`` parts."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def max_defect_sum_bruteforce(
    profiles: Sequence[DefectProfile], capacity: int, limit: int = BRUTE_FORCE_LIMIT
) -> tuple[int, Composition]:
    """Exhaustive maximum of sum_j f_j(c_j) over c_1 + ... + c_n = capacity.

    When every profile is the same table the objective is symmetric, so only
    non-increasing compositions are visited; otherwise all of them are.
    """
    n = len(profiles)
    if n == 0:
        raise ValueError("need at least one profile")
    if capacity < 0:
        raise ValueError(f"capacity must be >= 0, got {capacity}")
    count = math.comb(capacity + n - 1, n - 1)
    if count > limit:
        raise EnumerationTooLarge(f"{count} compositions of {capacity} into {n} parts exceeds limit {limit}")
    short = [p.c_max for p in profiles if p.c_max < capacity]
    if short:
        raise ValueError(f"profile only tabulated up to c={short[0]}, need {capacity}")

    tables = [p.values for p in profiles]
    symmetric = all(t == tables[0] for t in tables)
    candidates = partitions(capacity, n) if symmetric else compositions(capacity, n)
    best_value, best_parts = -1, None
    for parts in candidates:
        value = sum(t[c] for t, c in zip(tables, parts))
        if value > best_value:
            best_value, best_parts = value, parts
    return best_value, Composition(best_parts, capacity)


def max_defect_sum_knapsack(spectrum: KnotSpectrum, capacity: int) -> KnapsackSolution:
    """Maximize sum_i k_i * i subject to sum_i k_i * b_i* <= capacity, k_i >= 0 integers."""
    _require_exact(spectrum)
    if capacity < 0:
        raise ValueError(f"capacity must be >= 0, got {capacity}")
    weights = spectrum.bridge_indices
    best = [0] * (capacity + 1)
    # choice[w] = item index taken last at budget w, or -1 when budget w-1 is as good
    choice = [-1] * (capacity + 1)
    for w in range(1, capacity + 1):
        best[w] = best[w - 1]
        for i, b in enumerate(weights, start=1):
            if b <= w and best[w - b] + i > best[w]:
                best[w] = best[w - b] + i
                choice[w] = i
    counts = [0] * len(weights)
    w = capacity
    while w > 0:
        i = choice[w]
        if i < 0:
            w -= 1
        else:
            counts[i - 1] += 1
            w -= weights[i - 1]
    weight = sum(k * b for k, b in zip(counts, weights))
    return KnapsackSolution(tuple(counts), best[capacity], weight, capacity)


def max_defect_sum_mixed(spectra: Sequence[KnotSpectrum], capacity: int) -> tuple[int, tuple[int, ...]]:
    """Maximize sum_j f_j(c_j) over c_1 + ... + c_n = capacity with a different knot per part.

    Each c_j is capped at b_{g_j}* since f_j is constant beyond it; any
    leftover capacity goes to the last factor, which f_j's monotonicity
    makes harmless.
    """
    for k in spectra:
        _require_exact(k)
    if not spectra:
        raise ValueError("need at least one factor")
    if capacity < 0:
        raise ValueError(f"capacity must be >= 0, got {capacity}")
    # best[s] = max defect sum of the factors so far using at most s drilled curves
    best = [0] * (capacity + 1)
    picks: list[list[int]] = []
    for k in spectra:
        cap = min(k.bridge_indices[-1], capacity)
        f = [threshold_index(k, c) for c in range(cap + 1)]
        new = [0] * (capacity + 1)
        pick = [0] * (capacity + 1)
        for s in range(capacity + 1):
            for cj in range(min(cap, s) + 1):
                v = best[s - cj] + f[cj]
                if v > new[s]:
                    new[s], pick[s] = v, cj
        best = new
        picks.append(pick)
    counts = [0] * len(spectra)
    s = capacity
    for j in range(len(spectra) - 1, -1, -1):
        counts[j] = picks[j][s]
        s -= counts[j]
    counts[-1] += capacity - sum(counts)
    return best[capacity], tuple(counts)


def lp_relaxation(spectrum: KnotSpectrum, capacity: Fraction | int) -> LpSolution:
    """Real-valued optimum of the knapsack: all capacity on the best value/weight ratio i/b_i*.

    Ties are broken towards the smallest index; the full argmax is reported.
    """
    if not spectrum.admissible:
        raise InadmissibleKnot(f"{spectrum.name}: no bridge indices are defined")
    capacity = Fraction(capacity)
    if capacity < 0:
        raise ValueError(f"capacity must be >= 0, got {capacity}")
    ratios = [Fraction(i, b) for i, b in enumerate(spectrum.bridge_indices, start=1)]
    top = max(ratios)
    argmax = frozenset(i for i, r in enumerate(ratios, start=1) if r == top)
    i0 = min(argmax)
    x = capacity / spectrum.bridge_indices[i0 - 1]
    return LpSolution(i0, x, x * i0, argmax, capacity)


def _normalize_once(spectrum: KnotSpectrum, parts: list[int], capacity: int) -> list[int]:
    parts = sorted(parts, reverse=True)
    b = spectrum.bridge_indices
    # l = number of leading parts with nonzero defect
    l = sum(1 for p in parts if p >= b[0])
    out = [b[threshold_index(spectrum, p) - 1] for p in parts[:l]]
    residual = capacity - sum(out)
    if l < len(parts):
        out.append(residual)
        out += [0] * (len(parts) - l - 1)
    else:
        out[-1] += residual
    return sorted(out, reverse=True)


def normalize_composition(spectrum: KnotSpectrum, composition: Composition) -> Composition:
    """Bring a composition to the shape of a canonical maximizer without lowering sum f_K.

    Parts are sorted non-increasing, every part with nonzero defect is rounded
    down to the largest b_j* below it, and what was shaved off is pooled in
    the first zero-defect slot.  Pooling can raise the defect sum, so the
    step is repeated until nothing changes.  With more than capacity // b_1*
    parts (always the case for S_n, where there are capacity + 1 parts) the
    result consists of values from {b_1*, ..., b_g*}, one residual part
    < b_1*, and zeros.
    """
    _require_exact(spectrum)
    parts = list(composition.parts)
    if not parts:
        return composition
    while True:
        nxt = _normalize_once(spectrum, parts, composition.capacity)
        if nxt == parts:
            return Composition(tuple(parts), composition.capacity)
        parts = nxt
