"""Randomized property suites over a seeded grid of m-small spectra.

Used by ``tunnelgr verify`` and by the acceptance tests.  The knapsack
solver is injectable so that the harness can be checked against a
deliberately broken one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .genus import defect_profile, drilled_genus, q_manifold_genus, relative_genus_q
from .growth import (
    growth_rate_closed_form,
    growth_upper_bound_any,
    s_n,
    sandwich_bounds,
)
from .optimize import (
    BRUTE_FORCE_LIMIT,
    KnapsackSolution,
    lp_relaxation,
    max_defect_sum_bruteforce,
    max_defect_sum_knapsack,
)
from .spectrum import KnotSpectrum, validate_spectrum

__all__ = ["GridConfig", "SuiteResult", "VerificationSummary", "random_spectrum", "spectrum_grid", "run_verification"]

SUITES = ("oracle", "lp", "sequence", "drilled", "qgenus")


@dataclass(frozen=True)
class GridConfig:
    seed: int = 0
    count: int = 200
    max_g: int = 4
    max_b: int = 12
    max_capacity: int = 14
    n_max: int = 40
    drill_span: int = 10
    brute_force_limit: int = BRUTE_FORCE_LIMIT


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, **case: Any) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(case)


@dataclass
class VerificationSummary:
    seed: int
    spectra: int
    suites: dict[str, SuiteResult]
    seconds: float

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites.values())

    def first_failure(self) -> tuple[str, dict[str, Any]] | None:
        for name, suite in self.suites.items():
            if suite.failures:
                return name, suite.failures[0]
        return None


def random_spectrum(rng: random.Random, max_g: int = 4, max_b: int = 12, name: str = "random") -> KnotSpectrum:
    g = rng.randint(1, min(max_g, max_b))
    bridge = sorted(rng.sample(range(1, max_b + 1), g))
    ambient = rng.choice((0, 0, 1, 2))
    return validate_spectrum(
        name=name, ambient_genus=ambient, exterior_genus=ambient + g, bridge_indices=bridge, m_small=True
    )


def spectrum_grid(config: GridConfig) -> list[KnotSpectrum]:
    rng = random.Random(config.seed)
    return [random_spectrum(rng, config.max_g, config.max_b, f"grid-{j}") for j in range(config.count)]


def _spec(k: KnotSpectrum) -> str:
    return f"gM={k.ambient_genus},gEK={k.exterior_genus},b*={k.bridge_indices}"


def run_verification(
    config: GridConfig = GridConfig(),
    suites: tuple[str, ...] = SUITES,
    knapsack: Callable[[KnotSpectrum, int], KnapsackSolution] = max_defect_sum_knapsack,
) -> VerificationSummary:
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {sorted(unknown)}")
    start = time.perf_counter()
    grid = spectrum_grid(config)
    results = {name: SuiteResult(name) for name in suites}

    for k in grid:
        if "oracle" in results:
            profile = defect_profile(k, config.max_capacity)
            for cap in range(config.max_capacity + 1):
                dp = knapsack(k, cap).value
                brute, witness = max_defect_sum_bruteforce(
                    [profile] * (cap + 1), cap, limit=config.brute_force_limit
                )
                results["oracle"].check(dp == brute, spectrum=_spec(k), capacity=cap, knapsack=dp,
                                        brute_force=brute, witness=witness.parts)
        if "lp" in results:
            for cap in range(config.max_capacity + 1):
                dp = knapsack(k, cap).value
                lp = lp_relaxation(k, cap)
                b0 = k.bridge_indices[lp.pivot_index - 1]
                results["lp"].check(lp.value >= dp, spectrum=_spec(k), capacity=cap, knapsack=dp,
                                    lp=str(lp.value), relation="lp >= ilp")
                if cap % b0 == 0:
                    results["lp"].check(lp.value == dp, spectrum=_spec(k), capacity=cap, knapsack=dp,
                                        lp=str(lp.value), relation="lp == ilp when b_i0* | capacity")
        if "sequence" in results:
            rate, _ = growth_rate_closed_form(k)
            for n in range(2, config.n_max + 1):
                s = s_n(k, n, knapsack)
                sb = sandwich_bounds(k, n)
                case = dict(spectrum=_spec(k), n=n, s_n=str(s), gr=str(rate))
                results["sequence"].check(s >= rate, relation="S_n >= gr", **case)
                if sb.r == 0:
                    results["sequence"].check(s == rate, relation="S_n == gr", **case)
                if sb.k >= 1:
                    results["sequence"].check(sb.lower <= s < sb.upper, relation="lower <= S_n < upper",
                                              lower=str(sb.lower), upper=str(sb.upper), **case)
                if n - 1 >= k.bridge_indices[0]:
                    ub = growth_upper_bound_any(k, n)
                    results["sequence"].check(s < ub, relation="S_n < universal bound", bound=str(ub), **case)
        if "drilled" in results and k.ambient_genus == 0:
            bg = k.bridge_indices[-1]
            for c in range(bg, bg + config.drill_span + 1):
                got = drilled_genus(k, c)
                results["drilled"].check(got.exact and got.value == c, spectrum=_spec(k), c=c, genus=str(got))

    if "qgenus" in results:
        for b in range(1, 7):
            for c in range(1, 7):
                for comp in (True, False):
                    q = q_manifold_genus(b, c, comp)
                    results["qgenus"].check(q == (b + c if comp else b + c + 1), b=b, c=c, complementary=comp, q=q)
                    results["qgenus"].check(relative_genus_q(c, comp) + b == q, b=b, c=c, complementary=comp,
                                            relation="relative + b == q")

    return VerificationSummary(config.seed, len(grid), results, time.perf_counter() - start)
