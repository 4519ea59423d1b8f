import pytest

from tunnelgr.optimize import KnapsackSolution, max_defect_sum_knapsack
from tunnelgr.verify import GridConfig, run_verification, spectrum_grid


def test_grid_is_seeded():
    a = spectrum_grid(GridConfig(seed=7, count=30))
    b = spectrum_grid(GridConfig(seed=7, count=30))
    c = spectrum_grid(GridConfig(seed=8, count=30))
    assert a == b and a != c
    assert all(k.m_small and k.g <= 4 and k.bridge_indices[-1] <= 12 for k in a)


def test_small_grid_passes():
    summary = run_verification(GridConfig(count=25))
    assert summary.ok, summary.first_failure()
    assert summary.first_failure() is None


def test_harness_reports_counterexample():
    def off_by_one(k, cap):
        sol = max_defect_sum_knapsack(k, cap)
        return KnapsackSolution(sol.counts, sol.value + (cap >= 5), sol.weight, cap)

    summary = run_verification(GridConfig(count=5), suites=("oracle", "sequence"), knapsack=off_by_one)
    assert not summary.ok
    suite, case = summary.first_failure()
    assert suite == "oracle" and case["capacity"] == 5
    assert case["knapsack"] == case["brute_force"] + 1


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_verification(GridConfig(count=1), suites=("nope",))
