"""Tunnel-number growth rates of m-small knots, computed from bridge-index spectra."""

from .errors import *  # noqa: F401,F403
from .genus import (
    DefectProfile,
    GenusBound,
    SumFactorization,
    amalgamated_genus,
    connected_sum_drilled_genus,
    defect,
    defect_profile,
    drilled_genus,
    q_manifold_genus,
    relative_genus_q,
)
from .growth import (
    GrowthReport,
    SandwichBound,
    convergence_report,
    genus_of_nk,
    growth_rate_closed_form,
    growth_upper_bound_any,
    s_n,
    sandwich_bounds,
)
from .optimize import (
    Composition,
    KnapsackSolution,
    LpSolution,
    lp_relaxation,
    max_defect_sum_bruteforce,
    max_defect_sum_knapsack,
    normalize_composition,
)
from .spectrum import CatalogEntry, KnotSpectrum, builtin_catalog, lookup, validate_spectrum

__version__ = "0.1.0"
