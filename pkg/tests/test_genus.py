import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import spectra
from oracles import connected_sum_naive, defect_scan
from tunnelgr.errors import EmptyFactorList, InadmissibleKnot, NonPositiveHoleCount, NotMSmall
from tunnelgr.genus import (
    DrilledGenusQuery,
    GenusBound,
    SumFactorization,
    amalgamated_genus,
    composition_genus,
    connected_sum_drilled_genus,
    defect,
    defect_profile,
    drilled_genus,
    q_manifold_genus,
    relative_genus_q,
    threshold_index,
)
from tunnelgr.spectrum import lookup, validate_spectrum


def test_defect_illustration_at_6(illustration):
    assert defect(illustration, 6) == GenusBound(1, 1)


@given(spectra())
def test_defect_at_zero(k):
    assert defect(k, 0).exact and defect(k, 0).value == 0


def test_defect_kmsy_at_10(kmsy):
    assert defect(kmsy, 10).value == 2
    assert defect_scan(kmsy.bridge_indices, 10) == 2


@given(spectra(), st.integers(0, 60))
def test_defect_matches_scan(k, c):
    assert defect(k, c).value == defect_scan(k.bridge_indices, c)
    i = threshold_index(k, c)
    assert k.b(i) <= c < k.b(i + 1)


def test_profile_illustration(illustration):
    values = defect_profile(illustration, 25).values
    expected = [0] * 5 + [1] * 2 + [2] * 16 + [3] * 3
    assert list(values) == expected
    assert defect_profile(illustration, 25).thresholds == (5, 7, 23)


def test_profile_small_cases(two_bridge, kmsy):
    assert defect_profile(two_bridge, 3).values == (0, 1, 2, 2)
    assert defect_profile(kmsy, 1).values == (0, 0)


@given(spectra(), st.integers(0, 40))
def test_profile_invariants(k, c_max):
    v = defect_profile(k, c_max).values
    assert v[0] == 0
    for c in range(c_max):
        assert v[c] <= v[c + 1] <= v[c] + 1
    for c in range(c_max + 1):
        assert 0 <= v[c] <= c
        if c >= k.bridge_indices[-1]:
            assert v[c] == k.g


def test_profile_errors(unknot):
    with pytest.raises(InadmissibleKnot):
        defect_profile(unknot, 3)
    wild = validate_spectrum(name="w", ambient_genus=0, exterior_genus=1, bridge_indices=[2], m_small=False)
    with pytest.raises(NotMSmall):
        defect_profile(wild, 3)


def test_drilled_genus_paper_values(kmsy, two_bridge, illustration):
    assert drilled_genus(kmsy, 1).value == 3
    assert drilled_genus(two_bridge, 1).value == 2
    assert drilled_genus(kmsy, 0).value == 2
    assert drilled_genus(illustration, 30).value == 30
    assert DrilledGenusQuery(kmsy, 1).evaluate().value == 3


def test_drilled_genus_inadmissible(unknot):
    with pytest.raises(InadmissibleKnot):
        drilled_genus(unknot, 2)
    with pytest.raises(InadmissibleKnot):
        defect(unknot, 0)
    with pytest.raises(ValueError):
        DrilledGenusQuery(unknot, -1)


@given(spectra(), st.integers(0, 40))
def test_drilled_genus_steps(k, c):
    a, b = drilled_genus(k, c).value, drilled_genus(k, c + 1).value
    assert a <= b <= a + 1


@given(spectra(ambient=0), st.integers(0, 10))
def test_drilled_genus_beyond_last_threshold(k, extra):
    c = k.bridge_indices[-1] + extra
    assert drilled_genus(k, c).value == c


@given(spectra(m_small=False), st.integers(0, 30))
def test_non_msmall_gives_bounds(k, c):
    f = defect(k, c)
    assert f.lower == defect_scan(k.bridge_indices, c)
    assert f.upper == c
    dg = drilled_genus(k, c)
    assert dg.lower == k.exterior_genus + c - c and dg.upper == k.exterior_genus + c - f.lower
    assert dg.exact == (f.lower == c)


def test_genus_bound_behaviour():
    assert str(GenusBound(3, 3)) == "3"
    assert str(GenusBound(2, 4)) == "[2, 4]"
    with pytest.raises(ValueError):
        GenusBound(2, 4).value
    with pytest.raises(ValueError):
        GenusBound(5, 4)


def test_connected_sum_paper_examples(kmsy, two_bridge):
    bound, witness = connected_sum_drilled_genus([kmsy, two_bridge], 0)
    assert bound.value == 3
    assert witness.counts == (0, 1)
    assert composition_genus([kmsy, two_bridge], (1, 0)) == 4
    assert connected_sum_drilled_genus([kmsy, kmsy], 0)[0].value == 4


@pytest.mark.parametrize("name", ["KMSY", "2bridge", "illustration-5-7-23"])
@pytest.mark.parametrize("c", [0, 1, 5, 24])
def test_single_factor_is_drilled_genus(name, c):
    k = lookup(name)
    bound, witness = connected_sum_drilled_genus([k], c)
    assert bound == drilled_genus(k, c)
    assert witness.counts == (c,)


def test_two_bridge_sum_drilled_twice(two_bridge):
    assert connected_sum_drilled_genus([two_bridge], 2)[0].value == 2


@given(st.lists(spectra(max_g=3, max_b=6), min_size=1, max_size=3), st.integers(0, 4))
def test_connected_sum_matches_naive_and_is_minimal(factors, c):
    bound, witness = connected_sum_drilled_genus(factors, c)
    assert bound.value == connected_sum_naive([(k.exterior_genus, k.bridge_indices) for k in factors], c)
    assert composition_genus(factors, witness.counts) == bound.value
    n = len(factors)
    for combo in itertools.product(range(c + n), repeat=n):
        if sum(combo) == c + n - 1:
            assert bound.value <= composition_genus(factors, combo)


def test_connected_sum_errors(kmsy):
    with pytest.raises(EmptyFactorList):
        connected_sum_drilled_genus([], 0)
    wild = validate_spectrum(name="w", ambient_genus=0, exterior_genus=1, bridge_indices=[2], m_small=False)
    with pytest.raises(NotMSmall):
        connected_sum_drilled_genus([kmsy, wild], 0)
    with pytest.raises(ValueError):
        SumFactorization(((kmsy, 2),), 0)


@pytest.mark.parametrize(
    "g1, g2, comps, expected",
    [(3, 2, [1], 4), (2, 2, [1], 3), (1, 1, [1], 1), (3, 3, [1, 1], 5), (4, 2, [2], 4)],
)
def test_amalgamated_genus(g1, g2, comps, expected):
    assert amalgamated_genus(g1, g2, comps) == expected


def test_amalgamated_genus_rejects_bad_input():
    with pytest.raises(ValueError):
        amalgamated_genus(1, 1, [])
    with pytest.raises(ValueError):
        amalgamated_genus(1, -1, [1])


def test_q_manifold_genus_values():
    assert q_manifold_genus(1, 1, True) == 2
    assert q_manifold_genus(1, 1, False) == 3
    assert q_manifold_genus(2, 3, True) == 5
    # the base case glues two genus-2 pieces along a torus
    assert amalgamated_genus(2, 2, [1]) == q_manifold_genus(1, 1, False)


def test_relative_genus_values():
    assert relative_genus_q(1, True) == 1
    assert relative_genus_q(4, False) == 5
    assert relative_genus_q(1, False) == q_manifold_genus(1, 1, False) - 1


@given(st.integers(1, 50), st.integers(1, 50), st.booleans())
def test_q_relative_difference_is_b(b, c, comp):
    assert q_manifold_genus(b, c, comp) - relative_genus_q(c, comp) == b


@pytest.mark.parametrize("b, c", [(0, 1), (1, 0), (-2, 3)])
def test_q_rejects_nonpositive(b, c):
    with pytest.raises(NonPositiveHoleCount):
        q_manifold_genus(b, c, True)
    if c < 1:
        with pytest.raises(NonPositiveHoleCount):
            relative_genus_q(c, False)
