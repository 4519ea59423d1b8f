import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import spectra
from tunnelgr.errors import (
    CatalogParseError,
    ExteriorBelowAmbient,
    LengthMismatch,
    NegativeGenus,
    NonIncreasingBridgeIndices,
    SpectrumError,
    UnknownKnot,
)
from tunnelgr.growth import growth_rate_closed_form
from tunnelgr.spectrum import (
    KnotSpectrum,
    builtin_catalog,
    dump_catalog,
    lookup,
    parse_catalog,
    parse_inline_spectrum,
    validate_spectrum,
)


def test_kmsy_spectrum_is_valid():
    k = validate_spectrum(name="KMSY", ambient_genus=0, exterior_genus=2, bridge_indices=(2, 7), m_small=True)
    assert k.admissible and k.g == 2 and k.bridge_indices == (2, 7)


def test_unknot_is_valid_and_inadmissible():
    k = validate_spectrum(name="unknot", ambient_genus=0, exterior_genus=0, bridge_indices=(), m_small=False)
    assert not k.admissible
    assert k.g == 0


@pytest.mark.parametrize(
    "raw, error",
    [
        (dict(ambient_genus=0, exterior_genus=2, bridge_indices=(3, 3)), NonIncreasingBridgeIndices),
        (dict(ambient_genus=0, exterior_genus=2, bridge_indices=(4, 2)), NonIncreasingBridgeIndices),
        (dict(ambient_genus=0, exterior_genus=1, bridge_indices=(0,)), NonIncreasingBridgeIndices),
        (dict(ambient_genus=0, exterior_genus=2, bridge_indices=(1,)), LengthMismatch),
        (dict(ambient_genus=1, exterior_genus=1, bridge_indices=(1,)), LengthMismatch),
        (dict(ambient_genus=-1, exterior_genus=2, bridge_indices=(1, 2, 3)), NegativeGenus),
        (dict(ambient_genus=2, exterior_genus=1, bridge_indices=()), ExteriorBelowAmbient),
        (dict(ambient_genus=0, exterior_genus="2", bridge_indices=(1, 2)), SpectrumError),
        (dict(ambient_genus=0, exterior_genus=1, bridge_indices=(1,), m_small="yes"), SpectrumError),
    ],
)
def test_invalid_spectra(raw, error):
    with pytest.raises(error):
        validate_spectrum(raw)


def test_builtin_catalog_contents():
    names = {e.spectrum.name: e for e in builtin_catalog()}
    assert names["KMSY"].spectrum.bridge_indices == (2, 7)
    assert names["2bridge"].spectrum.bridge_indices == (1, 2)
    assert names["illustration-5-7-23"].spectrum.bridge_indices == (5, 7, 23)
    assert names["illustration-5-7-23"].hypothetical
    assert not names["unknot"].spectrum.admissible
    assert "all but finitely many" in names["KMSY"].provenance


@pytest.mark.parametrize("entry", builtin_catalog(), ids=lambda e: e.spectrum.name)
def test_catalog_entries_validate_and_match_closed_form(entry):
    assert validate_spectrum(entry.spectrum) == entry.spectrum
    if entry.expected_growth_rate is not None:
        assert growth_rate_closed_form(entry.spectrum)[0] == entry.expected_growth_rate


def test_lookup_unknown():
    with pytest.raises(UnknownKnot):
        lookup("figure-eight")


def test_bridge_accessor_conventions(illustration):
    assert illustration.b(0) == 0
    assert illustration.b(2) == 7
    assert illustration.b(4) == float("inf")


@given(spectra(m_small=True) | spectra(m_small=False))
def test_round_trip_through_json(k):
    back = parse_catalog(dump_catalog([k]))
    assert len(back) == 1
    assert validate_spectrum(back[0].spectrum) == k


def test_catalog_round_trip_keeps_provenance():
    text = dump_catalog(builtin_catalog())
    entries = parse_catalog(text)
    assert [e.spectrum for e in entries] == [e.spectrum for e in builtin_catalog()]
    assert entries[3].provenance == builtin_catalog()[3].provenance


def test_unknown_key_is_named():
    doc = [dict(name="x", ambient_genus=0, exterior_genus=1, bridge_indices=[1], m_small=True, colour="red")]
    with pytest.raises(CatalogParseError, match="'colour'"):
        parse_catalog(json.dumps(doc))


def test_missing_key_and_bad_json():
    doc = [dict(name="x", ambient_genus=0, bridge_indices=[1], m_small=True)]
    with pytest.raises(CatalogParseError, match="exterior_genus"):
        parse_catalog(json.dumps(doc))
    with pytest.raises(CatalogParseError, match="line 1"):
        parse_catalog("[{")
    with pytest.raises(CatalogParseError):
        parse_catalog('{"name": "x"}')


def test_catalog_entry_invariant_error_propagates():
    doc = [dict(name="bad", ambient_genus=0, exterior_genus=2, bridge_indices=[3, 3], m_small=True)]
    with pytest.raises(NonIncreasingBridgeIndices):
        parse_catalog(json.dumps(doc))


def test_inline_spectrum():
    k = parse_inline_spectrum("0,3,5,7,23")
    assert k == KnotSpectrum("inline", 0, 3, (5, 7, 23), True)
    assert parse_inline_spectrum("1,1").bridge_indices == ()
    with pytest.raises(SpectrumError):
        parse_inline_spectrum("0,x")
    with pytest.raises(SpectrumError):
        parse_inline_spectrum("0")


def test_spectrum_is_immutable(kmsy):
    with pytest.raises(AttributeError):
        kmsy.exterior_genus = 5
    assert growth_rate_closed_form(kmsy)[0] == Fraction(1, 2)
