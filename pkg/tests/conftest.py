import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tunnelgr.spectrum import lookup, validate_spectrum  # noqa: E402


@pytest.fixture
def kmsy():
    return lookup("KMSY")


@pytest.fixture
def two_bridge():
    return lookup("2bridge")


@pytest.fixture
def illustration():
    return lookup("illustration-5-7-23")


@pytest.fixture
def unknot():
    return lookup("unknot")


@st.composite
def spectra(draw, max_g=4, max_b=12, m_small=True, ambient=None):
    g = draw(st.integers(1, max_g))
    bridge = sorted(draw(st.sets(st.integers(1, max_b), min_size=g, max_size=g)))
    gm = draw(st.integers(0, 2)) if ambient is None else ambient
    return validate_spectrum(
        name="h", ambient_genus=gm, exterior_genus=gm + g, bridge_indices=bridge, m_small=m_small
    )
