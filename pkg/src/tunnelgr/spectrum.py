"""Knots modelled as invariant spectra, plus the built-in catalog.

A knot K in a closed 3-manifold M is reduced to the numbers the growth-rate
calculus actually consumes: g(M), g(E(K)), the bridge indices b_1* < ... < b_g*
(where g = g(E(K)) - g(M)) and whether K is m-small.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .errors import (
    CatalogParseError,
    ExteriorBelowAmbient,
    LengthMismatch,
    NegativeGenus,
    NonIncreasingBridgeIndices,
    SpectrumError,
    UnknownKnot,
)

__all__ = [
    "KnotSpectrum",
    "CatalogEntry",
    "validate_spectrum",
    "builtin_catalog",
    "lookup",
    "parse_catalog",
    "load_catalog",
    "dump_catalog",
    "parse_inline_spectrum",
    "raw_entries",
    "check_entry",
]

CATALOG_KEYS = ("name", "ambient_genus", "exterior_genus", "bridge_indices", "m_small", "provenance")
_REQUIRED_KEYS = CATALOG_KEYS[:5]


@dataclass(frozen=True)
class KnotSpectrum:
    name: str
    ambient_genus: int
    exterior_genus: int
    bridge_indices: tuple[int, ...] = ()
    m_small: bool = True

    @property
    def g(self) -> int:
        """Genus gap g(E(K)) - g(M); the number of bridge indices."""
        return self.exterior_genus - self.ambient_genus

    @property
    def admissible(self) -> bool:
        return self.exterior_genus > self.ambient_genus

    def b(self, i: int) -> int | float:
        """b_i* with the conventions b_0* = 0 and b_{g+1}* = infinity."""
        if i == 0:
            return 0
        if i == self.g + 1:
            return float("inf")
        return self.bridge_indices[i - 1]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "ambient_genus": self.ambient_genus,
            "exterior_genus": self.exterior_genus,
            "bridge_indices": list(self.bridge_indices),
            "m_small": self.m_small,
        }


@dataclass(frozen=True)
class CatalogEntry:
    spectrum: KnotSpectrum
    provenance: str = ""
    expected_growth_rate: Fraction | None = None
    hypothetical: bool = False


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpectrumError(f"{what} must be an integer, got {value!r}")
    return value


def validate_spectrum(raw: KnotSpectrum | Mapping[str, Any] | None = None, **kwargs: Any) -> KnotSpectrum:
    """Check a candidate spectrum and return it as a frozen :class:`KnotSpectrum`.

    ``raw`` may be an existing spectrum, a mapping with the catalog keys, or
    omitted in favour of keyword arguments.

    Raises one of NegativeGenus, ExteriorBelowAmbient, LengthMismatch or
    NonIncreasingBridgeIndices (all subclasses of SpectrumError).
    """
    if isinstance(raw, KnotSpectrum):
        data: dict[str, Any] = raw.to_dict()
    else:
        data = dict(raw or {})
    data.update(kwargs)

    name = str(data.get("name", ""))
    gm = _as_int(data.get("ambient_genus"), "ambient_genus")
    gek = _as_int(data.get("exterior_genus"), "exterior_genus")
    raw_b = data.get("bridge_indices", ())
    if isinstance(raw_b, (str, bytes)) or not isinstance(raw_b, Iterable):
        raise SpectrumError(f"bridge_indices must be a sequence of integers, got {raw_b!r}")
    bridge = tuple(_as_int(b, "bridge index") for b in raw_b)
    m_small = data.get("m_small", True)
    if not isinstance(m_small, bool):
        raise SpectrumError(f"m_small must be a boolean, got {m_small!r}")

    if gm < 0 or gek < 0:
        raise NegativeGenus(f"{name or '<unnamed>'}: genera must be nonnegative (g(M)={gm}, g(E(K))={gek})")
    if gek < gm:
        raise ExteriorBelowAmbient(f"{name or '<unnamed>'}: g(E(K))={gek} < g(M)={gm}")
    g = gek - gm
    if len(bridge) != g:
        raise LengthMismatch(
            f"{name or '<unnamed>'}: expected {g} bridge indices (g(E(K)) - g(M)), got {len(bridge)}"
        )
    prev = 0
    for i, b in enumerate(bridge, start=1):
        if b <= prev:
            raise NonIncreasingBridgeIndices(
                f"{name or '<unnamed>'}: need 0 < b_1* < ... < b_g*, but b_{i}*={b} follows {prev}"
            )
        prev = b
    return KnotSpectrum(name, gm, gek, bridge, m_small)


# Values from the introduction and the worked examples on swallow-follow tori.
_BUILTIN: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        KnotSpectrum("unknot", 0, 0, (), False),
        "trivial knot in S^3; inadmissible, growth rate 1",
        Fraction(1),
    ),
    CatalogEntry(
        KnotSpectrum("2bridge", 0, 2, (1, 2), True),
        "non-trivial 2-bridge knot: tunnel number one, admits a (1,1) decomposition; growth rate 0",
        Fraction(0),
    ),
    CatalogEntry(
        KnotSpectrum("torus-3-4", 0, 2, (1, 3), True),
        "torus knot T(3,4): tunnel number one, torus bridge index 1, bridge index 3; growth rate 0",
        Fraction(0),
    ),
    CatalogEntry(
        KnotSpectrum("KMSY", 0, 2, (2, 7), True),
        "Morimoto-Sakuma-Yokota knots: g(E(K))=2, torus bridge index 2; bridge index 7 holds for "
        "all but finitely many of them (>= 4 for every one); growth rate 1/2",
        Fraction(1, 2),
    ),
    CatalogEntry(
        KnotSpectrum("illustration-5-7-23", 0, 3, (5, 7, 23), True),
        "hypothetical m-small knot in S^3 with b* = (5, 7, 23); existence unknown",
        None,
        hypothetical=True,
    ),
)


def builtin_catalog() -> list[CatalogEntry]:
    return list(_BUILTIN)


def lookup(name: str, catalog: Iterable[CatalogEntry] | None = None) -> KnotSpectrum:
    entries = builtin_catalog() if catalog is None else catalog
    for entry in entries:
        if entry.spectrum.name == name:
            return entry.spectrum
    raise UnknownKnot(f"unknown knot {name!r}")


def parse_inline_spectrum(text: str, name: str = "inline", m_small: bool = True) -> KnotSpectrum:
    """Parse ``"gM,gEK,b1,b2,..."`` into a validated spectrum."""
    try:
        nums = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise SpectrumError(f"cannot parse spectrum {text!r}: {exc}") from None
    if len(nums) < 2:
        raise SpectrumError(f"spectrum {text!r} needs at least gM,gEK")
    return validate_spectrum(
        name=name, ambient_genus=nums[0], exterior_genus=nums[1], bridge_indices=nums[2:], m_small=m_small
    )


def check_entry(obj: Any, index: int) -> CatalogEntry:
    if not isinstance(obj, dict):
        raise CatalogParseError(f"entry {index}: expected an object, got {type(obj).__name__}")
    unknown = [k for k in obj if k not in CATALOG_KEYS]
    if unknown:
        raise CatalogParseError(f"entry {index}: unknown key {unknown[0]!r}")
    missing = [k for k in _REQUIRED_KEYS if k not in obj]
    if missing:
        raise CatalogParseError(f"entry {index}: missing key {missing[0]!r}")
    if not isinstance(obj["name"], str):
        raise CatalogParseError(f"entry {index}: 'name' must be a string")
    if not isinstance(obj["bridge_indices"], list):
        raise CatalogParseError(f"entry {index}: 'bridge_indices' must be an array")
    provenance = obj.get("provenance", "")
    if not isinstance(provenance, str):
        raise CatalogParseError(f"entry {index}: 'provenance' must be a string")
    spectrum = validate_spectrum(obj)
    return CatalogEntry(spectrum, provenance)


def raw_entries(text: str) -> list[Any]:
    """Decode the JSON array without checking the entries themselves."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, list):
        raise CatalogParseError("catalog must be a JSON array of objects")
    return doc


def parse_catalog(text: str) -> list[CatalogEntry]:
    """Parse a JSON catalog document.

    Structural problems raise CatalogParseError; a well-formed entry that
    breaks a spectrum invariant raises the matching SpectrumError.
    """
    return [check_entry(obj, i) for i, obj in enumerate(raw_entries(text))]


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


def dump_catalog(entries: Sequence[CatalogEntry | KnotSpectrum], indent: int | None = 2) -> str:
    out = []
    for entry in entries:
        if isinstance(entry, KnotSpectrum):
            out.append(entry.to_dict())
            continue
        obj = entry.spectrum.to_dict()
        if entry.provenance:
            obj["provenance"] = entry.provenance
        out.append(obj)
    return json.dumps(out, indent=indent, ensure_ascii=False)
