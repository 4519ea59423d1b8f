"""Tabular reports rendered as plain text, CSV or JSON.

Rational cells are written twice: once exactly as ``p/q`` (``p`` for
integers) and once as a decimal with 15 digits after the point.  The exact
column always parses back with ``Fraction(text)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence

__all__ = ["Report", "fmt_exact", "fmt_decimal", "render"]

FORMATS = ("plain", "csv", "json")


def fmt_exact(x: Fraction | int) -> str:
    return str(Fraction(x))


def fmt_decimal(x: Fraction | int) -> str:
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 40
        return f"{Decimal(x.numerator) / Decimal(x.denominator):.15f}"


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    columns: list[str]
    rows: list[Sequence[Any]]
    summary: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _is_rational(v: Any) -> bool:
    return isinstance(v, Fraction)


def _flat_header(report: Report) -> list[str]:
    # A column is rational if any of its cells is a Fraction.
    out = []
    for j, col in enumerate(report.columns):
        if any(_is_rational(row[j]) for row in report.rows):
            out += [col, f"{col}_decimal"]
        else:
            out.append(col)
    return out


def _flat_row(report: Report, row: Sequence[Any]) -> list[str]:
    out = []
    for j, v in enumerate(row):
        rational_col = any(_is_rational(r[j]) for r in report.rows)
        if rational_col:
            out += ["", ""] if v is None else [fmt_exact(v), fmt_decimal(v)]
        else:
            out.append("" if v is None else str(v))
    return out


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return {"exact": fmt_exact(v), "decimal": fmt_decimal(v)}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(x) for x in v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _plain_value(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, Fraction):
        return fmt_exact(v) if v.denominator == 1 else f"{fmt_exact(v)} ({float(v):.6f})"
    if isinstance(v, (set, frozenset)):
        return "{" + ", ".join(str(x) for x in sorted(v)) + "}"
    return str(v)


def render(report: Report, fmt: str = "plain") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_flat_header(report))
        for row in report.rows:
            writer.writerow(_flat_row(report, row))
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "command": report.command,
            "inputs": _jsonable(report.inputs),
            "summary": _jsonable(report.summary),
            "columns": report.columns,
            "rows": [dict(zip(report.columns, (_jsonable(v) for v in row))) for row in report.rows],
            "notes": report.notes,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "plain":
        raise ValueError(f"unknown format {fmt!r}")

    lines = [f"# {report.command}: " + ", ".join(f"{k}={_plain_value(v)}" for k, v in report.inputs.items())]
    for k, v in report.summary.items():
        lines.append(f"{k}: {_plain_value(v)}")
    if report.rows:
        cells = [[_plain_value(v) for v in row] for row in report.rows]
        widths = [max(len(c), *(len(r[j]) for r in cells)) for j, c in enumerate(report.columns)]
        lines.append("  ".join(c.rjust(w) for c, w in zip(report.columns, widths)))
        for r in cells:
            lines.append("  ".join(v.rjust(w) for v, w in zip(r, widths)))
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
