"""Command-line front end: ``tunnelgr <command> [options]``.

Exit codes: 0 success, 1 domain or validation error, 2 I/O or parse error,
3 property/invariant failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import genus, growth, optimize
from .errors import CatalogParseError, PropertyFailure, SpectrumError, TunnelGrError, UnknownKnot
from .report import FORMATS, Report, render
from .spectrum import (
    CatalogEntry,
    KnotSpectrum,
    builtin_catalog,
    check_entry,
    dump_catalog,
    load_catalog,
    parse_inline_spectrum,
    raw_entries,
)
from .verify import SUITES, GridConfig, run_verification

EXIT_OK, EXIT_DOMAIN, EXIT_IO, EXIT_PROPERTY = 0, 1, 2, 3
CATALOG_ENV = "TUNNELGR_CATALOG"


@dataclass(frozen=True)
class RunConfig:
    catalog_path: Path | None
    output_format: str = "plain"
    brute_force_limit: int = optimize.BRUTE_FORCE_LIMIT
    n_max: int = 25

    def __post_init__(self) -> None:
        if self.output_format not in FORMATS:
            raise ValueError(f"output format must be one of {FORMATS}")
        if self.brute_force_limit < 1:
            raise ValueError("brute_force_limit must be >= 1")
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")

    def catalog(self) -> list[CatalogEntry]:
        """Entries from the catalog file (if any) followed by the built-in ones."""
        entries = load_catalog(self.catalog_path) if self.catalog_path else []
        return entries + builtin_catalog()


def _config(args: argparse.Namespace) -> RunConfig:
    path = args.catalog or os.environ.get(CATALOG_ENV)
    return RunConfig(
        catalog_path=Path(path) if path else None,
        output_format=args.format,
        brute_force_limit=args.brute_force_limit,
        n_max=getattr(args, "n_max", None) or 25,
    )


def _resolve(args: argparse.Namespace, cfg: RunConfig, name: str | None = None) -> KnotSpectrum:
    name = name if name is not None else getattr(args, "knot", None)
    if name:
        for entry in cfg.catalog():
            if entry.spectrum.name == name:
                return entry.spectrum
        if not args.spectrum:
            raise UnknownKnot(f"unknown knot {name!r} (use --spectrum gM,gEK,b1,... for an inline spectrum)")
    if args.spectrum:
        return parse_inline_spectrum(args.spectrum, name=name or "inline", m_small=not args.not_m_small)
    raise UnknownKnot("no knot given: name a catalog knot or pass --spectrum")


def _emit(report: Report, cfg: RunConfig) -> None:
    sys.stdout.write(render(report, cfg.output_format))


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def cmd_validate(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.path:
        text = Path(args.path).read_text(encoding="utf-8")
        source = args.path
    elif cfg.catalog_path:
        text = cfg.catalog_path.read_text(encoding="utf-8")
        source = str(cfg.catalog_path)
    else:
        text = dump_catalog(builtin_catalog())
        source = "<builtin>"
    docs = raw_entries(text)
    bad = 0
    for i, obj in enumerate(docs):
        label = obj.get("name", "?") if isinstance(obj, dict) else "?"
        try:
            check_entry(obj, i)
        except (SpectrumError, CatalogParseError) as exc:
            bad += 1
            print(f"{source}: entry {i} ({label}): {type(exc).__name__}: {exc}")
        else:
            if args.verbose:
                print(f"{source}: entry {i} ({label}): ok")
    print(f"{source}: {len(docs) - bad}/{len(docs)} entries valid")
    return EXIT_DOMAIN if bad else EXIT_OK


def cmd_catalog(args: argparse.Namespace, cfg: RunConfig) -> int:
    entries = cfg.catalog()
    if cfg.output_format == "json":
        sys.stdout.write(dump_catalog(entries) + "\n")
        return EXIT_OK
    rows = []
    for e in entries:
        k = e.spectrum
        rate, _ = growth.growth_rate_closed_form(k)
        rows.append([k.name, k.ambient_genus, k.exterior_genus, " ".join(map(str, k.bridge_indices)) or "-",
                     k.m_small, rate, e.hypothetical])
    _emit(Report("catalog", {}, ["name", "gM", "gEK", "b*", "m_small", "gr", "hypothetical"], rows), cfg)
    return EXIT_OK


def cmd_fk(args: argparse.Namespace, cfg: RunConfig) -> int:
    k = _resolve(args, cfg)
    c_max = args.c_max
    inputs = {"knot": k.name, "c_max": c_max}
    if k.m_small:
        profile = genus.defect_profile(k, c_max)
        rows = [[c, f, genus.drilled_genus(k, c).value] for c, f in enumerate(profile.values)]
        _emit(Report("fk", inputs, ["c", "f_K", "g_drilled"], rows,
                     summary={"thresholds": list(k.bridge_indices)}), cfg)
        return EXIT_OK
    _warn(f"{k.name} is not m-small; reporting bounds only")
    rows = []
    for c in range(c_max + 1):
        f, dg = genus.defect(k, c), genus.drilled_genus(k, c)
        rows.append([c, f.lower, f.upper, dg.lower, dg.upper])
    _emit(Report("fk", inputs, ["c", "f_K_lower", "f_K_upper", "g_drilled_lower", "g_drilled_upper"], rows,
                 notes=["not m-small: f_K(c) >= threshold index and f_K(c) <= c only"]), cfg)
    return EXIT_OK


def cmd_growth(args: argparse.Namespace, cfg: RunConfig) -> int:
    k = _resolve(args, cfg)
    report = growth.convergence_report(k, cfg.n_max)
    summary = {"growth_rate": report.growth_rate, "argmin": report.argmin_indices, "exact": report.exact}
    inputs = {"knot": k.name, "n_max": cfg.n_max}
    if not k.admissible:
        _emit(Report("growth", inputs, [], [], summary, ["inadmissible: growth rate is 1"]), cfg)
        return EXIT_OK
    if not report.exact:
        rows = [[n, up] for n, _, up in report.bounds_table]
        summary["growth_rate_role"] = "upper bound"
        _emit(Report("growth", inputs, ["n", "upper_any"], rows, summary, report.notes), cfg)
        return EXIT_OK
    rows = []
    for (n, s), (_, lo, up) in zip(report.s_table, report.bounds_table):
        rows.append([n, s, lo, up, growth.growth_upper_bound_any(k, n), s == report.growth_rate])
    summary["certified"] = report.certified
    summary.update({f"check[{name}]": ok for name, ok in report.checks.items()})
    _emit(Report("growth", inputs, ["n", "S_n", "lower", "upper", "upper_any", "at_limit"], rows, summary,
                 report.notes), cfg)
    if not report.certified:
        failed = [name for name, ok in report.checks.items() if not ok]
        raise PropertyFailure(f"growth report invariants failed: {failed}")
    return EXIT_OK


def cmd_nk(args: argparse.Namespace, cfg: RunConfig) -> int:
    k = _resolve(args, cfg)
    rows = []
    for n in range(1, cfg.n_max + 1):
        sol = optimize.max_defect_sum_knapsack(k, n - 1)
        rows.append([n, growth.genus_of_nk(k, n), sol.value, " ".join(map(str, sol.counts))])
    _emit(Report("nk", {"knot": k.name, "n_max": cfg.n_max}, ["n", "g_E_nK", "max_defect_sum", "k_counts"],
                 rows), cfg)
    return EXIT_OK


def cmd_sum(args: argparse.Namespace, cfg: RunConfig) -> int:
    factors = [_resolve(args, cfg, name) for name in args.knots]
    bound, witness = genus.connected_sum_drilled_genus(factors, args.c)
    summary = {"genus": bound.value, "witness": list(witness.counts)}
    rows: list[list] = []
    columns: list[str] = []
    if args.show_all:
        n = len(factors)
        if n > 3:
            raise TunnelGrError("--show-all is limited to at most 3 factors")
        columns = ["composition", "genus", "minimal"]
        for parts in optimize.compositions(args.c + n - 1, n):
            g = genus.composition_genus(factors, parts)
            rows.append([" ".join(map(str, parts)), g, g == bound.value])
    inputs = {"knots": " # ".join(k.name for k in factors), "c": args.c}
    _emit(Report("sum", inputs, columns, rows, summary), cfg)
    return EXIT_OK


def cmd_qgenus(args: argparse.Namespace, cfg: RunConfig) -> int:
    rows = []
    for comp in (True, False):
        rows.append([args.b, args.c, comp, genus.relative_genus_q(args.c, comp),
                     genus.q_manifold_genus(args.b, args.c, comp)])
    _emit(Report("qgenus", {"b": args.b, "c": args.c},
                 ["b", "c", "complementary", "relative_genus_Qc", "genus_Qbc"], rows), cfg)
    return EXIT_OK


def cmd_lp_compare(args: argparse.Namespace, cfg: RunConfig) -> int:
    k = _resolve(args, cfg)
    rows = []
    for cap in range(args.c_max + 1):
        dp = optimize.max_defect_sum_knapsack(k, cap)
        lp = optimize.lp_relaxation(k, cap)
        rows.append([cap, Fraction(dp.value), lp.value, lp.value - dp.value,
                     cap % k.bridge_indices[lp.pivot_index - 1] == 0])
    lp1 = optimize.lp_relaxation(k, 1)
    summary = {"pivot_index": lp1.pivot_index, "argmax": lp1.argmax}
    _emit(Report("lp-compare", {"knot": k.name, "c_max": args.c_max},
                 ["capacity", "knapsack", "lp", "gap", "divisible"], rows, summary), cfg)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    grid = GridConfig(seed=args.seed, count=args.count, n_max=args.n_max or 40,
                      brute_force_limit=cfg.brute_force_limit)
    summary = run_verification(grid, tuple(args.suite or SUITES), knapsack=optimize.max_defect_sum_knapsack)
    print(f"seed: {summary.seed}")
    print(f"spectra: {summary.spectra}")
    for name, suite in summary.suites.items():
        status = "PASS" if suite.ok else "FAIL"
        print(f"{status} {name}: {suite.cases} cases, {len(suite.failures)} failures")
    print(f"elapsed: {summary.seconds:.2f}s")
    failure = summary.first_failure()
    if failure:
        name, case = failure
        raise PropertyFailure(f"property suite {name!r} failed", case)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", metavar="PATH", help=f"JSON catalog file (default: ${CATALOG_ENV} or built-in)")
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--spectrum", metavar="STR", help='inline spectrum "gM,gEK,b1,b2,..."')
    common.add_argument("--not-m-small", action="store_true", help="mark an inline spectrum as not m-small")
    common.add_argument("--brute-force-limit", type=int, default=optimize.BRUTE_FORCE_LIMIT)

    parser = argparse.ArgumentParser(prog="tunnelgr", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a catalog file")
    p.add_argument("path", nargs="?")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("catalog", parents=[common], help="list catalog knots")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("fk", parents=[common], help="tabulate f_K(c) and g(E(K)^(c))")
    p.add_argument("knot", nargs="?")
    p.add_argument("--c-max", type=int, default=10)
    p.set_defaults(func=cmd_fk)

    p = sub.add_parser("growth", parents=[common], help="growth rate, S_n table and sandwich bounds")
    p.add_argument("knot", nargs="?")
    p.add_argument("--n-max", type=int, default=25)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("nk", parents=[common], help="g(E(nK)) for n = 1..n_max")
    p.add_argument("knot", nargs="?")
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_nk)

    p = sub.add_parser("sum", parents=[common], help="genus of a drilled connected sum")
    p.add_argument("knots", nargs="+")
    p.add_argument("--c", type=int, default=0, help="number of drilled meridional curves")
    p.add_argument("--show-all", action="store_true", help="list every composition (n <= 3)")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("qgenus", parents=[common], help="genus of Q^(b,c) and relative genus of Q^(c)")
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_qgenus)

    p = sub.add_parser("lp-compare", parents=[common], help="knapsack optimum vs LP relaxation")
    p.add_argument("knot", nargs="?")
    p.add_argument("--c-max", type=int, default=20)
    p.set_defaults(func=cmd_lp_compare)

    p = sub.add_parser("verify", parents=[common], help="run the randomized property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--suite", action="append", choices=SUITES)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except PropertyFailure as exc:
        print(f"error: PropertyFailure: {exc}", file=sys.stderr)
        if exc.counterexample is not None:
            print(f"counterexample: {exc.counterexample}", file=sys.stderr)
        return EXIT_PROPERTY
    except (CatalogParseError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO
    except (TunnelGrError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
