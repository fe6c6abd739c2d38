"""Command-line front end.

Subcommands::

    table     emit a number triangle as JSON or CSV
    poly      emit one polynomial's exact coefficient vector
    check     run the identity suite, report JSON, exit 0/1
    dobinski  evaluate the convergent double series numerically

Exit codes: 0 on success (and when every check passes), 1 when a check
fails, 2 on usage errors.  Exact rationals are always serialized as
"p/q" strings (the "/q" omitted for integers); decimals never appear in
exact payloads.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import central, first_kind
from .bell import central_bell_poly, dobinski_eval, exact_bell_value, r_central_bell_poly
from .central import Family, Path, TriangleTable, central_factorial_poly, falling_factorial_poly
from .checks import SuiteConfig, all_pass, run_all
from .poly import Polynomial

__all__ = ["main", "console_main", "OutputDocument", "render_json", "parse_json"]

_FIRST_KIND = (Family.FIRST, Family.R_FIRST)
_R_FAMILIES = (Family.R_SECOND, Family.R_FIRST, Family.R_STIRLING1)

POLY_KINDS = ("central_bell", "r_central_bell", "central_factorial", "falling_factorial")


class UsageError(Exception):
    """Bad arguments discovered after parsing; maps to exit code 2."""


@dataclass(frozen=True)
class OutputDocument:
    """A renderable table or polynomial payload with its metadata."""

    format: str  # "json" | "csv"
    body: dict

    def render(self) -> str:
        if self.format == "json":
            return render_json(self.body)
        if self.body["type"] == "triangle":
            return _triangle_csv(self.body)
        return _poly_csv(self.body)


def render_json(body: dict) -> str:
    """Canonical JSON rendering; parsing and re-rendering is byte-stable
    because key order is the document's own insertion order."""
    return json.dumps(body, indent=2, sort_keys=False) + "\n"


def parse_json(text: str) -> dict:
    return json.loads(text)


def _triangle_body(table: TriangleTable) -> dict:
    return {
        "type": "triangle",
        "family": table.family.value,
        "r": str(table.r),
        "nmax": table.nmax,
        "path": table.path.value,
        "cells": [
            {"n": n, "k": k, "value": str(v)} for n, k, v in table.cells()
        ],
    }


def _poly_body(kind: str, n: int, r: Fraction, p: Polynomial) -> dict:
    return {
        "type": "polynomial",
        "kind": kind,
        "n": n,
        "r": str(r),
        "coeffs": [str(c) for c in p.coeffs],
    }


def _triangle_csv(body: dict) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["family", body["family"]])
    w.writerow(["r", body["r"]])
    w.writerow(["nmax", body["nmax"]])
    w.writerow(["path", body["path"]])
    nmax = body["nmax"]
    w.writerow(["n"] + [f"k={k}" for k in range(nmax + 1)])
    rows: dict[int, dict[int, str]] = {}
    for cell in body["cells"]:
        rows.setdefault(cell["n"], {})[cell["k"]] = cell["value"]
    for n in range(nmax + 1):
        row = [str(n)]
        for k in range(nmax + 1):
            row.append(rows.get(n, {}).get(k, ""))
        w.writerow(row)
    return out.getvalue()


def _poly_csv(body: dict) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["kind", body["kind"]])
    w.writerow(["n", body["n"]])
    w.writerow(["r", body["r"]])
    w.writerow(["k", "coefficient"])
    for k, c in enumerate(body["coeffs"]):
        w.writerow([str(k), c])
    return out.getvalue()


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# subcommand handlers ------------------------------------------------------


def _cmd_table(args: argparse.Namespace) -> int:
    family = Family(args.family)
    if args.r != 0 and family not in _R_FAMILIES:
        raise UsageError(f"family {family.value!r} does not take --r")
    path = Path(args.path) if args.path else None
    build = first_kind.triangle if family in _FIRST_KIND else central.triangle
    try:
        table = build(family, args.nmax, args.r, path, order=args.order)
    except ValueError as exc:
        raise UsageError(str(exc))
    doc = OutputDocument(args.format, _triangle_body(table))
    _emit(doc.render(), args.out)
    return 0


def _cmd_poly(args: argparse.Namespace) -> int:
    kind, n, r = args.kind, args.n, args.r
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if kind == "central_bell":
        if r != 0:
            raise UsageError("central_bell does not take --r; use r_central_bell")
        p = central_bell_poly(n)
    elif kind == "r_central_bell":
        p = r_central_bell_poly(n, r)
    elif kind == "central_factorial":
        if r != 0:
            raise UsageError("central_factorial does not take --r")
        p = central_factorial_poly(n)
    else:
        p = falling_factorial_poly(n, r)
    doc = OutputDocument(args.format, _poly_body(kind, n, r, p))
    _emit(doc.render(), args.out)
    return 0


_CONFIG_KEYS = {f.name for f in dataclasses.fields(SuiteConfig)}


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed config {path!r}: {exc}")
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def _suite_config(args: argparse.Namespace) -> SuiteConfig:
    overrides: dict = {}
    if args.config:
        overrides.update(_load_config(args.config))
    if "r_values" in overrides:
        try:
            overrides["r_values"] = tuple(Fraction(str(v)) for v in overrides["r_values"])
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad r_values in config: {exc}")
    if "dobinski_x" in overrides:
        overrides["dobinski_x"] = tuple(float(v) for v in overrides["dobinski_x"])
    if "fault_cell" in overrides and overrides["fault_cell"] is not None:
        overrides["fault_cell"] = tuple(overrides["fault_cell"])
    for flag, key in (
        ("nmax_scalar", "nmax_scalar"),
        ("nmax_poly", "nmax_poly"),
        ("nmax_gf", "nmax_gf"),
        ("order", "order"),
    ):
        value = getattr(args, flag)
        if value is not None:
            overrides[key] = value
    if args.r_set is not None:
        try:
            overrides["r_values"] = tuple(
                Fraction(part) for part in args.r_set.split(",") if part.strip()
            )
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --r-set: {args.r_set!r}")
    if args.inject_fault:
        overrides["fault_cell"] = (3, 1)
    try:
        return dataclasses.replace(SuiteConfig(), **overrides)
    except TypeError as exc:
        raise UsageError(f"bad config value: {exc}")


def _cmd_check(args: argparse.Namespace) -> int:
    config = _suite_config(args)
    reports = run_all(config)
    ok = all_pass(reports)
    body = {
        "all_pass": ok,
        "checks": [r.to_dict() for r in reports],
    }
    _emit(render_json(body), args.out)
    vacuous = [r.identity for r in reports if r.vacuous]
    if vacuous:
        print(
            f"warning: vacuous pass on empty grids: {', '.join(vacuous)}",
            file=sys.stderr,
        )
    return 0 if ok else 1


def _cmd_dobinski(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.x <= 0:
        raise UsageError("--x must be positive")
    if args.max_terms < 1:
        raise UsageError("--max-terms must be at least 1")
    result = dobinski_eval(args.n, args.x, args.max_terms, args.tolerance)
    exact = exact_bell_value(args.n, args.x)
    error = abs(result.value - float(exact))
    print(f"approximation: {result.value!r}")
    print(f"terms_used: {result.terms_used}")
    print(f"last_term_magnitude: {result.last_term_magnitude!r}")
    print(f"exact: {exact} (= {float(exact)!r})")
    print(f"abs_error: {error!r}")
    return 0


# parser -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centralfact",
        description="Exact number triangles, Bell polynomials and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit a number triangle")
    p_table.add_argument("--family", required=True, choices=[f.value for f in Family])
    p_table.add_argument("--nmax", required=True, type=int)
    p_table.add_argument("--r", type=_fraction_arg, default=Fraction(0))
    p_table.add_argument("--path", choices=[p.value for p in Path], default=None)
    p_table.add_argument("--order", type=int, default=40,
                         help="series order for the gf path (default 40)")
    p_table.add_argument("--format", choices=["json", "csv"], default="json")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_poly = sub.add_parser("poly", help="emit a polynomial coefficient vector")
    p_poly.add_argument("--kind", required=True, choices=POLY_KINDS)
    p_poly.add_argument("--n", required=True, type=int)
    p_poly.add_argument("--r", type=_fraction_arg, default=Fraction(0))
    p_poly.add_argument("--format", choices=["json", "csv"], default="json")
    p_poly.add_argument("--out", default=None)
    p_poly.set_defaults(func=_cmd_poly)

    p_check = sub.add_parser("check", help="run the identity suite")
    p_check.add_argument("--config", default=None, help="JSON file of SuiteConfig overrides")
    p_check.add_argument("--nmax-scalar", dest="nmax_scalar", type=int, default=None)
    p_check.add_argument("--nmax-poly", dest="nmax_poly", type=int, default=None)
    p_check.add_argument("--nmax-gf", dest="nmax_gf", type=int, default=None)
    p_check.add_argument("--order", type=int, default=None)
    p_check.add_argument("--r-set", dest="r_set", default=None,
                         help="comma-separated exact rationals, e.g. 0,1/2,1")
    p_check.add_argument("--inject-fault", action="store_true",
                         help="perturb one triangle cell to exercise failure reporting")
    p_check.add_argument("--out", default=None)
    p_check.set_defaults(func=_cmd_check)

    p_dob = sub.add_parser("dobinski", help="evaluate the double series numerically")
    p_dob.add_argument("--n", required=True, type=int)
    p_dob.add_argument("--x", required=True, type=float)
    p_dob.add_argument("--max-terms", dest="max_terms", type=int, default=200)
    p_dob.add_argument("--tolerance", type=float, default=1e-9)
    p_dob.set_defaults(func=_cmd_dobinski)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())
