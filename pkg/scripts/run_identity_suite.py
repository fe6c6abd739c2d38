#!/usr/bin/env python3
"""Run the identity suite and print a one-line verdict per check.

Handy during development; the JSON-emitting equivalent is
``centralfact check``.
"""

import argparse
import dataclasses
import sys
from fractions import Fraction

from centralfact.checks import SuiteConfig, all_pass, run_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax-scalar", type=int, default=None)
    parser.add_argument("--nmax-poly", type=int, default=None)
    parser.add_argument("--nmax-gf", type=int, default=None)
    parser.add_argument("--order", type=int, default=None)
    parser.add_argument("--r-set", default=None,
                        help="comma-separated exact rationals, e.g. 0,1/2,1")
    args = parser.parse_args()

    overrides = {}
    for key in ("nmax_scalar", "nmax_poly", "nmax_gf", "order"):
        value = getattr(args, key)
        if value is not None:
            overrides[key] = value
    if args.r_set is not None:
        overrides["r_values"] = tuple(
            Fraction(part) for part in args.r_set.split(",") if part.strip()
        )
    config = dataclasses.replace(SuiteConfig(), **overrides)

    reports = run_all(config)
    for report in reports:
        flags = " (vacuous)" if report.vacuous else ""
        line = (
            f"{report.status.upper():4s} {report.identity:24s} "
            f"{report.elapsed_s:7.3f}s  scope={report.scope}{flags}"
        )
        print(line)
        if report.counterexample is not None:
            ce = report.counterexample
            print(f"     counterexample at {ce.cell}: {ce.lhs} != {ce.rhs}")
    print(f"\n{'all checks passed' if all_pass(reports) else 'FAILURES PRESENT'}")
    return 0 if all_pass(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
