"""Machine verification of the identities linking the number families.

Each check compares two computation paths that share nothing beyond the
rational, polynomial and series primitives, over a finite parameter
grid.  All comparisons are exact except the Dobinski convergence check,
which carries a floating tolerance.  A failing check reports the first
counterexample in lexicographic (n, k, then r) order; a check whose grid
is empty passes vacuously and says so.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence, Union

from . import first_kind
from .bell import (
    dobinski_eval,
    exact_bell_value,
    r_central_bell_poly,
    r_central_bell_via_conv,
    r_central_bell_via_stirling,
)
from .central import (
    Family,
    Path,
    central2,
    central2_r,
    central2_r_conv,
    central_diff,
    central_factorial_poly,
    falling_factorial_poly,
    stirling1_r,
    stirling2,
    triangle,
)
from .poly import Polynomial, monomial
from .series import two_asinh_half, two_sinh_half

Scalar = Union[int, Fraction]
RValues = Sequence[Scalar]

DEFAULT_R_VALUES: tuple[Fraction, ...] = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
    Fraction(5),
    Fraction(-3, 2),
)

__all__ = [
    "DEFAULT_R_VALUES",
    "Counterexample",
    "CheckReport",
    "SuiteConfig",
    "run_all",
    "all_pass",
    "check_second_kind_conv",
    "check_second_kind_gf",
    "check_stirling_gf",
    "check_central_difference",
    "check_power_to_falling",
    "check_power_to_central",
    "check_bell_coefficients",
    "check_bell_conv",
    "check_bell_stirling",
    "check_product_rule",
    "check_first_kind_gf",
    "check_first_kind_recurrence",
    "check_inverse_relations",
    "check_gf_inverse",
    "check_dobinski",
]


@dataclass(frozen=True)
class Counterexample:
    cell: dict[str, str]
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"cell": dict(self.cell), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckReport:
    identity: str
    grid: str
    scope: str  # "standard" for nonnegative-integer r grids, else "extended"
    status: str  # "pass" | "fail"
    vacuous: bool
    counterexample: Counterexample | None
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "grid": self.grid,
            "scope": self.scope,
            "status": self.status,
            "vacuous": self.vacuous,
            "counterexample": (
                None if self.counterexample is None else self.counterexample.to_dict()
            ),
            "elapsed_s": self.elapsed_s,
        }


def _scope(r_values: RValues) -> str:
    rs = [Fraction(r) for r in r_values]
    if all(r.denominator == 1 and r >= 0 for r in rs):
        return "standard"
    return "extended"


def _rset(r_values: RValues) -> str:
    return "{" + ", ".join(str(Fraction(r)) for r in r_values) + "}"


Comparison = tuple[dict[str, str], object, object]


def _run(
    identity: str,
    grid: str,
    scope: str,
    comparisons: Iterable[Comparison],
    equal: Callable[[object, object], bool] | None = None,
) -> CheckReport:
    eq = equal if equal is not None else (lambda a, b: a == b)
    start = time.perf_counter()
    count = 0
    counterexample = None
    for cell, lhs, rhs in comparisons:
        count += 1
        if not eq(lhs, rhs):
            counterexample = Counterexample(cell=cell, lhs=str(lhs), rhs=str(rhs))
            break
    elapsed = time.perf_counter() - start
    return CheckReport(
        identity=identity,
        grid=grid,
        scope=scope,
        status="fail" if counterexample else "pass",
        vacuous=count == 0,
        counterexample=counterexample,
        elapsed_s=elapsed,
    )


# second-kind checks ------------------------------------------------------


def check_second_kind_conv(
    nmax: int = 20,
    r_values: RValues = DEFAULT_R_VALUES,
    fault_cell: tuple[int, int] | None = None,
) -> CheckReport:
    """Direct alternating sum for T_r against the binomial convolution of
    the plain triangle with powers of r.  ``fault_cell`` perturbs the
    direct side at one (n, k) cell, for exercising failure reporting."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        for n in range(nmax + 1):
            for k in range(n + 1):
                for r in rs:
                    lhs = central2_r(n, k, r)
                    if fault_cell == (n, k):
                        lhs = lhs + 1
                    rhs = central2_r_conv(n, k, r)
                    yield {"n": str(n), "k": str(k), "r": str(r)}, lhs, rhs

    return _run(
        "second-kind-conv",
        f"0 <= k <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        cells(),
    )


def check_second_kind_gf(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES, order: int = 40
) -> CheckReport:
    """Generating-function extraction of the T_r triangle against the
    direct alternating sum."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        if nmax < 0:
            return
        tables = [(r, triangle(Family.R_SECOND, nmax, r, Path.GF, order)) for r in rs]
        for n in range(nmax + 1):
            for k in range(n + 1):
                for r, tab in tables:
                    yield (
                        {"n": str(n), "k": str(k), "r": str(r)},
                        tab.cell(n, k),
                        central2_r(n, k, r),
                    )

    return _run(
        "second-kind-gf",
        f"0 <= k <= n <= {nmax}, r in {_rset(rs)}, series order {order}",
        _scope(rs),
        cells(),
    )


def check_stirling_gf(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES, order: int = 40
) -> CheckReport:
    """Both Stirling companions against their generating functions: S2
    versus its alternating sum, and the first-kind r-Stirling numbers
    versus the falling-factorial expansion."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        if nmax < 0:
            return
        s2 = triangle(Family.STIRLING2, nmax, 0, Path.GF, order)
        s1 = [(r, triangle(Family.R_STIRLING1, nmax, r, Path.GF, order)) for r in rs]
        for n in range(nmax + 1):
            for k in range(n + 1):
                yield (
                    {"family": "S2", "n": str(n), "k": str(k)},
                    s2.cell(n, k),
                    stirling2(n, k),
                )
                for r, tab in s1:
                    yield (
                        {"family": "S1r", "n": str(n), "k": str(k), "r": str(r)},
                        tab.cell(n, k),
                        stirling1_r(n, k, r),
                    )

    return _run(
        "stirling-gf",
        f"0 <= k <= n <= {nmax}, r in {_rset(rs)}, series order {order}",
        _scope(rs),
        cells(),
    )


def check_central_difference(
    nmax: int = 20, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """k-th central difference of x**n at r, divided by k!, against the
    T_r value, over the full square grid so the n < k zero branch is
    exercised on both sides."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        for n in range(nmax + 1):
            xn = monomial(n)
            for k in range(nmax + 1):
                kfact = math.factorial(k)
                for r in rs:
                    delta = central_diff(k, xn, r) / kfact
                    cell = {"n": str(n), "k": str(k), "r": str(r)}
                    if n >= k:
                        yield cell, delta, central2_r(n, k, r)
                    else:
                        yield dict(cell, side="delta"), delta, Fraction(0)
                        yield dict(cell, side="direct"), central2_r(n, k, r), Fraction(0)

    return _run(
        "central-difference",
        f"0 <= n, k <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        cells(),
    )


def check_product_rule(
    mk_max: int = 12,
    nmax: int = 14,
    r_values: RValues = DEFAULT_R_VALUES,
) -> CheckReport:
    """Splitting the (m+k)-th power of the base series into an m-th and a
    k-th power: C(m+k, m) T_r(n+r, m+k+r) equals
    sum_l C(n, l) T_r(l+r, m+r) T(n-l, k)."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        for n in range(nmax + 1):
            for k in range(min(n, mk_max) + 1):
                for m in range(min(n - k, mk_max - k) + 1):
                    for r in rs:
                        lhs = math.comb(m + k, m) * central2_r(n, m + k, r)
                        rhs = Fraction(0)
                        for l in range(m, n - k + 1):
                            c2 = central2(n - l, k)
                            if c2:
                                rhs += math.comb(n, l) * central2_r(l, m, r) * c2
                        yield (
                            {"n": str(n), "k": str(k), "m": str(m), "r": str(r)},
                            lhs,
                            rhs,
                        )

    return _run(
        "second-kind-product",
        f"m + k <= {mk_max}, m + k <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        cells(),
    )


# polynomial-identity checks ----------------------------------------------


def _poly_grid_cells(
    nmax: int,
    rs: Sequence[Fraction],
    lhs_poly: Callable[[int, Fraction], Polynomial],
    rhs_poly: Callable[[int, Fraction], Polynomial],
) -> Iterator[Comparison]:
    for n in range(nmax + 1):
        pairs = [(r, lhs_poly(n, r), rhs_poly(n, r)) for r in rs]
        width = max((max(l.degree, p.degree) for _, l, p in pairs), default=0)
        for k in range(width + 1):
            for r, lp, rp in pairs:
                yield {"n": str(n), "k": str(k), "r": str(r)}, lp.coeff(k), rp.coeff(k)


def _shifted_power(n: int, r: Fraction) -> Polynomial:
    return Polynomial((r, 1)) ** n


def check_power_to_falling(
    nmax: int = 12, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """(x + r)**n rebuilt from falling factorials weighted by T_r values
    and half-integer powers, against its binomial expansion."""
    rs = [Fraction(r) for r in r_values]

    def rhs(n: int, r: Fraction) -> Polynomial:
        acc = Polynomial()
        for l in range(n + 1):
            c_nl = math.comb(n, l)
            for k in range(l + 1):
                w = c_nl * central2_r(l, k, r) * Fraction(k, 2) ** (n - l)
                if w:
                    acc = acc + falling_factorial_poly(k) * w
        return acc

    return _run(
        "power-to-falling-basis",
        f"0 <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        _poly_grid_cells(nmax, rs, _shifted_power, rhs),
    )


def check_power_to_central(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """(x + r)**n rebuilt in the central factorial basis with T_r
    coefficients, against its binomial expansion."""
    rs = [Fraction(r) for r in r_values]

    def rhs(n: int, r: Fraction) -> Polynomial:
        acc = Polynomial()
        for k in range(n + 1):
            w = central2_r(n, k, r)
            if w:
                acc = acc + central_factorial_poly(k) * w
        return acc

    return _run(
        "power-to-central-basis",
        f"0 <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        _poly_grid_cells(nmax, rs, _shifted_power, rhs),
    )


# Bell-polynomial checks ----------------------------------------------------


def check_bell_coefficients(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """Coefficients of the r-extended Bell polynomial against the
    convolution path of the second-kind triangle."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        for n in range(nmax + 1):
            polys = [(r, r_central_bell_poly(n, r)) for r in rs]
            for k in range(n + 1):
                for r, p in polys:
                    yield (
                        {"n": str(n), "k": str(k), "r": str(r)},
                        p.coeff(k),
                        central2_r_conv(n, k, r),
                    )

    return _run(
        "bell-coefficients",
        f"0 <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        cells(),
    )


def check_bell_conv(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """Binomial convolution of plain central Bell polynomials with powers
    of r against the directly assembled r-extended polynomial."""
    rs = [Fraction(r) for r in r_values]
    return _run(
        "bell-binomial-conv",
        f"0 <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        _poly_grid_cells(
            nmax,
            rs,
            lambda n, r: r_central_bell_via_conv(n, r),
            lambda n, r: r_central_bell_poly(n, r),
        ),
    )


def check_bell_stirling(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """The Stirling-number double-sum construction of the r-extended Bell
    polynomial against the directly assembled one."""
    rs = [Fraction(r) for r in r_values]
    return _run(
        "bell-via-stirling",
        f"0 <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        _poly_grid_cells(
            nmax,
            rs,
            lambda n, r: r_central_bell_via_stirling(n, r),
            lambda n, r: r_central_bell_poly(n, r),
        ),
    )


# first-kind checks ---------------------------------------------------------


def check_first_kind_gf(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES, order: int = 40
) -> CheckReport:
    """Generating-function extraction of the first-kind triangle against
    the polynomial-expansion path."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        if nmax < 0:
            return
        tables = [
            (r, first_kind.triangle(Family.R_FIRST, nmax, r, Path.GF, order))
            for r in rs
        ]
        for n in range(nmax + 1):
            for k in range(n + 1):
                for r, tab in tables:
                    yield (
                        {"n": str(n), "k": str(k), "r": str(r)},
                        tab.cell(n, k),
                        first_kind.central1_r(n, k, r),
                    )

    return _run(
        "first-kind-gf",
        f"0 <= k <= n <= {nmax}, r in {_rset(rs)}, series order {order}",
        _scope(rs),
        cells(),
    )


def check_first_kind_recurrence(
    nmax: int = 15, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """The two-step row recurrence against the polynomial-expansion path."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        if nmax < 0:
            return
        tables = [
            (r, first_kind.triangle(Family.R_FIRST, nmax, r, Path.RECURRENCE))
            for r in rs
        ]
        for n in range(nmax + 1):
            for k in range(n + 1):
                for r, tab in tables:
                    yield (
                        {"n": str(n), "k": str(k), "r": str(r)},
                        tab.cell(n, k),
                        first_kind.central1_r(n, k, r),
                    )

    return _run(
        "first-kind-recurrence",
        f"0 <= k <= n <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        cells(),
    )


def check_inverse_relations(
    nmax: int = 12, r_values: RValues = DEFAULT_R_VALUES
) -> CheckReport:
    """The two kinds invert each other: sum_j T(n, j) t(j, k) is the
    identity matrix, and with the r-extended second kind the same product
    gives the binomial coefficients of (x + r)**n."""
    rs = [Fraction(r) for r in r_values]

    def cells() -> Iterator[Comparison]:
        for n in range(nmax + 1):
            for k in range(nmax + 1):
                plain = sum(
                    (central2(n, j) * first_kind.central1(j, k) for j in range(k, n + 1)),
                    Fraction(0),
                )
                expected = Fraction(1 if n == k else 0)
                yield {"relation": "identity", "n": str(n), "k": str(k)}, plain, expected
                for r in rs:
                    mixed = sum(
                        (
                            central2_r(n, j, r) * first_kind.central1(j, k)
                            for j in range(k, n + 1)
                        ),
                        Fraction(0),
                    )
                    rhs = (
                        math.comb(n, k) * r ** (n - k) if n >= k else Fraction(0)
                    )
                    yield (
                        {"relation": "binomial", "n": str(n), "k": str(k), "r": str(r)},
                        mixed,
                        rhs,
                    )

    return _run(
        "inverse-relations",
        f"0 <= n, k <= {nmax}, r in {_rset(rs)}",
        _scope(rs),
        cells(),
    )


def check_gf_inverse(order: int = 30) -> CheckReport:
    """The two generating series are compositional inverses: composing
    them either way gives the identity series, coefficient by coefficient."""

    def cells() -> Iterator[Comparison]:
        if order < 0:
            return
        f = two_asinh_half(order)
        g = two_sinh_half(order)
        forward = f.compose(g)
        backward = g.compose(f)
        for n in range(order + 1):
            expected = Fraction(1 if n == 1 else 0)
            yield {"composition": "forward", "n": str(n)}, forward[n], expected
            yield {"composition": "backward", "n": str(n)}, backward[n], expected

    return _run(
        "egf-inverse-pair",
        f"coefficients 0..{order}",
        "standard",
        cells(),
    )


def check_dobinski(
    nmax: int = 8,
    x_values: Sequence[float] = (0.5, 1.0, 2.0),
    max_terms: int = 200,
    tolerance: float = 1e-9,
) -> CheckReport:
    """Truncated double-series evaluation against the exact polynomial
    value, within the floating tolerance.  The only non-exact check."""

    def cells() -> Iterator[Comparison]:
        for n in range(nmax + 1):
            for x in x_values:
                approx = dobinski_eval(n, x, max_terms, tolerance).value
                exact = float(exact_bell_value(n, x))
                yield {"n": str(n), "x": repr(x)}, approx, exact

    return _run(
        "dobinski-convergence",
        f"0 <= n <= {nmax}, x in {{{', '.join(repr(x) for x in x_values)}}}, "
        f"max_terms {max_terms}, tolerance {tolerance:g}",
        "standard",
        cells(),
        equal=lambda a, b: abs(a - b) <= tolerance,
    )


# the full suite -------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    """Grids for a full suite run.  Defaults are desk scale."""

    nmax_scalar: int = 20
    nmax_poly: int = 15
    nmax_falling: int = 12
    nmax_gf: int = 15
    order: int = 40
    r_values: tuple[Fraction, ...] = DEFAULT_R_VALUES
    product_mk_max: int = 12
    product_nmax: int = 14
    inverse_nmax: int = 12
    gf_inverse_order: int = 30
    dobinski_nmax: int = 8
    dobinski_x: tuple[float, ...] = (0.5, 1.0, 2.0)
    dobinski_max_terms: int = 200
    dobinski_tolerance: float = 1e-9
    fault_cell: tuple[int, int] | None = None


def run_all(config: SuiteConfig = SuiteConfig()) -> list[CheckReport]:
    """Run every check with the configured grids, in a fixed order."""
    rs = config.r_values
    return [
        check_second_kind_conv(config.nmax_scalar, rs, config.fault_cell),
        check_second_kind_gf(config.nmax_gf, rs, config.order),
        check_stirling_gf(config.nmax_gf, rs, config.order),
        check_central_difference(config.nmax_scalar, rs),
        check_power_to_falling(config.nmax_falling, rs),
        check_power_to_central(config.nmax_poly, rs),
        check_bell_coefficients(config.nmax_poly, rs),
        check_bell_conv(config.nmax_poly, rs),
        check_bell_stirling(config.nmax_poly, rs),
        check_product_rule(config.product_mk_max, config.product_nmax, rs),
        check_first_kind_gf(config.nmax_gf, rs, config.order),
        check_first_kind_recurrence(config.nmax_poly, rs),
        check_inverse_relations(config.inverse_nmax, rs),
        check_gf_inverse(config.gf_inverse_order),
        check_dobinski(
            config.dobinski_nmax,
            config.dobinski_x,
            config.dobinski_max_terms,
            config.dobinski_tolerance,
        ),
    ]


def all_pass(reports: Iterable[CheckReport]) -> bool:
    return all(r.passed for r in reports)
