"""Central factorial numbers of the first kind and their r-extension.

``t(n, k)`` is the coefficient of ``x**k`` in the central factorial
``x^[n]``; the r-extended ``t_r(n+r, k+r)`` is the coefficient of
``x**k`` in ``(x+r)^[n]``.  Three independent paths are provided:

* ``poly``: expand the (shifted) central factorial polynomial.
* ``gf``: EGF extraction from
  (t/2 + sqrt(1 + t**2/4))**(2r) * (2*log(t/2 + sqrt(1 + t**2/4)))**k / k!.
* ``recurrence``: the two-step row recurrence obtained from
  (x+r)^[n+1] = (x+r)^[n-1] * ((x+r)**2 - ((n-1)/2)**2).

Tables use the same offset-index convention as
:class:`centralfact.central.TriangleTable`.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Union

from .central import Family, Path, TriangleTable, central_factorial_poly, egf_triangle_values
from .poly import Polynomial
from .series import constant, t, two_asinh_half

Scalar = Union[int, Fraction]

__all__ = ["central1", "central1_r", "triangle"]

_FIRST_KIND_PATHS = {
    Family.FIRST: (Path.POLY, Path.GF),
    Family.R_FIRST: (Path.POLY, Path.GF, Path.RECURRENCE),
}


@functools.cache
def _shifted_central_poly(n: int, r: Fraction) -> Polynomial:
    return central_factorial_poly(n).shifted(r)


def central1(n: int, k: int) -> Fraction:
    """t(n, k), the coefficient of x**k in x^[n]."""
    if not 0 <= k <= n:
        raise ValueError("needs 0 <= k <= n")
    return central_factorial_poly(n).coeff(k)


def central1_r(n: int, k: int, r: Scalar) -> Fraction:
    """t_r(n+r, k+r), the coefficient of x**k in (x+r)^[n]."""
    if not 0 <= k <= n:
        raise ValueError("needs 0 <= k <= n")
    return _shifted_central_poly(n, Fraction(r)).coeff(k)


def _recurrence_rows(nmax: int, r: Fraction) -> list[list[Fraction]]:
    # Rows n and n+2 are linked, so both n=0 and n=1 seed the recursion:
    # (x+r)^[0] = 1 and (x+r)^[1] = x + r.
    rows = [[Fraction(1)]]
    if nmax >= 1:
        rows.append([Fraction(r), Fraction(1)])
    for m in range(2, nmax + 1):
        prev = rows[m - 2]
        two_r = 2 * r
        drop = r * r - Fraction(m - 2, 2) ** 2
        row = []
        for k in range(m + 1):
            v = Fraction(0)
            if 0 <= k - 2 <= m - 2:
                v += prev[k - 2]
            if 0 <= k - 1 <= m - 2:
                v += two_r * prev[k - 1]
            if k <= m - 2:
                v += drop * prev[k]
            row.append(v)
        rows.append(row)
    return rows


def _gf_values(nmax: int, r: Fraction, order: int | None) -> dict[tuple[int, int], Fraction]:
    order = nmax if order is None else order
    if order < nmax:
        raise ValueError(f"series order {order} is too small for nmax {nmax}")
    if order == 0:
        return egf_triangle_values(constant(0), nmax, constant(1))
    base = two_asinh_half(order)
    if r == 0:
        pre = constant(1, order)
    else:
        x = t(order)
        pre = (x / 2 + (x * x / 4 + 1).sqrt()).pow_rational(2 * r)
    return egf_triangle_values(base, nmax, pre)


def triangle(
    family: Family | str,
    nmax: int,
    r: Scalar = 0,
    path: Path | str | None = None,
    order: int | None = None,
) -> TriangleTable:
    """Build a first-kind triangle (families t and tr) along one path."""
    family = Family(family)
    r = Fraction(r)
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    if family not in _FIRST_KIND_PATHS:
        raise ValueError(
            f"family {family.value!r} is built by centralfact.central.triangle"
        )
    if family is Family.FIRST and r != 0:
        raise ValueError("family 't' does not take an r parameter")
    path = Path.POLY if path is None else Path(path)
    if path not in _FIRST_KIND_PATHS[family]:
        raise ValueError(f"family {family.value!r} has no {path.value!r} path")

    if path is Path.GF:
        values = _gf_values(nmax, r, order)
    elif path is Path.RECURRENCE:
        rows = _recurrence_rows(nmax, r)
        values = {
            (n, k): rows[n][k] for n in range(nmax + 1) for k in range(n + 1)
        }
    else:
        values = {
            (n, k): central1_r(n, k, r)
            for n in range(nmax + 1)
            for k in range(n + 1)
        }
    return TriangleTable(family, r, nmax, values, path)
