"""Central factorial numbers of the second kind and their relatives.

The families computed here, with the classical notation used in the
docstrings:

* ``T(n, k)``, the central factorial numbers of the second kind, the
  change-of-basis coefficients from ``x**n`` to the central factorials
  ``x^[k]``.
* ``T_r(n+r, k+r)``, the r-extended second-kind numbers, whose
  exponential generating function picks up a factor ``exp(r*t)``.
* ``S2(n, k)``, the Stirling numbers of the second kind.
* ``S_{1,r}(n+r, k+r)``, the r-Stirling numbers of the first kind,
  defined literally as the coefficients of ``(x+r)_n`` in powers of x
  (no absolute values are taken, so entries can be negative).

Every family is computable along at least two independent paths; the
triangle builder records which path produced a table.  r-extended tables
are stored with offset indices, so cell ``(n, k)`` holds the value whose
classical arguments are ``(n + r, k + r)``; ``r`` itself stays metadata
and may be any rational.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .poly import Polynomial, X
from .series import Series, constant, t, two_sinh_half

Scalar = Union[int, Fraction]

__all__ = [
    "Family",
    "Path",
    "TriangleTable",
    "central_factorial_poly",
    "falling_factorial_poly",
    "central2",
    "central2_r",
    "central2_r_conv",
    "stirling2",
    "stirling1_r",
    "central_diff",
    "triangle",
]


class Family(str, enum.Enum):
    """Wire names of the supported number triangles."""

    SECOND = "T"
    R_SECOND = "Tr"
    FIRST = "t"
    R_FIRST = "tr"
    STIRLING2 = "S2"
    R_STIRLING1 = "S1r"


class Path(str, enum.Enum):
    """Which computation path produced a triangle."""

    DIRECT = "direct"
    CONV = "conv"
    GF = "gf"
    POLY = "poly"
    RECURRENCE = "recurrence"


@dataclass(frozen=True)
class TriangleTable:
    """Exact values of a doubly indexed family on the wedge 0 <= k <= n <= nmax.

    Only wedge cells are stored; anything outside reads as 0.  For the
    r-extended families the indices are offsets, see the module docstring.
    """

    family: Family
    r: Fraction
    nmax: int
    values: Mapping[tuple[int, int], Fraction]
    path: Path

    def cell(self, n: int, k: int) -> Fraction:
        return self.values.get((n, k), Fraction(0))

    def row(self, n: int) -> list[Fraction]:
        return [self.cell(n, k) for k in range(n + 1)]

    def cells(self) -> Iterator[tuple[int, int, Fraction]]:
        """All stored cells in ascending (n, k) order."""
        for n in range(self.nmax + 1):
            for k in range(n + 1):
                yield n, k, self.cell(n, k)


# factorial-basis polynomials -------------------------------------------


@functools.cache
def central_factorial_poly(n: int) -> Polynomial:
    """The central factorial x^[n] = x (x + n/2 - 1) ... (x - n/2 + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Polynomial((1,))
    p = X
    half_n = Fraction(n, 2)
    for i in range(1, n):
        p = p * Polynomial((half_n - i, 1))
    return p


@functools.cache
def falling_factorial_poly(n: int, shift: Scalar = 0) -> Polynomial:
    """(x + shift)(x + shift - 1) ... (x + shift - n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    shift = Fraction(shift)
    p = Polynomial((1,))
    for i in range(n):
        p = p * Polynomial((shift - i, 1))
    return p


# scalar paths -----------------------------------------------------------


@functools.cache
def central2(n: int, k: int) -> Fraction:
    """T(n, k) by the alternating sum
    (1/k!) * sum_l C(k, l) (-1)**(k-l) (l - k/2)**n.

    The sum is a k-th order central difference of x**n, so it vanishes
    identically for n < k; no case split is needed.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    total = Fraction(0)
    for l in range(k + 1):
        term = math.comb(k, l) * Fraction(2 * l - k, 2) ** n
        total += term if (k - l) % 2 == 0 else -term
    return total / math.factorial(k)


@functools.cache
def central2_r(n: int, k: int, r: Scalar) -> Fraction:
    """T_r(n+r, k+r) by the shifted alternating sum
    (1/k!) * sum_l C(k, l) (-1)**(k-l) (l + r - k/2)**n.

    Zero for n < k, for the same central-difference reason as
    :func:`central2`.  Defined for any rational r.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    total = Fraction(0)
    for l in range(k + 1):
        term = math.comb(k, l) * (Fraction(2 * l - k, 2) + r) ** n
        total += term if (k - l) % 2 == 0 else -term
    return total / math.factorial(k)


def central2_r_conv(n: int, k: int, r: Scalar) -> Fraction:
    """T_r(n+r, k+r) as the binomial convolution
    sum_{l=k}^{n} C(n, l) T(l, k) r**(n-l), an independent path used to
    cross-check :func:`central2_r`."""
    if n < k:
        raise ValueError("convolution path needs n >= k")
    if k < 0:
        raise ValueError("indices must be nonnegative")
    r = Fraction(r)
    total = Fraction(0)
    for l in range(k, n + 1):
        total += math.comb(n, l) * central2(l, k) * r ** (n - l)
    return total


@functools.cache
def stirling2(n: int, k: int) -> Fraction:
    """S2(n, k) = (1/k!) * sum_l C(k, l) (-1)**(k-l) l**n."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    total = 0
    for l in range(k + 1):
        term = math.comb(k, l) * l**n
        total += term if (k - l) % 2 == 0 else -term
    return Fraction(total, math.factorial(k))


def stirling1_r(n: int, k: int, r: Scalar) -> Fraction:
    """S_{1,r}(n+r, k+r), the coefficient of x**k in (x+r)_n."""
    if not 0 <= k <= n:
        raise ValueError("needs 0 <= k <= n")
    return falling_factorial_poly(n, Fraction(r)).coeff(k)


def central_diff(k: int, p: Polynomial, at: Scalar) -> Fraction:
    """k-th central difference of a polynomial, evaluated at a point:
    sum_l C(k, l) (-1)**(k-l) p(at + l - k/2)."""
    if k < 0:
        raise ValueError("difference order must be nonnegative")
    at = Fraction(at)
    total = Fraction(0)
    for l in range(k + 1):
        term = math.comb(k, l) * p(at + Fraction(2 * l - k, 2))
        total += term if (k - l) % 2 == 0 else -term
    return total


# triangle builder -------------------------------------------------------

_SECOND_KIND_PATHS = {
    Family.SECOND: (Path.DIRECT, Path.GF),
    Family.R_SECOND: (Path.DIRECT, Path.CONV, Path.GF),
    Family.STIRLING2: (Path.DIRECT, Path.GF),
    Family.R_STIRLING1: (Path.POLY, Path.GF),
}


def egf_triangle_values(
    base: Series, nmax: int, prefactor: Series | None = None
) -> dict[tuple[int, int], Fraction]:
    """Extract the wedge {a(n, k)} from the EGF family
    prefactor * base**k / k!, reading a(n, k) = n! * [t**n]."""
    values: dict[tuple[int, int], Fraction] = {}
    power = prefactor if prefactor is not None else constant(1, base.order)
    for k in range(nmax + 1):
        sk = power / math.factorial(k)
        for n in range(k, nmax + 1):
            values[(n, k)] = sk.egf_coeff(n)
        if k < nmax:
            power = power * base
    return values


def _gf_values(
    family: Family, nmax: int, r: Fraction, order: int | None
) -> dict[tuple[int, int], Fraction]:
    order = nmax if order is None else order
    if order < nmax:
        raise ValueError(f"series order {order} is too small for nmax {nmax}")
    if order == 0:
        base = constant(0)
        pre = constant(1)
    elif family in (Family.SECOND, Family.R_SECOND):
        base = two_sinh_half(order)
        pre = (t(order) * r).exp()
    elif family is Family.STIRLING2:
        base = t(order).exp() - 1
        pre = constant(1, order)
    else:  # R_STIRLING1
        base = (t(order) + 1).log()
        pre = (t(order) + 1).pow_rational(r)
    return egf_triangle_values(base, nmax, pre)


def triangle(
    family: Family | str,
    nmax: int,
    r: Scalar = 0,
    path: Path | str | None = None,
    order: int | None = None,
) -> TriangleTable:
    """Build a second-kind-side triangle along the requested path.

    Families handled here: T, Tr, S2, S1r.  The first-kind families live
    in :mod:`centralfact.first_kind`, which has a builder of the same
    shape.  ``order`` only matters for the generating-function path and
    must be at least ``nmax``.
    """
    family = Family(family)
    r = Fraction(r)
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    if family not in _SECOND_KIND_PATHS:
        raise ValueError(
            f"family {family.value!r} is built by centralfact.first_kind.triangle"
        )
    if family in (Family.SECOND, Family.STIRLING2) and r != 0:
        raise ValueError(f"family {family.value!r} does not take an r parameter")
    path = _SECOND_KIND_PATHS[family][0] if path is None else Path(path)
    if path not in _SECOND_KIND_PATHS[family]:
        raise ValueError(f"family {family.value!r} has no {path.value!r} path")

    if path is Path.GF:
        values = _gf_values(family, nmax, r, order)
    else:
        if family is Family.SECOND:
            cell = lambda n, k: central2(n, k)
        elif family is Family.STIRLING2:
            cell = lambda n, k: stirling2(n, k)
        elif family is Family.R_STIRLING1:
            cell = lambda n, k: stirling1_r(n, k, r)
        elif path is Path.CONV:
            cell = lambda n, k: central2_r_conv(n, k, r)
        else:
            cell = lambda n, k: central2_r(n, k, r)
        values = {(n, k): cell(n, k) for n in range(nmax + 1) for k in range(n + 1)}
    return TriangleTable(family, r, nmax, values, path)
