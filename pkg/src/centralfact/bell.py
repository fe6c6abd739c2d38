"""Central Bell polynomials, their r-extension, and a numeric evaluator.

``B_n(x)`` collects the second-kind central factorial numbers as
coefficients, ``B_n(x) = sum_k T(n, k) x**k``; the r-extended version
uses ``T_r(n+r, k+r)`` instead.  Two alternative constructions of the
r-extended polynomial are provided for cross-checking, plus a floating
point evaluator for the convergent double-series representation of
``B_n(x)``.  Everything except :func:`dobinski_eval` is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .central import central2, central2_r, stirling2
from .poly import Polynomial

Scalar = Union[int, Fraction]

__all__ = [
    "DobinskiResult",
    "central_bell_poly",
    "r_central_bell_poly",
    "r_central_bell_via_conv",
    "r_central_bell_via_stirling",
    "dobinski_eval",
]


def central_bell_poly(n: int) -> Polynomial:
    """B_n(x) = sum_k T(n, k) x**k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Polynomial(central2(n, k) for k in range(n + 1))


def r_central_bell_poly(n: int, r: Scalar) -> Polynomial:
    """The r-extended polynomial, coefficients T_r(n+r, k+r)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Polynomial(central2_r(n, k, r) for k in range(n + 1))


def r_central_bell_via_conv(n: int, r: Scalar) -> Polynomial:
    """Independent path: binomial convolution of the plain central Bell
    polynomials with powers of r,
    sum_l C(n, l) B_{n-l}(x) r**l."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = Fraction(r)
    acc = Polynomial()
    for l in range(n + 1):
        acc = acc + central_bell_poly(n - l) * (math.comb(n, l) * r**l)
    return acc


def r_central_bell_via_stirling(n: int, r: Scalar) -> Polynomial:
    """Independent path through Stirling numbers of the second kind:
    coefficient of x**m is sum_l C(n, l) S2(l, m) (r - m/2)**(n-l)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = Fraction(r)
    coeffs = []
    for m in range(n + 1):
        shift = r - Fraction(m, 2)
        total = Fraction(0)
        for l in range(m, n + 1):
            s = stirling2(l, m)
            if s:
                total += math.comb(n, l) * s * shift ** (n - l)
        coeffs.append(total)
    return Polynomial(coeffs)


@dataclass(frozen=True)
class DobinskiResult:
    """Outcome of a truncated double-series evaluation."""

    value: float
    terms_used: int
    last_term_magnitude: float


def dobinski_eval(
    n: int, x: float, max_terms: int = 200, tolerance: float = 1e-9
) -> DobinskiResult:
    """Evaluate B_n(x) numerically from its convergent double series.

    The double sum is grouped by anti-diagonals m = l + j, each diagonal
    contributing (x**m / m!) * sum_j C(m, j) (-1)**j ((m - 2j)/2)**n.
    Summation stops at the first diagonal of magnitude below ``tolerance``
    once m >= n (earlier diagonals vanish identically whenever n - m is
    odd, so the threshold must not fire on them), or after ``max_terms``
    diagonals.  Exhausting ``max_terms`` is reported through the returned
    diagnostics, not raised.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if x <= 0:
        raise ValueError("x must be positive")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    total = 0.0
    weight = 1.0  # x**m / m!
    terms_used = 0
    last = 0.0
    for m in range(max_terms):
        inner = 0.0
        for j in range(m + 1):
            term = math.comb(m, j) * ((m - 2 * j) / 2.0) ** n
            inner += -term if j % 2 else term
        diag = weight * inner
        total += diag
        terms_used = m + 1
        last = abs(diag)
        if m >= n and last < tolerance:
            break
        weight = weight * x / (m + 1)
    return DobinskiResult(value=total, terms_used=terms_used, last_term_magnitude=last)


def exact_bell_value(n: int, x: Scalar) -> Fraction:
    """Exact reference value B_n(x) for checking the numeric evaluator."""
    return central_bell_poly(n)(Fraction(x))
