"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores the raw coefficients of ``t**0 .. t**order`` and
every operation is exact modulo ``t**(order + 1)``.  Binary operations
truncate to the smaller of the two input orders, so a result never claims
coefficients that were not determined by both inputs.

Exponential-generating-function bookkeeping is not baked into the
representation.  A series always holds ordinary coefficients, and
:meth:`Series.egf_coeff` returns ``n! * [t**n]`` on demand.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]

__all__ = [
    "Series",
    "constant",
    "t",
    "two_sinh_half",
    "two_asinh_half",
]


def _as_scalar(x: object) -> Fraction | None:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


class Series:
    """A formal power series truncated at a fixed order.

    ``Series(cs)`` represents ``cs[0] + cs[1]*t + ... + cs[-1]*t**N`` with
    ``N = len(cs) - 1``.  Instances are immutable and safe to share.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]) -> None:
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        self._coeffs = cs

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self._coeffs[n]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self._coeffs]})"

    def truncate(self, order: int) -> Series:
        """Restrict to a smaller order.  Raising the order is not allowed,
        because the dropped coefficients were never computed."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(self._coeffs[: order + 1])

    # ring operations ---------------------------------------------------

    def __add__(self, other: object) -> Series:
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series(self._coeffs[i] + other._coeffs[i] for i in range(n + 1))
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return Series((self._coeffs[0] + c,) + self._coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series(-c for c in self._coeffs)

    def __sub__(self, other: object) -> Series:
        if isinstance(other, Series):
            return self + (-other)
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return self + (-c)

    def __rsub__(self, other: object) -> Series:
        return (-self) + other

    def __mul__(self, other: object) -> Series:
        if isinstance(other, Series):
            n = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                ai = a[i]
                if ai == 0:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
            return Series(out)
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return Series(c * x for x in self._coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Series:
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return self * (Fraction(1) / c)

    def __pow__(self, exponent: int) -> Series:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series powers take a nonnegative integer exponent; "
                             "use pow_rational for rational exponents")
        result = constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    # analytic operations ------------------------------------------------

    def exp(self) -> Series:
        """Exponential of a series with zero constant term.

        Computed through the recurrence n*b[n] = sum_k k*a[k]*b[n-k], which
        is the coefficient form of b' = a'*b with b(0) = 1.
        """
        a = self._coeffs
        if a[0] != 0:
            raise ValueError("exp needs a zero constant term")
        n = self.order
        b = [Fraction(0)] * (n + 1)
        b[0] = Fraction(1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if a[k]:
                    acc += k * a[k] * b[m - k]
            b[m] = acc / m
        return Series(b)

    def log(self) -> Series:
        """Logarithm of a series with constant term 1 (from l' = a'/a)."""
        a = self._coeffs
        if a[0] != 1:
            raise ValueError("log needs constant term 1")
        n = self.order
        l = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m):
                if a[m - k]:
                    acc += k * l[k] * a[m - k]
            l[m] = a[m] - acc / m
        return Series(l)

    def sqrt(self) -> Series:
        """The unique square root with constant term 1."""
        a = self._coeffs
        if a[0] != 1:
            raise ValueError("sqrt needs constant term 1")
        n = self.order
        b = [Fraction(0)] * (n + 1)
        b[0] = Fraction(1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, m):
                acc += b[j] * b[m - j]
            b[m] = (a[m] - acc) / 2
        return Series(b)

    def pow_rational(self, q: Scalar) -> Series:
        """Raise a series with constant term 1 to an arbitrary rational
        power, as exp(q * log(self))."""
        if self._coeffs[0] != 1:
            raise ValueError("pow_rational needs constant term 1")
        return (self.log() * Fraction(q)).exp()

    def compose(self, inner: Series) -> Series:
        """self(inner(t)) for an inner series with zero constant term.

        Outer coefficients above the working order cannot reach any kept
        power of t (inner has positive valuation), so Horner evaluation
        over the first ``min(orders) + 1`` outer coefficients is exact.
        """
        if inner._coeffs[0] != 0:
            raise ValueError("compose needs an inner series with zero constant term")
        w = min(self.order, inner.order)
        inner_w = inner.truncate(w)
        acc = constant(self._coeffs[w], w)
        for k in range(w - 1, -1, -1):
            acc = acc * inner_w + self._coeffs[k]
        return acc

    def egf_coeff(self, n: int) -> Fraction:
        """n! times the coefficient of t**n."""
        if n < 0 or n > self.order:
            raise ValueError(f"egf_coeff({n}) outside truncation order {self.order}")
        return math.factorial(n) * self._coeffs[n]


def constant(c: Scalar, order: int = 0) -> Series:
    """The constant series c, represented at the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return Series((Fraction(c),) + (Fraction(0),) * order)


def t(order: int) -> Series:
    """The identity series t.  Needs order >= 1 to hold its coefficient."""
    if order < 1:
        raise ValueError("the series t needs order >= 1")
    return Series((Fraction(0), Fraction(1)) + (Fraction(0),) * (order - 1))


def two_sinh_half(order: int) -> Series:
    """exp(t/2) - exp(-t/2), the generating series behind the second-kind
    central factorial triangle."""
    if order == 0:
        return constant(0)
    half = t(order) / 2
    return half.exp() - (-half).exp()


def two_asinh_half(order: int) -> Series:
    """2*log(t/2 + sqrt(1 + t**2/4)), the compositional inverse of
    :func:`two_sinh_half` and the first-kind generating series."""
    if order == 0:
        return constant(0)
    x = t(order)
    inner = x / 2 + (x * x / 4 + 1).sqrt()
    return inner.log() * 2
