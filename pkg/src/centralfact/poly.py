"""Dense univariate polynomials over exact rationals.

Coefficients are stored constant-term first with no trailing zeros; the
zero polynomial is canonically ``(0,)``.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = ["Polynomial", "X", "monomial"]


def _as_scalar(x: object) -> Fraction | None:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


class Polynomial:
    """An immutable polynomial in one variable."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = (0,)) -> None:
        cs = [Fraction(c) for c in coeffs] or [Fraction(0)]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial counting as degree 0."""
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x**k; powers above the degree read as 0."""
        if k < 0:
            raise ValueError("negative power")
        if k >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return self._coeffs == (c,)

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __add__(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            a, b = self._coeffs, other._coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] += c
            return Polynomial(out)
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return self + Polynomial((c,))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            return self + (-other)
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return self + (-c)

    def __rsub__(self, other: object) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            a, b = self._coeffs, other._coeffs
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai == 0:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
            return Polynomial(out)
        c = _as_scalar(other)
        if c is None:
            return NotImplemented
        return Polynomial(c * x for x in self._coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take a nonnegative integer exponent")
        result = Polynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shifted(self, c: Scalar) -> Polynomial:
        """p(x + c), expanded exactly (binomial re-expansion via Horner)."""
        c = Fraction(c)
        if c == 0:
            return self
        step = Polynomial((c, 1))
        acc = Polynomial((self._coeffs[-1],))
        for a in reversed(self._coeffs[:-1]):
            acc = acc * step + a
        return acc


X = Polynomial((0, 1))


def monomial(n: int) -> Polynomial:
    """x**n."""
    if n < 0:
        raise ValueError("negative power")
    return Polynomial((0,) * n + (1,))
