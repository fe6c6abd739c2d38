"""Series engine tests.

The oracles here work on plain lists of Fractions (termwise sums,
Cauchy convolutions, generalized binomial series), so they share no
code with the Series methods they check.
"""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from centralfact.series import Series, constant, t, two_asinh_half, two_sinh_half


# list-based oracles --------------------------------------------------------


def lmul(a, b):
    n = min(len(a), len(b))
    out = [F(0)] * n
    for i in range(n):
        for j in range(n - i):
            out[i + j] += a[i] * b[j]
    return out


def lexp(a):
    """sum_k a**k / k! on raw lists; needs a[0] == 0."""
    assert a[0] == 0
    n = len(a)
    out = [F(0)] * n
    out[0] = F(1)
    power = [F(1)] + [F(0)] * (n - 1)
    for k in range(1, n):
        power = lmul(power, a)
        fk = F(1, math.factorial(k))
        for i in range(n):
            out[i] += fk * power[i]
    return out


def llog(a):
    """sum_k (-1)**(k+1) (a-1)**k / k on raw lists; needs a[0] == 1."""
    assert a[0] == 1
    u = [a[0] - 1] + list(a[1:])
    n = len(a)
    out = [F(0)] * n
    power = [F(1)] + [F(0)] * (n - 1)
    for k in range(1, n):
        power = lmul(power, u)
        sign = F(1, k) if k % 2 == 1 else F(-1, k)
        for i in range(n):
            out[i] += sign * power[i]
    return out


def lbinom_pow(a, q):
    """(1 + (a-1))**q by the generalized binomial series; a[0] == 1."""
    assert a[0] == 1
    q = F(q)
    u = [a[0] - 1] + list(a[1:])
    n = len(a)
    out = [F(0)] * n
    power = [F(1)] + [F(0)] * (n - 1)
    coeff = F(1)
    for k in range(n):
        if k > 0:
            power = lmul(power, u)
            coeff = coeff * (q - (k - 1)) / k
        for i in range(n):
            out[i] += coeff * power[i]
    return out


def lcompose(f, g):
    """sum_k f[k] * g**k on raw lists; needs g[0] == 0."""
    assert g[0] == 0
    n = min(len(f), len(g))
    out = [F(0)] * n
    power = [F(1)] + [F(0)] * (n - 1)
    for k in range(n):
        if k > 0:
            power = lmul(power, g[:n])
        for i in range(n):
            out[i] += f[k] * power[i]
    return out


def two_sinh_half_coeffs(order):
    """Termwise expansion of exp(t/2) - exp(-t/2): odd n get 2 * (1/2)**n / n!."""
    out = []
    for n in range(order + 1):
        if n % 2 == 1:
            out.append(F(2, 2**n * math.factorial(n)))
        else:
            out.append(F(0))
    return out


# construction ---------------------------------------------------------------


def test_from_coeffs_constant():
    s = Series([1])
    assert s.order == 0
    assert s.coeffs == (F(1),)


def test_from_coeffs_identity():
    s = Series([0, 1])
    assert s.order == 1
    assert s == t(1)


def test_from_coeffs_keeps_given_values():
    s = Series([0, F(1, 2), 0, F(1, 48)])
    assert s.order == 3
    assert s.coeffs == (F(0), F(1, 2), F(0), F(1, 48))
    # doubling gives the termwise expansion of exp(t/2) - exp(-t/2)
    assert (s * 2).coeffs == tuple(two_sinh_half_coeffs(3))


def test_from_coeffs_rejects_empty():
    with pytest.raises(ValueError):
        Series([])


def test_t_needs_order_one():
    with pytest.raises(ValueError):
        t(0)


def test_two_sinh_half_matches_termwise_expansion():
    assert two_sinh_half(9).coeffs == tuple(two_sinh_half_coeffs(9))


# ring operations -------------------------------------------------------------


def test_mul_t_squared():
    x = t(5)
    assert (x * x).coeffs == (0, 0, 1, 0, 0, 0)
    assert (x * x).order == 5


def test_mul_two_sinh_half_squared():
    s = two_sinh_half(4)
    assert (s * s).coeffs == (0, 0, 1, 0, F(1, 12))


def test_additive_inverse():
    a = Series([3, F(-1, 2), 7])
    assert (a + a * F(-1)).coeffs == (0, 0, 0)


def test_scalar_ops():
    a = Series([1, 2])
    assert (a + 1).coeffs == (2, 2)
    assert (1 - a).coeffs == (0, -2)
    assert (a / 2).coeffs == (F(1, 2), 1)


def test_min_order_rule():
    a = Series([1, 2, 3, 4])
    b = Series([5, 6])
    assert (a + b).order == 1
    assert (a * b).order == 1


# exp / log / sqrt / pow -------------------------------------------------------


def test_exp_of_t():
    e = t(8).exp()
    assert e.coeffs == tuple(F(1, math.factorial(n)) for n in range(9))


def test_exp_of_zero():
    assert constant(0, 4).exp() == constant(1, 4)


def test_exp_of_two_sinh_half_order3():
    got = two_sinh_half(3).exp()
    assert got.coeffs == (1, 1, F(1, 2), F(1, 6) + F(1, 24))


def test_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        Series([1, 1]).exp()


def test_log_of_one_plus_t():
    got = (t(6) + 1).log()
    assert got.coeffs == (0, 1, F(-1, 2), F(1, 3), F(-1, 4), F(1, 5), F(-1, 6))


def test_log_exp_roundtrip_on_t():
    assert t(10).exp().log() == t(10)


def test_log_of_one_plus_quarter_t_squared():
    x = t(4)
    got = (x * x / 4 + 1).log()
    assert got.coeffs == (0, 0, F(1, 4), 0, F(-1, 32))


def test_log_requires_unit_constant():
    with pytest.raises(ValueError):
        Series([2, 1]).log()


def test_sqrt_of_one():
    assert constant(1, 5).sqrt() == constant(1, 5)


def test_sqrt_of_one_plus_quarter_t_squared():
    x = t(4)
    got = (x * x / 4 + 1).sqrt()
    assert got.coeffs == (1, 0, F(1, 8), 0, F(-1, 128))


def test_sqrt_squares_back():
    a = Series([1, 1, 0, 1])
    s = a.sqrt()
    assert s * s == a


def test_sqrt_requires_unit_constant():
    with pytest.raises(ValueError):
        Series([4, 1]).sqrt()


def test_pow_rational_integer_exponent():
    got = (t(2) + 1).pow_rational(2)
    assert got.coeffs == (1, 2, 1)


def test_pow_rational_half_agrees_with_sqrt():
    a = t(8) + 1
    assert a.pow_rational(F(1, 2)) == a.sqrt()


def test_pow_rational_inverse():
    a = t(8) + 1
    assert a.pow_rational(-1) * a == constant(1, 8)


def test_pow_rational_requires_unit_constant():
    with pytest.raises(ValueError):
        Series([0, 1]).pow_rational(F(1, 2))


def test_int_pow():
    x = t(4)
    assert x**0 == constant(1, 4)
    assert x**2 == x * x
    with pytest.raises(ValueError):
        x**-1


# composition ------------------------------------------------------------------


def test_compose_identity_inner():
    a = Series([2, 3, 5, 7])
    assert a.compose(t(3)) == a


def test_compose_identity_outer():
    g = Series([0, 1, 4, 9])
    assert t(3).compose(g) == g


def test_compose_inverse_pair_order_30():
    f = two_asinh_half(30)
    g = two_sinh_half(30)
    assert f.compose(g) == t(30)
    assert g.compose(f) == t(30)


def test_compose_requires_zero_inner_constant():
    with pytest.raises(ValueError):
        t(3).compose(Series([1, 1]))


# egf extraction ----------------------------------------------------------------


def test_egf_coeff_of_exp():
    assert t(8).exp().egf_coeff(5) == 1


def test_egf_coeff_gives_second_kind_entry():
    assert two_sinh_half(3).egf_coeff(3) == F(1, 4)


def test_egf_coeff_of_zero_series():
    assert constant(0, 6).egf_coeff(4) == 0


def test_egf_coeff_out_of_range():
    with pytest.raises(ValueError):
        constant(1, 3).egf_coeff(4)


# truncation ---------------------------------------------------------------------


def test_truncate_restricts():
    a = Series([1, 2, 3, 4])
    assert a.truncate(1).coeffs == (1, 2)
    assert a.truncate(3) is a


def test_truncate_cannot_extend():
    with pytest.raises(ValueError):
        Series([1, 2]).truncate(5)


# properties ----------------------------------------------------------------------

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=8)


def series_strategy(min_size=1, max_size=13):
    return st.lists(rationals, min_size=min_size, max_size=max_size).map(Series)


unit_series = st.lists(rationals, min_size=1, max_size=13).map(
    lambda cs: Series([F(1)] + cs[1:])
)
zero_const_series = st.lists(rationals, min_size=1, max_size=13).map(
    lambda cs: Series([F(0)] + cs[1:])
)


@given(series_strategy(), series_strategy())
def test_add_commutes(a, b):
    assert a + b == b + a


@given(series_strategy(), series_strategy())
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(series_strategy(), series_strategy(), series_strategy())
def test_add_and_mul_associate_and_distribute(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series_strategy())
def test_mul_matches_list_oracle(a):
    b = Series(reversed(a.coeffs))
    assert (a * b).coeffs == tuple(lmul(list(a.coeffs), list(b.coeffs)))


@given(zero_const_series)
def test_exp_matches_series_oracle(a):
    assert a.exp().coeffs == tuple(lexp(list(a.coeffs)))


@given(unit_series)
def test_log_matches_series_oracle(a):
    assert a.log().coeffs == tuple(llog(list(a.coeffs)))


@given(unit_series)
def test_sqrt_matches_binomial_oracle(a):
    assert a.sqrt().coeffs == tuple(lbinom_pow(list(a.coeffs), F(1, 2)))


@given(
    unit_series,
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
)
def test_pow_rational_matches_binomial_oracle(a, q):
    assert a.pow_rational(q).coeffs == tuple(lbinom_pow(list(a.coeffs), q))


@given(unit_series)
def test_exp_log_roundtrip(a):
    assert a.log().exp() == a


@given(zero_const_series)
def test_log_exp_roundtrip(b):
    assert b.exp().log() == b


@given(unit_series)
def test_sqrt_squared_is_input(a):
    s = a.sqrt()
    assert s * s == a


@given(
    unit_series,
    st.fractions(min_value=-2, max_value=2, max_denominator=4),
    st.fractions(min_value=-2, max_value=2, max_denominator=4),
)
def test_pow_rational_adds_exponents(a, p, q):
    assert a.pow_rational(p) * a.pow_rational(q) == a.pow_rational(p + q)


@given(series_strategy(min_size=2), zero_const_series)
def test_compose_matches_list_oracle(f, g):
    w = min(f.order, g.order)
    got = f.compose(g)
    assert got.order == w
    assert got.coeffs == tuple(lcompose(list(f.coeffs[: w + 1]), list(g.coeffs[: w + 1])))


@given(zero_const_series, st.integers(min_value=0, max_value=12))
def test_truncation_consistency_exp(a, m):
    m = min(m, a.order)
    assert a.exp().truncate(m) == a.truncate(m).exp()


@given(unit_series, st.integers(min_value=0, max_value=12))
def test_truncation_consistency_log_sqrt(a, m):
    m = min(m, a.order)
    assert a.log().truncate(m) == a.truncate(m).log()
    assert a.sqrt().truncate(m) == a.truncate(m).sqrt()


@given(series_strategy(), series_strategy(), st.integers(min_value=0, max_value=12))
def test_truncation_consistency_mul(a, b, m):
    m = min(m, a.order, b.order)
    assert (a * b).truncate(m) == a.truncate(m) * b.truncate(m)
