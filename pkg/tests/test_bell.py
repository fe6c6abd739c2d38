"""Bell polynomials and the numeric double-series evaluator."""

import math
from fractions import Fraction as F

import pytest

from centralfact.bell import (
    central_bell_poly,
    dobinski_eval,
    exact_bell_value,
    r_central_bell_poly,
    r_central_bell_via_conv,
    r_central_bell_via_stirling,
)
from centralfact.central import central2_r_conv, central_diff
from centralfact.poly import Polynomial, monomial

R_SET = (F(0), F(1, 2), F(1), F(2), F(5), F(-3, 2))


def test_central_bell_frozen():
    assert central_bell_poly(0) == Polynomial([1])
    assert central_bell_poly(2) == Polynomial([0, 0, 1])
    assert central_bell_poly(3) == Polynomial([0, F(1, 4), 0, 1])


def test_r_central_bell_frozen():
    assert r_central_bell_poly(0, 3) == Polynomial([1])
    assert r_central_bell_poly(1, 1) == Polynomial([1, 1])
    assert r_central_bell_poly(2, 1) == Polynomial([1, 2, 1])


def test_r_zero_specializes():
    for n in range(10):
        assert r_central_bell_poly(n, 0) == central_bell_poly(n)


def test_conv_path_small():
    assert r_central_bell_via_conv(2, 1) == Polynomial([1, 2, 1])
    assert r_central_bell_via_conv(0, F(9, 4)) == Polynomial([1])


def test_stirling_path_small():
    assert r_central_bell_via_stirling(0, F(3)) == Polynomial([1])
    assert r_central_bell_via_stirling(2, 1) == Polynomial([1, 2, 1])


def test_three_paths_agree():
    for r in R_SET:
        for n in range(13):
            direct = r_central_bell_poly(n, r)
            assert r_central_bell_via_conv(n, r) == direct
            assert r_central_bell_via_stirling(n, r) == direct


def test_coefficients_match_convolution_triangle():
    for r in (F(0), F(1), F(-3, 2)):
        for n in range(11):
            p = r_central_bell_poly(n, r)
            for k in range(n + 1):
                assert p.coeff(k) == central2_r_conv(n, k, r)


def test_coefficients_match_central_difference():
    for r in (F(0), F(1), F(1, 2)):
        for n in range(11):
            p = r_central_bell_poly(n, r)
            xn = monomial(n)
            for k in range(n + 1):
                assert p.coeff(k) == central_diff(k, xn, r) / math.factorial(k)


def test_degree_and_leading_coefficient():
    for r in R_SET:
        for n in range(16):
            p = r_central_bell_poly(n, r)
            assert p.degree == n
            assert p.coeff(n) == 1


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        central_bell_poly(-1)
    with pytest.raises(ValueError):
        r_central_bell_poly(-2, 1)


# numeric evaluator -----------------------------------------------------------


def test_dobinski_n0():
    got = dobinski_eval(0, 1.0)
    assert abs(got.value - 1.0) <= 1e-9
    assert got.terms_used >= 1


def test_dobinski_frozen_cases():
    assert abs(dobinski_eval(3, 1.0).value - 1.25) <= 1e-9
    assert abs(dobinski_eval(2, 2.0).value - 4.0) <= 1e-9


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("n", range(9))
def test_dobinski_matches_exact_polynomial(n, x):
    got = dobinski_eval(n, x, max_terms=200, tolerance=1e-9)
    exact = float(exact_bell_value(n, x))
    assert abs(got.value - exact) <= 1e-9
    assert got.terms_used <= 200


def test_dobinski_reports_cap_exhaustion():
    # with a cap below n+1 diagonals the threshold can never engage
    got = dobinski_eval(6, 1.0, max_terms=3, tolerance=1e-9)
    assert got.terms_used == 3
    assert got.last_term_magnitude == abs(got.last_term_magnitude)


def test_dobinski_input_validation():
    with pytest.raises(ValueError):
        dobinski_eval(2, 0.0)
    with pytest.raises(ValueError):
        dobinski_eval(2, -1.0)
    with pytest.raises(ValueError):
        dobinski_eval(-1, 1.0)
    with pytest.raises(ValueError):
        dobinski_eval(2, 1.0, max_terms=0)


def test_exact_bell_value_evaluates_polynomial():
    assert exact_bell_value(3, 1.0) == F(5, 4)
    assert exact_bell_value(2, 2) == 4
