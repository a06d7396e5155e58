import math
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from lahnum.exact_core import LahDomainError, lah, lah_row
from lahnum.factorial_basis import (
    ExactPolynomial,
    TruncatedSeries,
    alternating_generating_series,
    exp_reciprocal_derivative,
    falling_basis_to_monomial,
    falling_factorial,
    lah_derivative_prediction,
    lah_generating_series,
    rising_factorial,
    rising_in_falling_coefficients,
)

P = ExactPolynomial

polys = st.lists(st.fractions(max_denominator=20).filter(lambda f: abs(f) < 50), min_size=1, max_size=6).map(P)


def test_factorial_expansions():
    assert rising_factorial(0) == P([1])
    assert rising_factorial(2) == P([0, 1, 1])
    assert rising_factorial(3) == P([0, 2, 3, 1])
    assert falling_factorial(0) == P([1])
    assert falling_factorial(2) == P([0, -1, 1])
    assert falling_factorial(3) == P([0, 2, -3, 1])


@given(st.integers(0, 12), st.integers(-10, 10))
def test_factorials_evaluate_as_products(n, x):
    rising = falling = 1
    for j in range(n):
        rising *= x + j
        falling *= x - j
    assert rising_factorial(n)(x) == rising
    assert falling_factorial(n)(x) == falling


def test_rising_in_falling_examples():
    assert rising_in_falling_coefficients(1) == [1]
    assert rising_in_falling_coefficients(2) == [2, 1]
    assert rising_in_falling_coefficients(3) == [6, 6, 1]


@pytest.mark.parametrize("n", range(1, 26))
def test_basis_round_trip(n):
    coeffs = rising_in_falling_coefficients(n)
    assert coeffs == lah_row(n)
    assert falling_basis_to_monomial(coeffs) == rising_factorial(n)


def test_polynomial_arithmetic():
    x = P.x()
    p = (x + 1) * (x - 2)
    assert p == P([-2, -1, 1])
    assert p.derivative() == P([-1, 2])
    assert p.compose(x + 1) == P([-2, 1, 1])
    q, r = p.divmod(x - 2)
    assert q == x + 1 and r.is_zero()
    assert (p - p).degree == -1
    assert P([1, 2, 0, 0]).degree == 1


@given(polys, polys)
def test_divmod_reconstructs(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree or r.is_zero()


@given(polys, polys, st.fractions(max_denominator=10))
def test_compose_evaluates(a, b, x):
    assert a.compose(b)(x) == a(b(x))


def test_series_division_and_truncation():
    one_minus_x = TruncatedSeries.from_coeffs([1, -1], 6)
    geo = TruncatedSeries.from_coeffs([1], 6) / one_minus_x
    assert geo.coeffs == (1,) * 7
    assert (geo * one_minus_x).coeffs == (1, 0, 0, 0, 0, 0, 0)
    with pytest.raises(ZeroDivisionError):
        geo / TruncatedSeries.from_coeffs([0, 1], 6)


def test_generating_series_examples():
    s = lah_generating_series(1, 3)
    assert [s[n] for n in range(4)] == [0, 1, 1, 1]
    assert lah_generating_series(2, 3)[3] == 1
    assert lah_generating_series(3, 3)[3] == Fraction(1, 6)
    with pytest.raises(LahDomainError):
        lah_generating_series(3, 2)


def test_generating_series_via_division():
    # independent route: (x/(1-x))^k built by true series division
    order = 12
    x = TruncatedSeries.from_coeffs([0, 1], order)
    ratio = x / TruncatedSeries.from_coeffs([1, -1], order)
    for k in range(1, 6):
        expected = (ratio ** k) * Fraction(1, factorial(k))
        assert lah_generating_series(k, order) == expected


def test_generating_series_range():
    for k in range(1, 11):
        s = lah_generating_series(k, 30)
        a = alternating_generating_series(k, 30)
        for n in range(0, 31):
            expected = lah(n, k) if n >= 1 else 0
            assert s[n] * factorial(n) == expected
            assert a[n] == Fraction((-1) ** n * expected, factorial(n))


def test_alternating_examples():
    assert alternating_generating_series(1, 2)[1] == -1
    assert alternating_generating_series(1, 2)[2] == 1
    assert alternating_generating_series(2, 2)[2] == Fraction(1, 2)
    assert alternating_generating_series(1, 3)[3] == -1


def test_exp_derivative_examples():
    assert dict(exp_reciprocal_derivative(1, 1).coeffs) == {2: -1}
    assert dict(exp_reciprocal_derivative(2, 1).coeffs) == {3: 2, 4: 1}
    assert dict(exp_reciprocal_derivative(3, -1).coeffs) == {4: 6, 5: -6, 6: 1}


@pytest.mark.parametrize("sign", [1, -1])
def test_exp_derivative_matches_lah_formula(sign):
    for n in range(1, 21):
        got = exp_reciprocal_derivative(n, sign)
        assert set(got.coeffs) == set(range(n + 1, 2 * n + 1))
        assert dict(got.coeffs) == lah_derivative_prediction(n, sign)


@pytest.mark.parametrize("n, x, sign", [(1, 0.7, 1), (3, 1.3, 1), (4, 2.0, -1), (2, 0.9, -1)])
def test_exp_derivative_finite_difference(n, x, sign):
    # central differences of the (n-1)-th derivative as a numeric oracle
    if n > 1:
        prev = exp_reciprocal_derivative(n - 1, sign).evaluate
    else:
        prev = lambda t: math.exp(sign / t)  # noqa: E731
    h = 1e-5
    approx = (prev(x + h) - prev(x - h)) / (2 * h)
    exact = exp_reciprocal_derivative(n, sign).evaluate(x)
    assert approx == pytest.approx(exact, rel=1e-7)
