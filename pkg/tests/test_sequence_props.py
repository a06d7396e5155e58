from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, strategies as st

from lahnum.exact_core import lah_row
from lahnum.factorial_basis import ExactPolynomial
from lahnum.sequence_props import (
    DifferenceTable,
    absolute_convexity_check,
    convexity_check,
    count_real_roots,
    finite_difference,
    lah_total_sequence,
    polynomial_gcd,
    root_certificate,
    sturm_chain,
)

LAH = lah_total_sequence(30)


def test_lah_totals_prefix():
    assert LAH[:6] == [1, 3, 13, 73, 501, 4051]


@pytest.mark.parametrize("k, n, expected", [(0, 2, 3), (1, 1, 2), (2, 1, 8)])
def test_finite_difference_examples(k, n, expected):
    assert finite_difference(LAH, k, n, start=1) == expected


def test_finite_difference_out_of_range():
    with pytest.raises(IndexError):
        finite_difference(LAH, 3, 0, start=1)
    with pytest.raises(IndexError):
        finite_difference([1, 2, 3], 3, 0)


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=14))
def test_table_matches_explicit_sum(seq):
    table = DifferenceTable.build(seq)
    N = len(seq) - 1
    for k in range(N + 1):
        for n in range(N - k + 1):
            assert table[(k, n)] == finite_difference(seq, k, n)
            if k:
                assert table[(k, n)] == table[(k - 1, n + 1)] - table[(k - 1, n)]
    assert all(table[(0, n)] == seq[n] for n in range(N + 1))


def test_absolute_convexity_of_lah_totals():
    assert absolute_convexity_check(LAH, 25, start=1) == []


def test_absolute_convexity_violation():
    violations = absolute_convexity_check([1, 3, 1, 3, 1], 4)
    assert (0, 1, -4) in violations
    assert all(k >= 1 and v < 0 for _, k, v in violations)


def test_constant_sequence():
    assert absolute_convexity_check([5] * 12, 11) == []


def test_window_respects_max_total():
    # mu_1..mu_6; negative even differences need index 6:
    # Delta^2 mu_4 = 1 - 6 + 1 and Delta^4 mu_2 = 1 - 12 + 6 - 4 + 1
    seq = [1, 1, 1, 1, 3, 1]
    assert absolute_convexity_check(seq, 4, start=1) == []
    assert absolute_convexity_check(seq, 6, start=1) == [(2, 2, -8), (4, 1, -4)]


def test_convexity_check():
    assert convexity_check(LAH, (1, 20), start=1)
    assert convexity_check([factorial(n) for n in range(1, 11)], start=1)
    assert not convexity_check([1, 3, 1])


def test_sturm_chain_simple():
    x = ExactPolynomial.x()
    p = (x - 1) * (x + 2) * (x + 5)
    assert count_real_roots(p) == 3
    assert count_real_roots(p, None, Fraction(0)) == 2
    assert count_real_roots(p, Fraction(0), None) == 1
    assert count_real_roots(x * x + 1) == 0
    assert sturm_chain(p)[0] == p


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_count_real_roots_of_products(roots):
    x = ExactPolynomial.x()
    p = ExactPolynomial((1,))
    for r in roots:
        p = p * (x - r)
    p = p * (x * x + 1)
    assert count_real_roots(p) == len(set(roots))


def test_gcd_detects_repeated_root():
    x = ExactPolynomial.x()
    p = (x + 1) * (x + 1) * (x - 3)
    assert polynomial_gcd(p, p.derivative()) == x + 1


@pytest.mark.parametrize("m", range(1, 13))
def test_root_certificate(m):
    c = root_certificate(m)
    assert c.degree == m
    assert c.root_count_zero == 1
    assert c.root_count_negative == m - 1
    assert c.root_count_positive == 0
    assert c.distinct and c.all_real and c.real_distinct_nonpositive


@pytest.mark.parametrize("m", range(1, 13))
def test_root_certificate_against_sympy(m):
    x = sympy.symbols("x")
    p = sympy.Poly(sum(c * x**j for j, c in enumerate(lah_row(m), start=1)), x)
    assert p.count_roots(-sympy.oo, -sympy.Rational(1, 10**9)) == m - 1
    assert p.count_roots() == m
    assert sympy.degree(sympy.gcd(p, p.diff(x)), x) == 0


def test_root_certificate_quadratic():
    # x^2 + 2x = x (x + 2)
    c = root_certificate(2)
    assert (c.root_count_zero, c.root_count_negative) == (1, 1)
