import math

import mpmath
import numpy as np
import pytest
import scipy.special
from hypothesis import given, strategies as st

from lahnum.special_functions import (
    ToleranceUnreachable,
    bessel_i1,
    bessel_i1_array,
    h_k_closed_form,
    hk_kernel_array,
    hypergeom_1f2,
)


def test_i1_zero():
    r = bessel_i1(0.0)
    assert r.value == 0.0 and r.terms_used >= 1


def test_i1_two_self_consistent():
    coarse = bessel_i1(2.0, tol=1e-14)
    assert coarse.tail_bound < 1e-14
    # re-sum with ten more terms than were needed
    deeper = math.fsum((2.0 / 2) ** (2 * k + 1) / (math.factorial(k) * math.factorial(k + 1))
                       for k in range(coarse.terms_used + 10))
    assert abs(coarse.value - deeper) < 1e-13


def test_i1_one_leading_term():
    assert bessel_i1(1.0).value > 0.5


@pytest.mark.parametrize("z", [0.1, 0.5, 1.0, 2.0, 4.0, 10.0, 25.0])
def test_i1_against_scipy(z):
    r = bessel_i1(z, tol=1e-15 * max(1.0, scipy.special.i1(z)))
    assert r.value == pytest.approx(scipy.special.i1(z), rel=1e-14)
    assert r.tail_bound <= 1e-15 * max(1.0, scipy.special.i1(z))


def test_i1_array_matches_scalar():
    z = np.array([0.0, 0.3, 1.0, 2.0, 7.5, 30.0])
    got = bessel_i1_array(z)
    ref = scipy.special.i1(z)
    np.testing.assert_allclose(got, ref, rtol=1e-14, atol=0)


def test_1f2_examples():
    assert hypergeom_1f2(3, 0.0).value == 1.0
    # (1)_n cancels (1)_n, leaving sum 1/(n! (n+1)!) = I_1(2)
    v0 = hypergeom_1f2(0, 1.0).value
    assert v0 == pytest.approx(scipy.special.i1(2.0), rel=1e-15)
    v1 = hypergeom_1f2(1, 1.0).value
    assert 0 < v1 < v0


@pytest.mark.parametrize("k, t", [(0, 0.5), (1, 1.0), (2, 5.0), (3, 20.0), (5, 100.0)])
def test_1f2_against_mpmath(k, t):
    ref = float(mpmath.hyp1f2(1, k + 1, k + 2, t))
    assert hypergeom_1f2(k, t, tol=1e-16 * ref).value == pytest.approx(ref, rel=1e-14)


@pytest.mark.parametrize("z", [0.5, 1.0, 2.0, 4.0])
def test_i1_equals_scaled_1f2(z):
    # I_1(z) = (z/2) 1F2(1; 1, 2; z^2/4): identical terms after reindexing
    t = z * z / 4
    assert bessel_i1(z).value == pytest.approx((z / 2) * hypergeom_1f2(0, t).value, rel=1e-12)


@pytest.mark.parametrize("k", [0, 1, 2, 4])
def test_hk_kernel_array(k):
    t = np.array([0.0, 0.2, 1.0, 9.0, 60.0])
    got = hk_kernel_array(k, t)
    ref = [float(mpmath.hyp1f2(1, k + 1, k + 2, s) * mpmath.mpf(s) ** k
                 / (math.factorial(k) * math.factorial(k + 1))) for s in t]
    np.testing.assert_allclose(got, ref, rtol=1e-14, atol=0)


def test_tolerance_unreachable_carries_partial():
    with pytest.raises(ToleranceUnreachable) as info:
        bessel_i1(50.0, tol=1e-30, max_terms=5)
    assert info.value.partial.terms_used == 5
    assert info.value.partial.value > 0


def test_hk_examples():
    assert h_k_closed_form(0, 1.0) == pytest.approx(math.e - 1, rel=1e-15)
    assert h_k_closed_form(1, 1.0) == pytest.approx(math.e - 2, rel=1e-15)
    assert h_k_closed_form(2, 2.0) == pytest.approx(math.exp(0.5) - 1.625, rel=1e-12)
    assert h_k_closed_form(2, 2.0) == pytest.approx(0.023721, abs=1e-6)
    with pytest.raises(ValueError):
        h_k_closed_form(1, 0.0)


def test_hk_decreasing_in_k():
    values = [abs(h_k_closed_form(k, 2.0)) for k in range(11)]
    assert all(b < a for a, b in zip(values, values[1:]))


@given(st.integers(0, 8), st.floats(0.05, 20.0))
def test_hk_against_mpmath(k, z):
    with mpmath.workdps(60):
        w = mpmath.mpf(1) / z
        ref = mpmath.e**w - mpmath.fsum(w**m / mpmath.factorial(m) for m in range(k + 1))
    assert h_k_closed_form(k, z) == pytest.approx(float(ref), rel=1e-12, abs=1e-300)


@given(st.floats(0.0, 40.0))
def test_i1_partial_sums_increase(z):
    prev = -1.0
    for tol in (1e-2, 1e-6, 1e-10, 1e-14):
        v = bessel_i1(z, tol=tol).value
        assert v >= prev
        prev = v
