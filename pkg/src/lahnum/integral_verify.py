"""Identity checks: closed forms against quadrature, and exact coefficient checks.

Every check returns an :class:`IdentityReport`. Numeric checks compare a
closed-form left side with a :class:`QuadratureResult`; exact checks carry
``rhs=None`` and are held to a tolerance of zero.

Tail majorants. ``I_1(x) <= e^x`` for ``x >= 0`` (the integral form
``I_1(x) = (1/pi) int_0^pi e^{x cos s} cos s ds`` is at most ``e^x``), and
``t^k 1F2(1; k+1, k+2; t) / (k! (k+1)!) = sum_{j>=k} t^j/(j!(j+1)!)`` is at
most ``I_1(2 sqrt t)/sqrt t``. So every Bessel-type integrand here is bounded
by ``C t^p exp(2 sqrt t - c t)``, whose tail is handled by
:func:`~lahnum.quadrature.exp_sqrt_tail_bound`. The majorant is re-checked
numerically on [T, 2T] for each integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional

import numpy as np

from .exact_core import lah, lah_row, lah_total, recovered_closed_form
from .factorial_basis import (
    ExactPolynomial,
    alternating_generating_series,
    exp_reciprocal_derivative,
    falling_basis_to_monomial,
    lah_derivative_prediction,
    lah_generating_series,
    rising_factorial,
    rising_in_falling_coefficients,
)
from .quadrature import (
    QuadratureError,
    QuadratureResult,
    exp_sqrt_tail_bound,
    integrate_semi_infinite,
)
from .special_functions import ToleranceUnreachable, bessel_i1_array, h_k_closed_form, hk_kernel_array

__all__ = [
    "IdentityReport",
    "DEFAULT_GRID",
    "verify_exp_representation",
    "verify_hk_representation",
    "verify_derivative_representation",
    "verify_lah_sum_representation",
    "verify_total_sum_integral",
    "verify_recovery_chain",
    "verify_gamma_integral",
    "verify_limit_formula",
    "verify_generating_function",
    "verify_alternating_generating_function",
    "verify_derivative_formula",
    "verify_basis_conversion",
    "VerificationError",
    "suite_checks",
    "run_suite",
]

DEFAULT_GRID = {
    "n": [1, 2, 3, 4, 5, 6],
    "x": [0.25, 0.5, 1.0, 2.0],
    "z": [0.5, 1.0, 2.0, 10.0],
    "k": [0, 1, 2, 3],
}

# share of the requested tolerance handed to the quadrature
_QUAD_SHARE = 0.25


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    parameters: dict[str, Any]
    lhs: float
    rhs: Optional[QuadratureResult]
    abs_error: float
    rel_error: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "parameters": dict(self.parameters),
            "lhs": self.lhs,
            "rhs": None if self.rhs is None else self.rhs.to_dict(),
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
            "passed": self.passed,
        }

    def sort_key(self) -> tuple:
        return (self.identity_id, sorted(self.parameters.items()))


def _numeric_report(identity_id: str, params: dict, lhs: float, q: QuadratureResult,
                    tol: float, scale: float = 1.0, offset: float = 0.0) -> IdentityReport:
    """Compare ``lhs`` with ``offset + scale * integral``; the stored quadrature
    result is mapped to the same units so ``rhs.value`` is directly comparable."""
    rhs = replace(q, value=offset + scale * q.value, error_estimate=abs(scale) * q.error_estimate)
    abs_error = abs(lhs - rhs.value)
    rel_error = abs_error / abs(lhs) if lhs != 0 else abs_error
    # relative test once |lhs| >= 1, absolute below
    passed = (rel_error if abs(lhs) >= 1 else abs_error) <= tol
    return IdentityReport(identity_id, params, lhs, rhs, abs_error, rel_error, passed)


def _exact_report(identity_id: str, params: dict, expected: Iterable, got: Iterable) -> IdentityReport:
    expected = [Fraction(v) for v in expected]
    got = [Fraction(v) for v in got]
    if len(expected) != len(got):
        return IdentityReport(identity_id, params, float("nan"), None, math.inf, math.inf, False)
    diff = max((abs(a - b) for a, b in zip(expected, got)), default=Fraction(0))
    scale = max((abs(a) for a in expected), default=Fraction(0))
    rel = diff / scale if scale else diff
    return IdentityReport(identity_id, params, float(scale), None, float(diff), float(rel), diff == 0)


def _quad_tol(tol: float, lhs: float, factor: float) -> float:
    """Absolute quadrature tolerance for an integral that equals ``lhs / factor``."""
    return _QUAD_SHARE * tol * max(1.0, abs(lhs)) / factor


def _bessel_moment(power: float, rate: float, tol: float, max_panels: int) -> QuadratureResult:
    """``int_0^inf I_1(2 sqrt t) t^power exp(-rate t) dt`` for ``power >= -1/2``."""

    def f(t: np.ndarray) -> np.ndarray:
        s = np.sqrt(t)
        # I_1(2 sqrt t) ~ sqrt t near 0, so the product vanishes like t^(power + 1/2)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = bessel_i1_array(2.0 * s) * t**power * np.exp(-rate * t)
        return np.where(t == 0, limit_at_zero, out)

    limit_at_zero = 1.0 if power == -0.5 else 0.0
    near = float(f(np.array([1e-14]))[0])
    assert abs(near - limit_at_zero) <= 1e-6, "integrand does not approach its limit at t=0"

    def majorant(t: np.ndarray) -> np.ndarray:
        return t**power * np.exp(2.0 * np.sqrt(t) - rate * t)

    return integrate_semi_infinite(
        f, exp_sqrt_tail_bound(power, 2.0, rate), tol, majorant=majorant, max_panels=max_panels
    )


def verify_exp_representation(z: float, tol: float = 1e-9, max_panels: int = 4000) -> IdentityReport:
    """``exp(1/z) = 1 + int_0^inf I_1(2 sqrt t)/sqrt t e^{-zt} dt``."""
    if not z > 0:
        raise ValueError(f"z must be > 0, got {z}")
    lhs = math.exp(1.0 / z)
    q = _bessel_moment(-0.5, z, _quad_tol(tol, lhs, 1.0), max_panels)
    return _numeric_report("exp_representation", {"z": z}, lhs, q, tol, offset=1.0)


def verify_hk_representation(k: int, z: float, tol: float = 1e-9, max_panels: int = 4000) -> IdentityReport:
    """``H_k(z) = (1/(k!(k+1)!)) int_0^inf 1F2(1; k+1, k+2; t) t^k e^{-zt} dt``."""
    if not z > 0:
        raise ValueError(f"z must be > 0, got {z}")
    lhs = h_k_closed_form(k, z)

    def f(t: np.ndarray) -> np.ndarray:
        return hk_kernel_array(k, t) * np.exp(-z * t)

    def majorant(t: np.ndarray) -> np.ndarray:
        return np.exp(2.0 * np.sqrt(t) - z * t) / np.sqrt(t)

    q = integrate_semi_infinite(
        f, exp_sqrt_tail_bound(-0.5, 2.0, z), _quad_tol(tol, lhs, 1.0),
        majorant=majorant, max_panels=max_panels,
    )
    return _numeric_report("hk_representation", {"k": k, "z": z}, lhs, q, tol)


def verify_derivative_representation(n: int, x: float, tol: float = 1e-9, max_panels: int = 4000) -> IdentityReport:
    """``(-1)^n (e^{1/x})^{(n)} = int_0^inf I_1(2 sqrt t) t^{n-1/2} e^{-xt} dt``.

    The left side comes from the recurrence-built Laurent coefficients.
    """
    if n < 1 or not x > 0:
        raise ValueError("need n >= 1 and x > 0")
    lhs = (-1) ** n * exp_reciprocal_derivative(n, +1).evaluate(x)
    q = _bessel_moment(n - 0.5, x, _quad_tol(tol, lhs, 1.0), max_panels)
    return _numeric_report("derivative_representation", {"n": n, "x": x}, lhs, q, tol)


def verify_lah_sum_representation(n: int, x: float, tol: float = 1e-9, max_panels: int = 4000) -> IdentityReport:
    """``sum_k L(n,k) x^k = (e^{-x}/x^n) int_0^inf I_1(2 sqrt t) t^{n-1/2} e^{-t/x} dt``."""
    if n < 1 or not x > 0:
        raise ValueError("need n >= 1 and x > 0")
    poly = ExactPolynomial([0, *lah_row(n)])
    xr = Fraction(x)
    lhs = float(poly(xr))
    prefactor = math.exp(-x) / x**n
    q = _bessel_moment(n - 0.5, 1.0 / x, _quad_tol(tol, lhs, prefactor), max_panels)
    return _numeric_report("lah_sum_representation", {"n": n, "x": x}, lhs, q, tol, scale=prefactor)


def verify_total_sum_integral(n: int, tol: float = 1e-9, max_panels: int = 4000) -> IdentityReport:
    """``sum_k L(n,k) = int_0^inf I_1(2 sqrt t) t^{n-1/2} e^{-(1+t)} dt``."""
    if n < 1:
        raise ValueError("need n >= 1")
    lhs = float(lah_total(n))
    prefactor = math.exp(-1.0)
    q = _bessel_moment(n - 0.5, 1.0, _quad_tol(tol, lhs, prefactor), max_panels)
    return _numeric_report("total_sum_integral", {"n": n}, lhs, q, tol, scale=prefactor)


def _gamma_moment(power: int, rate: float, tol: float, max_panels: int) -> QuadratureResult:
    def f(t: np.ndarray) -> np.ndarray:
        return t**power * np.exp(-rate * t)

    return integrate_semi_infinite(
        f, exp_sqrt_tail_bound(power, 0.0, rate), tol, majorant=f, max_panels=max_panels
    )


def verify_gamma_integral(k: int, tol: float = 1e-9, max_panels: int = 4000) -> IdentityReport:
    """``(k-1)! = int_0^inf t^{k-1} e^{-t} dt``."""
    if k < 1:
        raise ValueError("need k >= 1")
    lhs = float(math.factorial(k - 1))
    q = _gamma_moment(k - 1, 1.0, _quad_tol(tol, lhs, 1.0), max_panels)
    return _numeric_report("gamma_integral", {"k": k}, lhs, q, tol)


def verify_recovery_chain(m: int, k: int, x: float, tol: float = 1e-9, max_panels: int = 4000) -> IdentityReport:
    """Recovery of the closed form for ``L(m+k, k)``.

    Numeric part: ``1/(1+x)^k = (1/(k-1)!) int_0^inf t^{k-1} e^{-(1+x)t} dt``.
    Exact part: ``recovered_closed_form(m, k) == lah(m+k, k)``. An exact
    mismatch fails the report regardless of tolerance.
    """
    if k < 1 or m < 0 or x < 0:
        raise ValueError("need k >= 1, m >= 0, x >= 0")
    lhs = 1.0 / (1.0 + x) ** k
    norm = float(math.factorial(k - 1))
    q = _gamma_moment(k - 1, 1.0 + x, _quad_tol(tol, lhs, 1.0 / norm), max_panels)
    exact_ok = recovered_closed_form(m, k) == lah(m + k, k)
    rep = _numeric_report("recovery_chain", {"m": m, "k": k, "x": x, "exact_match": exact_ok},
                          lhs, q, tol, scale=1.0 / norm)
    if not exact_ok:
        rep = IdentityReport(rep.identity_id, rep.parameters, rep.lhs, rep.rhs,
                             rep.abs_error, rep.rel_error, False)
    return rep


def verify_limit_formula(n: int, m: int) -> IdentityReport:
    """Exact content of the limit formula for ``L(n, m)``.

    Differentiating ``sum_k L(n,k) x^k`` m times gives
    ``sum_{k>=m} L(n,k) k!/(k-m)! x^{k-m}``; at ``x = 0`` that is ``m! L(n, m)``.
    Both the derivative's coefficients and its value at 0 are checked.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    poly = ExactPolynomial([0, *lah_row(n)])
    deriv = poly.derivative(m)
    expected = [lah(n, k) * math.factorial(k) // math.factorial(k - m) for k in range(m, n + 1)]
    got = list(deriv.coeffs) + [Fraction(0)] * (len(expected) - len(deriv.coeffs))
    at_zero = deriv(Fraction(0)) / math.factorial(m)
    return _exact_report("limit_formula", {"n": n, "m": m},
                         expected + [lah(n, m)], got + [at_zero])


def verify_generating_function(k: int, order: int = 30) -> IdentityReport:
    s = lah_generating_series(k, order)
    got = [s[n] * math.factorial(n) for n in range(order + 1)]
    expected = [0] + [lah(n, k) for n in range(1, order + 1)]
    return _exact_report("generating_function", {"k": k, "order": order}, expected, got)


def verify_alternating_generating_function(k: int, order: int = 30) -> IdentityReport:
    s = alternating_generating_series(k, order)
    got = [s[n] for n in range(order + 1)]
    expected = [0] + [Fraction((-1) ** n * lah(n, k), math.factorial(n)) for n in range(1, order + 1)]
    return _exact_report("alternating_generating_function", {"k": k, "order": order}, expected, got)


def verify_derivative_formula(n: int, sign: int) -> IdentityReport:
    oracle = exp_reciprocal_derivative(n, sign).coeffs
    predicted = lah_derivative_prediction(n, sign)
    keys = sorted(set(oracle) | set(predicted))
    return _exact_report("derivative_formula", {"n": n, "sign": sign},
                         [predicted.get(j, 0) for j in keys], [oracle.get(j, 0) for j in keys])


def verify_basis_conversion(n: int) -> IdentityReport:
    """Rising-in-falling coefficients equal the Lah row, and convert back exactly."""
    coeffs = rising_in_falling_coefficients(n)
    back = falling_basis_to_monomial(coeffs)
    rising = rising_factorial(n)
    width = max(len(back.coeffs), len(rising.coeffs))
    pad = lambda c: list(c) + [Fraction(0)] * (width - len(c))  # noqa: E731
    return _exact_report("basis_conversion", {"n": n},
                         lah_row(n) + pad(rising.coeffs), list(coeffs) + pad(back.coeffs))


class VerificationError(RuntimeError):
    """A numeric check could not be completed; names the identity and its parameters."""

    def __init__(self, identity_id: str, parameters: dict, cause: Exception):
        super().__init__(f"{identity_id} {parameters}: {cause}")
        self.identity_id = identity_id
        self.parameters = parameters
        self.cause = cause


def suite_checks(
    tol: float = 1e-8,
    grid: Optional[dict[str, list]] = None,
    max_panels: int = 4000,
) -> list[tuple[str, dict, Callable[[], IdentityReport]]]:
    """The identity catalog over ``grid`` as ``(identity_id, parameters, thunk)`` triples."""
    g = {key: list(vals) for key, vals in DEFAULT_GRID.items()}
    if grid:
        unknown = set(grid) - set(g)
        if unknown:
            raise KeyError(f"unknown grid keys: {sorted(unknown)}")
        g.update({key: list(vals) for key, vals in grid.items()})
    ns, xs, zs, ks = g["n"], g["x"], g["z"], g["k"]
    checks: list[tuple[str, dict, Callable[[], IdentityReport]]] = []

    def add(identity_id: str, fn: Callable[..., IdentityReport], **params):
        checks.append((identity_id, params, lambda: fn(**params)))

    numeric = {"tol": tol, "max_panels": max_panels}
    for z in zs:
        add("exp_representation", lambda **p: verify_exp_representation(**p, **numeric), z=z)
        for k in ks:
            add("hk_representation", lambda **p: verify_hk_representation(**p, **numeric), k=k, z=z)
    for n in ns:
        add("total_sum_integral", lambda **p: verify_total_sum_integral(**p, **numeric), n=n)
        add("basis_conversion", verify_basis_conversion, n=n)
        for sign in (1, -1):
            add("derivative_formula", verify_derivative_formula, n=n, sign=sign)
        for m in range(1, n + 1):
            add("limit_formula", verify_limit_formula, n=n, m=m)
        for x in xs:
            add("lah_sum_representation", lambda **p: verify_lah_sum_representation(**p, **numeric), n=n, x=x)
            add("derivative_representation", lambda **p: verify_derivative_representation(**p, **numeric), n=n, x=x)
    order = max(ns) + max(max(ks), 1)
    m = max(ns)
    for k in ks:
        if k < 1:
            continue
        add("generating_function", verify_generating_function, k=k, order=max(order, k))
        add("alternating_generating_function", verify_alternating_generating_function, k=k, order=max(order, k))
        for x in xs:
            add("recovery_chain", lambda **p: verify_recovery_chain(**p, **numeric), m=m, k=k, x=x)
    return checks


def run_suite(
    tol: float = 1e-8,
    grid: Optional[dict[str, list]] = None,
    max_panels: int = 4000,
) -> list[IdentityReport]:
    """Run the identity catalog over ``grid`` (defaults to :data:`DEFAULT_GRID`).

    A quadrature or series failure is re-raised as :class:`VerificationError`.
    Reports are sorted by identity id, then parameters.
    """
    reports = []
    for identity_id, params, thunk in suite_checks(tol, grid, max_panels):
        try:
            reports.append(thunk())
        except (QuadratureError, ToleranceUnreachable) as exc:
            raise VerificationError(identity_id, params, exc) from exc
    return sorted(reports, key=IdentityReport.sort_key)
