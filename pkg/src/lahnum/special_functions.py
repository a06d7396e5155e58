"""Series evaluation of I_1, 1F2(1; k+1, k+2; t) and H_k with truncation control.

Both series have positive terms whose successive ratio decreases
monotonically. Once that ratio ``r`` is below 1/2 the omitted tail is at most
``next_term / (1 - r)``, which is the bound reported in :class:`SeriesValue`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_MAX_TERMS",
    "SeriesValue",
    "ToleranceUnreachable",
    "bessel_i1",
    "hypergeom_1f2",
    "h_k_closed_form",
    "bessel_i1_array",
    "hk_kernel_array",
]

DEFAULT_MAX_TERMS = 10_000


@dataclass(frozen=True)
class SeriesValue:
    value: float
    terms_used: int
    tail_bound: float


class ToleranceUnreachable(ArithmeticError):
    """Raised when the term budget runs out before the tail bound meets ``tol``.

    The best partial sum is attached as ``partial``.
    """

    def __init__(self, message: str, partial: SeriesValue):
        super().__init__(message)
        self.partial = partial


def _sum_ratio_series(first: float, ratio, tol: float, max_terms: int, what: str) -> SeriesValue:
    """Sum ``first * prod ratio(j)`` for j = 0, 1, ... until the tail is below ``tol``.

    ``ratio(j)`` is term(j+1)/term(j) and must be non-increasing in ``j``.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    terms = [first]
    term = first
    tail = math.inf
    for j in range(max_terms):
        r = ratio(j)
        nxt = term * r
        if r < 0.5:
            tail = nxt / (1.0 - r)
            if tail <= tol:
                return SeriesValue(math.fsum(terms), len(terms), tail)
        if len(terms) == max_terms:
            break
        terms.append(nxt)
        term = nxt
    partial = SeriesValue(math.fsum(terms), len(terms), tail)
    raise ToleranceUnreachable(
        f"{what}: tolerance {tol:g} unreachable within {max_terms} terms", partial
    )


def bessel_i1(z: float, tol: float = 1e-15, max_terms: int = DEFAULT_MAX_TERMS) -> SeriesValue:
    """Modified Bessel function ``I_1(z)`` for real ``z >= 0`` from its power series.

    ``I_1(z) = sum_k (z/2)^(2k+1) / (k! (k+1)!)``; the term ratio is
    ``(z/2)^2 / ((k+1)(k+2))`` with the integer denominator formed exactly.
    """
    if z < 0:
        raise ValueError(f"z must be >= 0, got {z}")
    if z == 0:
        return SeriesValue(0.0, 1, 0.0)
    q = (z / 2.0) ** 2
    return _sum_ratio_series(z / 2.0, lambda k: q / ((k + 1) * (k + 2)), tol, max_terms, "bessel_i1")


def hypergeom_1f2(k: int, t: float, tol: float = 1e-15, max_terms: int = DEFAULT_MAX_TERMS) -> SeriesValue:
    """``1F2(1; k+1, k+2; t) = sum_n t^n / ((k+1)_n (k+2)_n)`` for ``t >= 0``.

    The ``(1)_n`` numerator cancels ``n!``; the Pochhammer denominators grow
    by the exact integer factor ``(k+1+n)(k+2+n)`` per term.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if t == 0:
        return SeriesValue(1.0, 1, 0.0)
    return _sum_ratio_series(1.0, lambda n: t / ((k + 1 + n) * (k + 2 + n)), tol, max_terms, "hypergeom_1f2")


def h_k_closed_form(k: int, z: float) -> float:
    """``H_k(z) = exp(1/z) - sum_{m=0}^{k} z^(-m) / m!``.

    The leading terms cancel, so for ``1/z > 0`` or ``|1/z| <= 1`` the
    remainder series ``sum_{m>k} z^(-m)/m!`` is summed directly; it has no
    cancellation there.
    """
    if z == 0:
        raise ValueError("H_k is undefined at z = 0")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    w = 1.0 / z
    if w > 0 or abs(w) <= 1.0:
        terms = [w ** (k + 1) / math.factorial(k + 1)]
        m = k + 1
        while m <= abs(w) or abs(terms[-1]) > 1e-18 * abs(math.fsum(terms)):
            m += 1
            terms.append(terms[-1] * w / m)
        return math.fsum(terms)
    return math.fsum([math.exp(w)] + [-(w**m) / math.factorial(m) for m in range(k + 1)])


def _ratio_series_array(first: np.ndarray, ratio, max_terms: int) -> np.ndarray:
    acc = first.copy()
    term = first.copy()
    for j in range(max_terms):
        r = ratio(j)
        term = term * r
        acc += term
        if np.all((r < 0.5) & (term <= 1e-17 * acc)):
            return acc
    raise ToleranceUnreachable("array series did not converge", SeriesValue(float("nan"), max_terms, math.inf))


def bessel_i1_array(z: np.ndarray, max_terms: int = DEFAULT_MAX_TERMS) -> np.ndarray:
    """Vectorised ``I_1(z)``, ``z >= 0``, summed to double-precision relative accuracy."""
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise ValueError("z must be >= 0")
    q = (z / 2.0) ** 2
    out = _ratio_series_array(z / 2.0, lambda k: q / float((k + 1) * (k + 2)), max_terms)
    return np.where(z == 0, 0.0, out)


def hk_kernel_array(k: int, t: np.ndarray, max_terms: int = DEFAULT_MAX_TERMS) -> np.ndarray:
    """``1F2(1; k+1, k+2; t) * t^k / (k! (k+1)!)`` for an array of ``t >= 0``.

    Equal to ``sum_{j>=k} t^j / (j! (j+1)!)``, which is how it is summed.
    """
    t = np.asarray(t, dtype=float)
    first = t**k / float(math.factorial(k) * math.factorial(k + 1))
    if k == 0:
        first = np.ones_like(t)
    out = _ratio_series_array(first, lambda n: t / float((k + 1 + n) * (k + 2 + n)), max_terms)
    return np.where(first == 0, 0.0, out) if k > 0 else out
