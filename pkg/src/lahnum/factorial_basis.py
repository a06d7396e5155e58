"""Exact polynomial and truncated power series algebra over the rationals.

Covers the rising and falling factorial bases, the change of basis between
them, the (ordinary and alternating) Lah generating functions, and the
Laurent coefficients of the n-th derivative of ``exp(+-1/x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

from .exact_core import LahDomainError, lah

__all__ = [
    "ExactPolynomial",
    "TruncatedSeries",
    "LaurentExpDerivative",
    "rising_factorial",
    "falling_factorial",
    "rising_in_falling_coefficients",
    "falling_basis_to_monomial",
    "lah_generating_series",
    "alternating_generating_series",
    "exp_reciprocal_derivative",
    "lah_derivative_prediction",
]

Number = Union[int, Fraction]


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (Fraction(0),)


class ExactPolynomial:
    """Dense univariate polynomial with :class:`~fractions.Fraction` coefficients.

    ``coeffs[j]`` is the coefficient of ``x**j``. Trailing zeros are dropped
    on construction, so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = (0,)):
        self.coeffs = _strip(coeffs)

    @classmethod
    def x(cls) -> "ExactPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Number) -> "ExactPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        if self.is_zero():
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactPolynomial((other,))
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ExactPolynomial({[str(c) for c in self.coeffs]})"

    def _coerce(self, other) -> "ExactPolynomial":
        if isinstance(other, ExactPolynomial):
            return other
        return ExactPolynomial((other,))

    def __add__(self, other) -> "ExactPolynomial":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return ExactPolynomial(p + q for p, q in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "ExactPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ExactPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ExactPolynomial":
        other = self._coerce(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else float(c))
        return acc

    def compose(self, inner: "ExactPolynomial") -> "ExactPolynomial":
        """``self(inner(x))`` by Horner's scheme."""
        acc = ExactPolynomial((0,))
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self, times: int = 1) -> "ExactPolynomial":
        p = self
        for _ in range(times):
            p = ExactPolynomial(j * c for j, c in enumerate(p.coeffs) if j > 0)
        return p

    def divmod(self, divisor: "ExactPolynomial") -> tuple["ExactPolynomial", "ExactPolynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        if self.degree < dd:
            return ExactPolynomial((0,)), self
        quot = [Fraction(0)] * (self.degree - dd + 1)
        for shift in range(self.degree - dd, -1, -1):
            q = rem[shift + dd] / lead
            quot[shift] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[shift + j] -= q * c
        return ExactPolynomial(quot), ExactPolynomial(rem[:dd] or (0,))

    def __mod__(self, divisor: "ExactPolynomial") -> "ExactPolynomial":
        return self.divmod(divisor)[1]

    def __floordiv__(self, divisor: "ExactPolynomial") -> "ExactPolynomial":
        return self.divmod(divisor)[0]

    def monic(self) -> "ExactPolynomial":
        if self.is_zero():
            return self
        return ExactPolynomial(c / self.leading for c in self.coeffs)


def rising_factorial(n: int) -> ExactPolynomial:
    """Expanded ``x (x+1) ... (x+n-1)``; the constant 1 for ``n = 0``."""
    if n < 0:
        raise LahDomainError(f"n must be >= 0, got {n}")
    p = ExactPolynomial((1,))
    for j in range(n):
        p = p * ExactPolynomial((j, 1))
    return p


def falling_factorial(n: int) -> ExactPolynomial:
    """Expanded ``x (x-1) ... (x-n+1)``; the constant 1 for ``n = 0``."""
    if n < 0:
        raise LahDomainError(f"n must be >= 0, got {n}")
    p = ExactPolynomial((1,))
    for j in range(n):
        p = p * ExactPolynomial((-j, 1))
    return p


def rising_in_falling_coefficients(n: int) -> list[Fraction]:
    """Coefficients ``c_1..c_n`` with ``(x)_n = sum_k c_k <x>_k``.

    The falling factorial ``<x>_k`` is monic of degree ``k``, so the system is
    triangular: peel off the top-degree term, subtract, repeat.
    """
    if n < 1:
        raise LahDomainError(f"n must be >= 1, got {n}")
    falling = [falling_factorial(k) for k in range(n + 1)]
    residual = rising_factorial(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = residual.coeffs[k] if k < len(residual.coeffs) else Fraction(0)
        coeffs[k] = c
        if c:
            residual = residual - falling[k] * c
    if not residual.is_zero():
        raise ArithmeticError("basis change left a nonzero residual")
    if coeffs[0] != 0:
        raise ArithmeticError(f"(x)_{n} has a nonzero <x>_0 component")
    return coeffs[1:]


def falling_basis_to_monomial(coeffs: Iterable[Number]) -> ExactPolynomial:
    """Inverse of the basis change: ``sum_{k>=1} coeffs[k-1] <x>_k`` in the monomial basis."""
    acc = ExactPolynomial((0,))
    for k, c in enumerate(coeffs, start=1):
        acc = acc + falling_factorial(k) * c
    return acc


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known through ``x**order``; all arithmetic truncates there."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be >= 0")
        fixed = tuple(Fraction(c) for c in self.coeffs[: self.order + 1])
        fixed += (Fraction(0),) * (self.order + 1 - len(fixed))
        object.__setattr__(self, "coeffs", fixed)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int) -> "TruncatedSeries":
        return cls(order, tuple(Fraction(c) for c in coeffs))

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n <= self.order:
            return self.coeffs[n]
        raise IndexError(f"coefficient x^{n} not retained (order {self.order})")

    def _check(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = self._check(other)
        return TruncatedSeries(order, tuple(self.coeffs[i] + other.coeffs[i] for i in range(order + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, tuple(c * other for c in self.coeffs))
        order = self._check(other)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(order, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        order = self._check(other)
        b0 = other.coeffs[0]
        if b0 == 0:
            raise ZeroDivisionError("divisor series has zero constant term")
        q = [Fraction(0)] * (order + 1)
        for n in range(order + 1):
            acc = self.coeffs[n]
            for j in range(1, n + 1):
                acc -= other.coeffs[j] * q[n - j]
            q[n] = acc / b0
        return TruncatedSeries(order, tuple(q))

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = TruncatedSeries(self.order, (Fraction(1),))
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``x**k``."""
        return TruncatedSeries(self.order, (Fraction(0),) * k + self.coeffs)


def _check_gf_args(k: int, order: int) -> None:
    if k < 1:
        raise LahDomainError(f"k must be >= 1, got {k}")
    if order < k:
        raise LahDomainError(
            f"order={order} < k={k}: the series vanishes through x^{k - 1}"
        )


def _power_over(k: int, order: int, sign: int) -> TruncatedSeries:
    # x^k times the k-th power of the geometric series 1/(1 - sign*x)
    geometric = TruncatedSeries(order, tuple(Fraction(sign) ** j for j in range(order + 1)))
    return (geometric ** k).shift(k)


def lah_generating_series(k: int, order: int) -> TruncatedSeries:
    """``(1/k!) (x/(1-x))**k`` through ``x**order``; ``[x^n] = L(n,k)/n!``."""
    _check_gf_args(k, order)
    return _power_over(k, order, +1) * Fraction(1, factorial(k))


def alternating_generating_series(k: int, order: int) -> TruncatedSeries:
    """``(-1)^k (1/k!) (x/(1+x))**k`` through ``x**order``; ``[x^n] = (-1)^n L(n,k)/n!``."""
    _check_gf_args(k, order)
    return _power_over(k, order, -1) * Fraction((-1) ** k, factorial(k))


@dataclass(frozen=True)
class LaurentExpDerivative:
    """``d^n/dx^n exp(sign/x) = exp(sign/x) * sum_j coeffs[j] * x**(-j)``."""

    n: int
    sign: int
    coeffs: Mapping[int, Fraction]

    def evaluate(self, x: float) -> float:
        """Numeric value at ``x`` (exact coefficients, floating powers)."""
        import math

        return math.exp(self.sign / x) * math.fsum(float(c) * x ** (-j) for j, c in self.coeffs.items())


def exp_reciprocal_derivative(n: int, sign: int = 1) -> LaurentExpDerivative:
    """Laurent coefficients of the n-th derivative of ``exp(sign/x)``.

    Built by repeated term-by-term differentiation: the derivative of
    ``exp(s/x) * c * x**-j`` is ``exp(s/x) * (-s*c*x**-(j+2) - j*c*x**-(j+1))``.
    Nothing about Lah numbers enters, so the result can be checked against
    :func:`lah_derivative_prediction`.
    """
    if n < 1:
        raise LahDomainError(f"n must be >= 1, got {n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    current: dict[int, Fraction] = {0: Fraction(1)}
    for _ in range(n):
        nxt: dict[int, Fraction] = {}
        for j, c in current.items():
            nxt[j + 2] = nxt.get(j + 2, Fraction(0)) - sign * c
            if j:
                nxt[j + 1] = nxt.get(j + 1, Fraction(0)) - j * c
        current = {j: c for j, c in nxt.items() if c != 0}
    return LaurentExpDerivative(n, sign, dict(sorted(current.items())))


def lah_derivative_prediction(n: int, sign: int = 1) -> dict[int, int]:
    """Closed-form Laurent coefficients: ``(-1)^n sign^k L(n,k)`` at exponent ``n+k``."""
    return {n + k: (-1) ** n * sign**k * lah(n, k) for k in range(1, n + 1)}
