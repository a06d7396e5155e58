"""Forward differences, (absolute) convexity of integer sequences, and exact
real-root certificates for the Lah polynomials ``P_{m,1}``.

A finite window is checked, never the whole infinite sequence. Root
counting uses a Sturm chain over the rationals with every remainder scaled
to a primitive integer polynomial; no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Optional, Sequence

from .exact_core import lah_polynomial, lah_total
from .factorial_basis import ExactPolynomial

__all__ = [
    "DifferenceTable",
    "RootCertificate",
    "finite_difference",
    "absolute_convexity_check",
    "convexity_check",
    "lah_total_sequence",
    "sturm_chain",
    "count_real_roots",
    "polynomial_gcd",
    "root_certificate",
]


def lah_total_sequence(n_max: int) -> list[int]:
    """``[L_1, ..., L_{n_max}]``, the Lah row sums; index origin is 1."""
    return [lah_total(n) for n in range(1, n_max + 1)]


def _at(seq: Sequence[int], index: int, start: int) -> int:
    pos = index - start
    if pos < 0 or pos >= len(seq):
        raise IndexError(
            f"sequence index {index} outside [{start}, {start + len(seq) - 1}]"
        )
    return seq[pos]


def finite_difference(seq: Sequence[int], k: int, n: int, start: int = 0) -> int:
    """``sum_{m=0}^{k} (-1)^m C(k, m) mu_{n+k-m}``, where ``seq[0]`` is ``mu_start``."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return sum((-1) ** m * comb(k, m) * _at(seq, n + k - m, start) for m in range(k + 1))


@dataclass(frozen=True)
class DifferenceTable:
    """All ``Delta^k mu_n`` with ``k + n <= N`` over ``mu_0 .. mu_N`` (shifted by ``start``)."""

    base: tuple[int, ...]
    start: int
    diffs: dict[tuple[int, int], int]

    @classmethod
    def build(cls, seq: Sequence[int], start: int = 0) -> "DifferenceTable":
        base = tuple(int(v) for v in seq)
        diffs: dict[tuple[int, int], int] = {}
        row = list(base)
        k = 0
        while row:
            for i, v in enumerate(row):
                diffs[(k, start + i)] = v
            row = [b - a for a, b in zip(row, row[1:])]
            k += 1
        return cls(base, start, diffs)

    def __getitem__(self, kn: tuple[int, int]) -> int:
        return self.diffs[kn]


def absolute_convexity_check(
    seq: Sequence[int], max_total: int, start: int = 0
) -> list[tuple[int, int, int]]:
    """Every ``(n, k, Delta^{2k} mu_n)`` with ``n + 2k <= max_total`` and a negative value.

    ``k = 0`` covers non-negativity of the entries themselves.
    """
    if max_total - start + 1 > len(seq):
        raise IndexError(f"need entries {start}..{max_total}, have {len(seq)}")
    table = DifferenceTable.build(seq[: max_total - start + 1], start)
    violations = []
    for n in range(start, max_total + 1):
        for k in range(0, (max_total - n) // 2 + 1):
            value = table[(2 * k, n)]
            if value < 0:
                violations.append((n, k, value))
    return violations


def convexity_check(seq: Sequence[int], window: Optional[tuple[int, int]] = None, start: int = 0) -> bool:
    """True iff ``Delta^2 mu_n >= 0`` whenever ``n`` and ``n + 2`` both lie in ``window``."""
    lo, hi = window if window is not None else (start, start + len(seq) - 1)
    return all(finite_difference(seq, 2, n, start) >= 0 for n in range(lo, hi - 1))


def _primitive(p: ExactPolynomial) -> ExactPolynomial:
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    if p.is_zero():
        return p
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    content = gcd(*ints)
    return ExactPolynomial(Fraction(c // content) for c in ints)


def sturm_chain(p: ExactPolynomial) -> list[ExactPolynomial]:
    """``p, p', -rem(p, p'), ...`` with each member made primitive."""
    chain = [_primitive(p), _primitive(p.derivative())]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(_primitive(r))
    return chain


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at(chain: list[ExactPolynomial], x: Optional[Fraction], at_neg_inf: bool = False) -> list[int]:
    if x is None:
        # sign of the leading term at -inf or +inf
        return [_sign(q.leading) * ((-1) ** q.degree if at_neg_inf else 1) for q in chain]
    return [_sign(q(x)) for q in chain]


def count_real_roots(p: ExactPolynomial, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``; ``None`` means infinite.

    ``p(lo)`` must be nonzero when ``lo`` is finite.
    """
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    v_lo = _variations(_signs_at(chain, lo, at_neg_inf=True))
    v_hi = _variations(_signs_at(chain, hi))
    return v_lo - v_hi


def polynomial_gcd(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    while not b.is_zero():
        a, b = b, _primitive(a % b)
    return a.monic()


@dataclass(frozen=True)
class RootCertificate:
    m: int
    degree: int
    root_count_negative: int
    root_count_zero: int
    root_count_positive: int
    distinct: bool
    all_real: bool

    @property
    def real_distinct_nonpositive(self) -> bool:
        return (
            self.all_real
            and self.distinct
            and self.root_count_positive == 0
            and self.root_count_negative + self.root_count_zero == self.degree
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "degree": self.degree,
            "root_count_negative": self.root_count_negative,
            "root_count_zero": self.root_count_zero,
            "root_count_positive": self.root_count_positive,
            "distinct": self.distinct,
            "all_real": self.all_real,
        }


def root_certificate(m: int) -> RootCertificate:
    """Exact root structure of ``P_{m,1}(x) = sum_n L(m, n) x^n``.

    ``P = x Q`` with ``Q(0) = L(m, 1) = m! != 0``, so zero is a simple root
    and the remaining roots are those of ``Q``, counted on each side of 0.
    """
    lp = lah_polynomial(m)
    p = ExactPolynomial(lp.coeffs)
    zero_mult = 0
    while p.coeffs[zero_mult] == 0:
        zero_mult += 1
    q = ExactPolynomial(p.coeffs[zero_mult:])
    zero = Fraction(0)
    neg = count_real_roots(q, None, zero) if q.degree >= 1 else 0
    pos = count_real_roots(q, zero, None) if q.degree >= 1 else 0
    g = polynomial_gcd(p, p.derivative())
    distinct = g.degree == 0
    squarefree = p // g
    all_real = count_real_roots(squarefree) == squarefree.degree
    return RootCertificate(m, p.degree, neg, zero_mult, pos, distinct, all_real)
