"""Exact Lah numbers, their row sums, associated Lah numbers and Lah polynomials.

Everything here is integer arithmetic; no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "DEFAULT_ORACLE_BOUND",
    "LahDomainError",
    "OracleRangeError",
    "LahTable",
    "LahPolynomial",
    "lah",
    "lah_enumeration_oracle",
    "lah_row",
    "lah_total",
    "associated_lah",
    "lah_polynomial",
    "shifted_lah_polynomial",
    "recovered_closed_form",
]

DEFAULT_ORACLE_BOUND = 9


class LahDomainError(ValueError):
    """Argument outside the triangle 1 <= k <= n."""


class OracleRangeError(ValueError):
    """Brute-force enumeration requested beyond its configured bound."""


def _check_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        if value < 1:
            raise LahDomainError(f"{name} must be >= 1, got {value}")


@lru_cache(maxsize=None)
def lah(n: int, k: int) -> int:
    """Unsigned Lah number ``L(n, k) = C(n-1, k-1) * n! / k!``.

    Returns 0 above the diagonal (``k > n``). Zero arguments are rejected:
    the triangle starts at ``n = k = 1``.

    >>> lah(4, 2)
    36
    """
    _check_positive(n=n, k=k)
    if k > n:
        return 0
    # n!/k! is the falling product (k+1)...(n); exact, no division needed
    ratio = 1
    for j in range(k + 1, n + 1):
        ratio *= j
    return comb(n - 1, k - 1) * ratio


def lah_enumeration_oracle(n: int, k: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Count partitions of ``{1..n}`` into ``k`` nonempty ordered lists by brute force.

    Elements are placed one at a time. Element ``i`` either opens a new list
    or is inserted into one of the gaps of the lists built so far; a layout
    with ``j`` lists over ``i - 1`` elements has ``(i - 1) + j`` gaps. The
    recursion visits every partition exactly once, so the count is an
    independent check on the closed form. Branches that can no longer end
    with exactly ``k`` lists are cut.
    """
    _check_positive(n=n, k=k)
    if n > bound:
        raise OracleRangeError(f"oracle range exceeded: n={n} > bound={bound}")
    if k > n:
        return 0

    lists: list[list[int]] = []

    def place(i: int) -> int:
        if i > n:
            return 1 if len(lists) == k else 0
        remaining = n - i + 1
        count = 0
        if len(lists) < k:
            lists.append([i])
            count += place(i + 1)
            lists.pop()
        if len(lists) + remaining - 1 >= k:
            for lst in lists:
                for pos in range(len(lst) + 1):
                    lst.insert(pos, i)
                    count += place(i + 1)
                    del lst[pos]
        return count

    return place(1)


def lah_row(n: int) -> list[int]:
    """``[L(n, 1), ..., L(n, n)]``."""
    _check_positive(n=n)
    return [lah(n, k) for k in range(1, n + 1)]


def lah_total(n: int) -> int:
    """Row sum of the Lah triangle, the number of ways to split an n-set into ordered lists."""
    return sum(lah_row(n))


def associated_lah(m: int, n: int, k: int) -> int:
    """Associated Lah number ``L_k(m, n)``; ``L_1`` coincides with :func:`lah`.

    Evaluated as the alternating binomial sum
    ``(m!/n!) * sum_{r=1}^{n} (-1)^(n-r) C(n, r) C(m + r*k - 1, m)``.
    """
    _check_positive(m=m, n=n, k=k)
    if n > m:
        return 0
    acc = 0
    for r in range(1, n + 1):
        acc += (-1) ** (n - r) * comb(n, r) * comb(m + r * k - 1, m)
    num = factorial(m) * acc
    value, rem = divmod(num, factorial(n))
    if rem:
        raise ArithmeticError(f"L_{k}({m},{n}) is not integral: {num}/{factorial(n)}")
    return value


def recovered_closed_form(m: int, k: int) -> int:
    """``((m+k)!/k!) * C(m+k-1, k-1)``, the re-derived form of ``L(m+k, k)``."""
    if not isinstance(m, int) or m < 0:
        raise LahDomainError(f"m must be a non-negative int, got {m!r}")
    _check_positive(k=k)
    return factorial(m + k) // factorial(k) * comb(m + k - 1, k - 1)


@dataclass(frozen=True)
class LahPolynomial:
    """Integer polynomial stored low-order first: ``coeffs[j]`` multiplies ``x**j``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_by_x(self) -> "LahPolynomial":
        """Exact division by ``x``; the constant term must vanish."""
        if self.coeffs[0] != 0:
            raise ValueError("polynomial is not divisible by x")
        return LahPolynomial(self.coeffs[1:])


def lah_polynomial(m: int) -> LahPolynomial:
    """``P_{m,1}(x) = sum_{n=1}^{m} L(m, n) x^n``."""
    return LahPolynomial((0, *lah_row(m)))


def shifted_lah_polynomial(n: int) -> LahPolynomial:
    """``sum_{k=0}^{n} L(n+1, k+1) x^k`` of degree ``n``.

    Equal to ``lah_polynomial(n + 1)`` divided by ``x``. Some printings write
    the coefficient of the right-hand sum as an associated number ``L_k``;
    the identity holds with the plain Lah number, which is what is used here.
    """
    if not isinstance(n, int) or n < 0:
        raise LahDomainError(f"n must be a non-negative int, got {n!r}")
    return LahPolynomial(tuple(lah(n + 1, k + 1) for k in range(n + 1)))


@dataclass(frozen=True)
class LahTable:
    """Immutable triangle ``L(n, k)`` for ``1 <= k <= n <= n_max``."""

    n_max: int
    entries: dict[tuple[int, int], int] = field(repr=False)

    @classmethod
    def build(cls, n_max: int) -> "LahTable":
        _check_positive(n_max=n_max)
        entries: dict[tuple[int, int], int] = {}
        # row recurrence L(n+1,k) = (n+k) L(n,k) + L(n,k-1)
        row = [1]
        for n in range(1, n_max + 1):
            if n > 1:
                prev = row
                row = [
                    (n - 1 + k) * (prev[k - 1] if k <= n - 1 else 0)
                    + (prev[k - 2] if k >= 2 else 0)
                    for k in range(1, n + 1)
                ]
            for k, v in enumerate(row, start=1):
                entries[(n, k)] = v
        return cls(n_max, entries)

    def __getitem__(self, nk: tuple[int, int]) -> int:
        return self.entries[nk]

    def row(self, n: int) -> list[int]:
        return [self.entries[(n, k)] for k in range(1, n + 1)]

    def totals(self) -> list[int]:
        return [sum(self.row(n)) for n in range(1, self.n_max + 1)]
