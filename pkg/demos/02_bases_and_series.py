# %% [markdown]
# # Rising vs falling factorials, generating series, derivatives of exp(1/x)
#
# All arithmetic below is exact (Fractions), so every comparison is equality.

# %%
from math import factorial

from lahnum import lah_row
from lahnum.factorial_basis import (
    ExactPolynomial,
    alternating_generating_series,
    exp_reciprocal_derivative,
    falling_basis_to_monomial,
    lah_generating_series,
    rising_factorial,
    rising_in_falling_coefficients,
)

n = 5
c = rising_in_falling_coefficients(n)
print("x^(n rising) in the falling basis:", c)
assert falling_basis_to_monomial(c) == rising_factorial(n)
assert c == lah_row(n)

# %%
# column k of the table, read off a power series
k = 3
s = lah_generating_series(k, 12)
print([s[m] * factorial(m) for m in range(13)])
a = alternating_generating_series(k, 12)
print([a[m] * factorial(m) for m in range(13)])

# %%
# n-th derivative of exp(1/x) = exp(1/x) * sum_j c_j x^(-j)
d = exp_reciprocal_derivative(4, 1)
print(sorted(d.coeffs.items()))
print("value at x = 1.5:", d.evaluate(1.5))

# %%
x = ExactPolynomial.x()
p = rising_factorial(3)
print("x(x+1)(x+2) =", p.coeffs, " derivative:", p.derivative().coeffs)
