# %% [markdown]
# # Row totals: convexity, and the roots of the row polynomials

# %%
from lahnum.sequence_props import (
    DifferenceTable,
    absolute_convexity_check,
    lah_total_sequence,
    root_certificate,
)

mu = lah_total_sequence(12)
table = DifferenceTable.build(mu, start=1)
for k in range(0, 7, 2):
    print(f"D^{k}:", [table[(k, n)] for n in range(1, 13 - k)][:6])

# %%
print("violations up to n + 2k <= 25:", absolute_convexity_check(lah_total_sequence(25), 25, start=1))

# %%
# sum_k L(m, k) x^k has m distinct real roots, one at 0 and the rest negative
for m in range(1, 13):
    c = root_certificate(m)
    print(m, c.root_count_negative, c.root_count_zero, c.root_count_positive, c.real_distinct_nonpositive)
