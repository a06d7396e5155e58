# %% [markdown]
# # Lah numbers, three ways
#
# L(n, k) counts the ways to split {1..n} into k non-empty ordered lists.
# We compute it from the closed form, by brute enumeration, and from the
# triangular recurrence, and check they all agree.

# %%
from lahnum import LahTable, lah, lah_enumeration_oracle, lah_row, lah_total

for n in range(1, 7):
    print(f"{n}:", lah_row(n), " total", lah_total(n))

# %%
# enumeration is exponential, so keep n small
for n in range(1, 7):
    assert [lah_enumeration_oracle(n, k) for k in range(1, n + 1)] == lah_row(n)
print("enumeration agrees for n <= 6")

# %%
table = LahTable.build(30)
assert all(table.row(n) == lah_row(n) for n in range(1, 31))
print("L(30, 1) =", lah(30, 1))
print("row totals:", table.totals()[:10])
