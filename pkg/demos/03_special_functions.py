# %% [markdown]
# # I_1, 1F2 and H_k from their power series
#
# Each scalar evaluation reports how many terms were used and a rigorous
# bound on what was thrown away.

# %%
import numpy as np

from lahnum.special_functions import (
    bessel_i1,
    bessel_i1_array,
    h_k_closed_form,
    hk_kernel_array,
    hypergeom_1f2,
)

for z in (0.5, 2.0, 10.0, 40.0):
    r = bessel_i1(z, tol=1e-12)
    print(f"I1({z:5}) = {r.value:.15g}   terms={r.terms_used:3d}  tail<={r.tail_bound:.1e}")

# %%
# 1F2(1; 1, 2; t) at t = z^2/4 is 2 I_1(z) / z
z = 3.0
print(hypergeom_1f2(0, z * z / 4).value, 2 * bessel_i1(z).value / z)

# %%
# H_k(z) = exp(1/z) minus the first k+1 terms of its series
for k in range(5):
    print(k, h_k_closed_form(k, 2.0))

# %%
t = np.linspace(0, 25, 6)
print(bessel_i1_array(2 * np.sqrt(t)))
print(hk_kernel_array(2, t))
