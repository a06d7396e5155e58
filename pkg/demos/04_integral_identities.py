# %% [markdown]
# # Checking the integral representations numerically
#
# Every identity is evaluated twice: once from an exact or series formula,
# and once by adaptive Gauss-Kronrod quadrature on [0, inf) with an explicit
# tail bound. The report carries both sides and the error estimate.

# %%
from lahnum.integral_verify import (
    run_suite,
    verify_exp_representation,
    verify_lah_sum_representation,
    verify_total_sum_integral,
)

r = verify_exp_representation(2.0)
print(r.lhs, r.rhs.value, r.rhs.error_estimate, r.rhs.truncation_point)

# %%
for n in range(1, 7):
    r = verify_total_sum_integral(n)
    print(f"n={n}: total {r.lhs:6.0f}  integral {r.rhs.value:.12f}  rel err {r.rel_error:.1e}")

# %%
r = verify_lah_sum_representation(4, 0.5)
print(r.to_dict())

# %%
reports = run_suite(tol=1e-8)
failed = [r for r in reports if not r.passed]
print(len(reports), "checks,", len(failed), "failed")


def judged(r):
    # relative error for |lhs| >= 1, absolute below
    return r.rel_error if abs(r.lhs) >= 1 else r.abs_error


worst = max((r for r in reports if r.rhs is not None), key=judged)
print("worst:", worst.identity_id, worst.parameters, f"{judged(worst):.2e}")
