"""Pick any targets alpha_1..alpha_n, build P_n, and watch its roots hit them.

Run: python3 demos/01_truncation_exactness.py
"""
from fractions import Fraction as F

from plethys import Explicit, build_polynomial, log_series_check, power_sums_newton

alpha = Explicit([F(3, 2), F(-7), F(1, 3), F(22, 7), F(0), F(5)])
n = 6
P = build_polynomial(alpha, n)
print("P_6 coefficients:", [str(c) for c in P.coeffs])

# Newton's identities give the inverse-root power sums without any root finding
sums = power_sums_newton(P, n + 2)
for k, v in enumerate(sums, 1):
    target = alpha.values[k - 1] if k <= n else "(free)"
    print(f"  sum rho^-{k} = {str(v):>14}   target {target}")

# past k = n the sums drift: truncation only pins the first n
print("log-series check:", log_series_check(P, alpha))
