"""alpha_k = k**(1-s): rational polynomials, Eulerian closed forms, integer sequences.

Run: python3 demos/02_polylog_family.py
"""
from plethys import Polylog, build_polynomial, scaled_integer_coefficients
from plethys.polylog import eulerian_polynomial, polylog_series_closed_form
from plethys.constructor import log_generating_series

for s in range(-3, 4):
    coeffs = build_polynomial(Polylog(s), 4).coeffs
    print(f"s={s:>2}:", ", ".join(str(c) for c in coeffs))

# s = 1 collapses: every alpha_k = 1 and P_n = 1 - x
print("s=1, n=12:", ", ".join(str(c) for c in build_polynomial(Polylog(1), 12).coeffs))

m = 3
print(f"A_{m} =", eulerian_polynomial(m).coeffs)
closed = polylog_series_closed_form(m, 8)
direct = log_generating_series(Polylog(-m), 8)
print("closed form matches direct sum:", closed.coeffs == direct.coeffs)

for s in (0, -1):
    b = scaled_integer_coefficients(build_polynomial(Polylog(s), 12))
    print(f"j! a_j for s={s}:", b)
