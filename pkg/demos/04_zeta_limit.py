"""For s > 1, P_n^{(s)}(1) approaches exp(-zeta(s)), slowly.

Run: python3 demos/04_zeta_limit.py
"""
import mpmath

from plethys import zeta_convergence, zeta_value

z2 = zeta_value(2, 128)
with mpmath.workprec(128):
    print("zeta(2) =", mpmath.nstr(z2, 30), " pi^2/6 - zeta(2) =", mpmath.nstr(mpmath.pi**2 / 6 - z2, 3))

rec = zeta_convergence(2, [10, 20, 40, 80, 160], 128)
for n, value, dev in rec.rows:
    print(f"n={n:>3}  P_n(1) = {mpmath.nstr(value, 12)}  |P_n(1) - exp(-zeta(2))| = {mpmath.nstr(dev, 4)}")
# coefficients decay like 1/j**2, so the tail (and the error) shrinks like 1/n
