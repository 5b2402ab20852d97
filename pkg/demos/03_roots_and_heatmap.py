"""Numerical roots at two precisions and the (n, k) error grid.

Run: python3 demos/03_roots_and_heatmap.py
"""
from plethys import COMPLEX64, Polylog, bigcomplex, build_polynomial, error_matrix, find_roots
from plethys import power_sums_from_roots

P = build_polynomial(Polylog(0), 10, COMPLEX64)
rm = find_roots(P)
print("roots of P_10 (s=0):")
for r, res in zip(rm.roots, rm.residuals):
    print(f"  {r.real:+.6f} {r.imag:+.6f}i   |P(r)| = {res:.1e}")
print("sum rho^-k, k=1..12:", [round(v.real, 6) for v in power_sums_from_roots(rm, 12)])

# deviations are at working precision for k <= n and O(1) just beyond
em = error_matrix(Polylog(0), 24, 24, backend=bigcomplex(128))
for n in (6, 12, 24):
    row = " ".join(f"{em[n, k]:6.1f}" for k in range(1, 25, 3))
    print(f"n={n:>2} log10 err at k=1,4,..,22: {row}")
print("k<=n triangle all below 1e-8:", em.theorem_holds())
