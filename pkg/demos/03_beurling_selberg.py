"""One-sided trigonometric approximations to an interval indicator.

Run with ``python demos/03_beurling_selberg.py``.
"""
import numpy as np

from satolab.beurling import IntervalJ, chi_hat, paired_coeff, paired_main, selberg

J = IntervalJ(0.1, 0.35)
x = np.linspace(0, 1, 2001)
for M in (3, 9, 30):
    up, lo = selberg(J, M, "majorant"), selberg(J, M, "minorant")
    print(f"M={M:3d} mean(S+)={up.mean():.4f} mean(S-)={lo.mean():.4f}"
          f"  min(S+ - chi)={np.min(up.real(x) - J.indicator(x)):+.2e}"
          f"  max(S- - chi)={np.max(lo.real(x) - J.indicator(x)):+.2e}")

# Fourier coefficients stay within 1/(M+1) of the indicator's
M = 9
S = selberg(J, M)
for m in range(1, M + 1):
    print(f"m={m}: |S(m) - chi(m)| = {abs(S[m] - chi_hat(J, m)):.4f}  "
          f"S(m)+S(-m) = {paired_coeff(S, m):+.4f}  limit {paired_main(J, m):+.4f}")

# Table of S+(x) and chi_J(x) for plotting elsewhere
grid = np.linspace(0, 1, 11)
print("x, S+(x), chi(x)")
for xi, si, ci in zip(grid, selberg(J, 9).real(grid), J.indicator(grid)):
    print(f"{xi:.2f}, {si:.4f}, {ci:.0f}")
