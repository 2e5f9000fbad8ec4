"""Angles of Frobenius against the Sato-Tate law.

Run with ``python demos/04_sato_tate_discrepancy.py`` (a few seconds; q = 499
enumerates about 1.2e8 character values).
"""
import math

from satolab.ff import make_field
from satolab.satotate import (
    AngleInterval,
    count_NI,
    discrepancy_table,
    exponent_fit,
    moment_sum,
    mu_st,
    sandwich,
    uniform_grid,
)

I = AngleInterval(math.pi / 4, 3 * math.pi / 4)
print(f"mu_ST([pi/4, 3pi/4]) = {mu_st(I):.6f}")

for q in (101, 199, 499):
    F = make_field(q)
    N = count_NI(F, I)
    s = sandwich(F, I)
    print(f"q={q}: {s.lower:10.1f} <= N_I = {N} <= {s.upper:10.1f}   (M={s.M}),"
          f" mu q^2 = {mu_st(I) * q * q:.1f}")

# How the enclosure tightens with the degree at fixed q, until the Chebyshev sums dominate
F = make_field(199)
for M in (1, 2, 3, 5, 8, 13, 21):
    s = sandwich(F, I, M)
    print(f"q=199 M={M:2d} width {s.width:10.1f}")

# Discrepancy over a grid of half-open cells, scaled by q^(7/4)
rows = discrepancy_table([101, 199, 311, 499], uniform_grid(8))
print("q, alpha, beta, N_I, main, diff, normalized")
for r in rows:
    print(f"{r.q}, {r.alpha:.4f}, {r.beta:.4f}, {r.N_I}, {r.main:.1f}, {r.diff:+.1f}, {r.normalized:+.4f}")
print("fitted exponent of |diff| on [pi/4, 3pi/4]:", round(exponent_fit([101, 199, 311, 499], I), 3))

# Moments of the character sums, compared with C(2R, R) q^(R+2) / (R+1)
for R in (1, 2, 3):
    value, ratio = moment_sum(make_field(101), R)
    print(f"R={R}: {value}  ratio {ratio:.4f}")
