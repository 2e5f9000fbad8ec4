"""Counting curves y^2 = x^3 + ax + b over a finite field.

Run with ``python demos/01_curves_and_class_numbers.py``.
"""
from satolab.classnumber import hurwitz, reduced_forms
from satolab.curves import aut_size, orbit, point_count, trace_histogram, verify_deuring
from satolab.ff import make_field

# A prime field and a degree-2 extension.  Elements of F_25 are pairs of
# residues; the modulus is the smallest irreducible quadratic over F_5.
F5 = make_field(5)
F25 = make_field(5, 2)
print("F_25 modulus (low to high):", F25.modulus)

# One curve: the point count includes the point at infinity.
count, trace = point_count(F5, 1, 1)
print(f"E: y^2 = x^3 + x + 1 over F_5 has {count} points, trace {trace}")

# Isomorphic curves (u^4 a, u^6 b) share the trace.  Extra automorphisms
# appear when a = 0 or b = 0.
F7 = make_field(7)
print("#Aut of (1,1), (0,1) over F_7:", aut_size(F7, 1, 1), aut_size(F7, 0, 1))
print("orbit of (1,1) over F_7 has", len(orbit(F7, 1, 1)), "members")

# The histogram over all nonsingular pairs.  Twisting by a non-square
# flips the sign of the trace, hence the symmetry.
for F in (F5, F25):
    hist = trace_histogram(F)
    print(f"q={F.q}:", hist.counts)

# Hurwitz class numbers, stored as 12*H(N).
for N in (3, 4, 20, 23):
    h = hurwitz(N)
    print(f"H({N}) = {h.H}  forms: {reduced_forms(N)}")

# Deuring: for t prime to p, the number of pairs with trace t is
# (q-1) H(4q - t^2) / 2.  Rows with p | t are shown but not checked.
report = verify_deuring(make_field(13))
for row in report.rows:
    print(f"t={row.t:3d} count={row.count:4d} (q-1)H/2={str(row.expected('aut')):>6}  {row.status()}")
print("all asserted rows agree:", report.ok)

# The same rows against (q-1) H(4q - t^2), without the 1/2: every one is off by 2.
literal = verify_deuring(make_field(13), convention="literal")
print("without the factor 1/2:", len(literal.failures), "of", len(literal.rows), "rows fail")
