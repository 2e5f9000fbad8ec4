"""Hecke traces two ways: the Eichler-Selberg closed form and q-expansions.

Run with ``python demos/02_trace_formula.py``.
"""
from satolab.curves import trace_histogram
from satolab.ff import field_for_q
from satolab.modforms import delta_series, dim_sk, miller_basis, trace_tk_mf
from satolab.traceformula import (
    curve_cheb_sum_bound,
    hurwitz_cheb_sum,
    trace_tk_es,
    trace_tk_es_absorbed,
    verify_es,
)

print("Delta =", delta_series(8).coeffs)
print("basis of S_24:")
for f in miller_basis(24, 8).basis:
    print("   ", f.coeffs)

# The closed form splits into a square term, a class-number sum and a divisor sum.
for k, q in [(12, 5), (12, 25), (24, 49)]:
    b = trace_tk_es(k, q)
    print(f"k={k} q={q}: {b.square_term} + {b.elliptic_term} + {b.divisor_term} = {b.total};"
          f" q-expansions give {trace_tk_mf(k, q)}; single-sum form {trace_tk_es_absorbed(k, q)}")

rows = verify_es(30, 49)
print(f"{sum(r.match for r in rows)}/{len(rows)} (k, q) pairs agree exactly")
print("weights with dim S_k = 0 give trace 0:", [trace_tk_es(k, 7).total for k in (4, 6, 8, 10, 14)],
      [dim_sk(k) for k in (4, 6, 8, 10, 14)])

# Dividing by q^((k-2)/2) turns the class-number sum into a Chebyshev sum of size ~ k sqrt q.
for q in (5, 49, 101):
    print(f"q={q}: max ratio |sum H U_(k-2)| / (r k sqrt q) over k<=30:",
          round(max(hurwitz_cheb_sum(k, q)[1] for k in range(4, 31, 2)), 4))

# The same sum over curves: zero for odd m, small relative to r m q^(3/2) for even m.
hist = trace_histogram(field_for_q(101))
for m in range(1, 11):
    value, ratio = curve_cheb_sum_bound(hist, m)
    print(f"m={m:2d} sum U_m(cos theta) = {value:14.3f}  ratio {ratio:.5f}")
