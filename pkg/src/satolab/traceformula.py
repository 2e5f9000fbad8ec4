"""Eichler-Selberg trace formula evaluated exactly, plus the Chebyshev sums it controls.

For even k >= 4 and q = p^r,

    Tr T_k(q) = (k-1)/12 q^((k-2)/2) [q square]
                - 1/2 sum_{t^2 < 4q} w_{k-1}(t, q) H(4q - t^2)
                - 1/2 sum_{dd' = q} min(d, d')^(k-1).

The square term is what the t = +-2 sqrt q boundary contributes once H(0) = -1/12,
so the same total also comes out of a single sum over t^2 <= 4q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import factorint

from .chebyshev import lucas_w, lucas_w_table
from .classnumber import hurwitz
from .curves import TraceHistogram, hasse_bound
from .modforms import trace_tk_mf


def _check_weight(k):
    if k % 2 or k < 4:
        raise ValueError(f"weight must be even and >= 4, got {k}")


def _prime_power(q):
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"q={q} is not a prime power")
    ((p, r),) = fac.items()
    if p < 5:
        raise ValueError(f"q={q} has characteristic {p} < 5")
    return int(p), int(r)


@dataclass(frozen=True)
class ESBreakdown:
    k: int
    q: int
    square_term: Fraction
    elliptic_term: Fraction
    divisor_term: Fraction

    @property
    def total(self) -> int:
        s = self.square_term + self.elliptic_term + self.divisor_term
        if s.denominator != 1:
            raise ArithmeticError(f"Eichler-Selberg total {s} is not an integer")
        return int(s)


def _divisor_term(k, q):
    s = 0
    for d in range(1, q + 1):
        if q % d == 0:
            s += min(d, q // d) ** (k - 1)
    return Fraction(-s, 2)


def trace_tk_es(k: int, q: int) -> ESBreakdown:
    """Closed-form Tr T_k(q), split into its three terms."""
    _check_weight(k)
    _prime_power(q)
    root = math.isqrt(q)
    square = Fraction((k - 1) * root ** (k - 2), 12) if root * root == q else Fraction(0)
    twelve_sum = 0
    for t in range(-hasse_bound(q), hasse_bound(q) + 1):
        if t * t < 4 * q:
            twelve_sum += lucas_w(k - 1, t, q) * hurwitz(4 * q - t * t).twelve_H
    return ESBreakdown(k, q, square, Fraction(-twelve_sum, 24), _divisor_term(k, q))


def trace_tk_es_absorbed(k: int, q: int) -> int:
    """Same trace from one sum over t^2 <= 4q, with H(0) = -1/12 at the boundary."""
    _check_weight(k)
    _prime_power(q)
    twelve_sum = 0
    for t in range(-hasse_bound(q), hasse_bound(q) + 1):
        twelve_sum += lucas_w(k - 1, t, q) * hurwitz(4 * q - t * t).twelve_H
    total = Fraction(-twelve_sum, 24) + _divisor_term(k, q)
    if total.denominator != 1:
        raise ArithmeticError(f"absorbed total {total} is not an integer")
    return int(total)


@dataclass(frozen=True)
class ESCheckRow:
    k: int
    q: int
    es_total: int
    mf_total: int

    @property
    def match(self) -> bool:
        return self.es_total == self.mf_total


def verify_es(k_max: int = 30, q_max: int = 49, k_min: int = 4) -> list[ESCheckRow]:
    """Compare closed form and q-expansion traces over even k and prime powers q."""
    qs = [q for q in range(5, q_max + 1) if _is_valid_q(q)]
    return [
        ESCheckRow(k, q, trace_tk_es(k, q).total, trace_tk_mf(k, q))
        for k in range(k_min, k_max + 1, 2)
        for q in qs
    ]


def _is_valid_q(q):
    fac = factorint(q)
    return len(fac) == 1 and min(fac) >= 5


def hurwitz_cheb_sum(k: int, q: int) -> tuple[float, float]:
    """sum_{t^2 < 4q} H(4q - t^2) U_{k-2}(t / 2 sqrt q) and its size relative to r k sqrt q."""
    _check_weight(k)
    _, r = _prime_power(q)
    twelve_sum = hurwitz_cheb_twelve(k, q)
    value = float(Fraction(twelve_sum, 12) / Fraction(q) ** ((k - 2) // 2))
    return value, abs(value) / (r * k * math.sqrt(q))


def hurwitz_cheb_twelve(k: int, q: int) -> int:
    """12 q^((k-2)/2) times the Hurwitz-Chebyshev sum, as an exact integer."""
    return sum(
        lucas_w(k - 1, t, q) * hurwitz(4 * q - t * t).twelve_H
        for t in range(-hasse_bound(q), hasse_bound(q) + 1)
        if t * t < 4 * q
    )


def curve_cheb_integer(hist: TraceHistogram, m: int) -> int:
    """sum_t counts[t] w_{m+1}(t, q) = q^(m/2) sum_{(a,b)} U_m(cos theta_ab), exactly."""
    return sum(int(c) * lucas_w(m + 1, int(t), hist.q) for t, c in zip(hist.traces, hist.array) if c)


def curve_cheb_integers(hist: TraceHistogram, m_max: int) -> list[int]:
    """[curve_cheb_integer(hist, m) for m = 0 .. m_max] in one pass."""
    out = [0] * (m_max + 1)
    for t, c in zip(hist.traces, hist.array):
        if c:
            w = lucas_w_table(m_max + 1, int(t), hist.q)
            for m in range(m_max + 1):
                out[m] += int(c) * w[m + 1]
    return out


def curve_cheb_sum_bound(hist: TraceHistogram, m: int, r: int | None = None) -> tuple[float, float]:
    """sum over nonsingular (a, b) of U_m(cos theta_ab), and |value| / (r m q^(3/2)).

    Odd m gives exactly 0.0 (the integer sum vanishes by t -> -t symmetry).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    q = hist.q
    if r is None:
        r = _prime_power(q)[1]
    exact = curve_cheb_integer(hist, m)
    if m % 2 == 0:
        value = float(Fraction(exact, q ** (m // 2)))
    else:
        value = float(exact / np.sqrt(float(q)) ** m) if exact else 0.0
    return value, abs(value) / (r * m * q**1.5)


def deuring_correction(hist: TraceHistogram, p: int, m: int) -> int:
    """Exact defect in 24 * curve sum = (q-1) * 12 * class sum, at k = m + 2.

    Traces prime to p obey counts[t] = (q-1) H(4q - t^2) / 2 and drop out; what
    remains is the p | t rows plus the t = +-2 sqrt q rows (which have no
    class-number counterpart).
    """
    q = hist.q
    total = 0
    for t in hist.traces:
        t = int(t)
        if t * t == 4 * q:
            total += 24 * hist[t] * lucas_w(m + 1, t, q)
        elif t % p == 0:
            diff = 24 * hist[t] - (q - 1) * hurwitz(4 * q - t * t).twelve_H
            total += diff * lucas_w(m + 1, t, q)
    return total
