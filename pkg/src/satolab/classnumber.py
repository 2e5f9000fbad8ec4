"""Hurwitz-Kronecker class numbers from reduced binary quadratic forms.

H(N) is carried as the integer 12*H(N).  Reduced forms of discriminant -N
count 1, except multiples of x^2 + y^2 (weight 1/2) and of x^2 + xy + y^2
(weight 1/3).  H(0) = -1/12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple


class QuadForm(NamedTuple):
    A: int
    B: int
    C: int

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def is_reduced(self) -> bool:
        A, B, C = self
        if not (A > 0 and abs(B) <= A <= C):
            return False
        if (abs(B) == A or A == C) and B < 0:
            return False
        return True


@dataclass(frozen=True)
class HurwitzValue:
    N: int
    twelve_H: int
    form_count: int = 0

    @property
    def H(self) -> Fraction:
        return Fraction(self.twelve_H, 12)


def _form_weight12(f: QuadForm) -> int:
    """12 / #(automorphism group / {+-1}) for a reduced form."""
    A, B, C = f
    if A == C and B == 0:
        return 6
    if A == B == C:
        return 4
    return 12


def reduced_forms(N: int) -> list[QuadForm]:
    """Reduced positive-definite forms (A, B, C) with B^2 - 4AC = -N, sorted by (A, B)."""
    if N <= 0 or N % 4 in (1, 2):
        return []
    forms = []
    for A in range(1, math.isqrt(N // 3) + 1):
        for B in range(-A, A + 1):
            if (B - N) % 2:
                continue
            num = B * B + N
            if num % (4 * A):
                continue
            C = num // (4 * A)
            f = QuadForm(A, B, C)
            if f.is_reduced():
                forms.append(f)
    return forms


@lru_cache(maxsize=None)
def hurwitz(N: int) -> HurwitzValue:
    """12*H(N) for N >= 0."""
    if N < 0:
        raise ValueError("Hurwitz class number needs N >= 0")
    if N == 0:
        return HurwitzValue(0, -1, 0)
    forms = reduced_forms(N)
    return HurwitzValue(N, sum(_form_weight12(f) for f in forms), len(forms))


def hurwitz_bruteforce(N: int) -> int:
    """Independent oracle for 12*H(N), N > 0; see :func:`hurwitz_table_bruteforce`."""
    if N <= 0:
        raise ValueError("oracle defined for N > 0")
    return int(hurwitz_table_bruteforce(N)[N])


def hurwitz_table_bruteforce(n_max: int) -> list[int]:
    """12*H(N) for 0 < N <= n_max by a different route than :func:`hurwitz`.

    Sweeps every triple |B| <= A <= C with 4AC - B^2 <= n_max (no solving for
    C), keeps the primitive reduced ones with their unit weights, then sums
    H(N) = sum over d^2 | N of the primitive weighted count at N / d^2.
    Entry 0 of the result is unused.
    """
    prim = [0] * (n_max + 1)
    A = 1
    while 3 * A * A <= n_max:
        for B in range(-A, A + 1):
            C = A
            while 4 * A * C - B * B <= n_max:
                M = 4 * A * C - B * B
                if math.gcd(math.gcd(A, B), C) == 1 and not ((abs(B) == A or A == C) and B < 0):
                    prim[M] += 6 if M == 4 else 4 if M == 3 else 12
                C += 1
        A += 1
    table = [0] * (n_max + 1)
    for M in range(1, n_max + 1):
        if prim[M]:
            d = 1
            while M * d * d <= n_max:
                table[M * d * d] += prim[M]
                d += 1
    return table
