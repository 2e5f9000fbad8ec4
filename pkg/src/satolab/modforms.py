"""Exact traces of Hecke operators on level-1 cusp forms from q-expansions.

This module is the independent check on the Eichler-Selberg closed form: it
never touches class numbers.  A basis of S_k is built from Delta^i E_{k-12i}
(E_{k'} a monomial E_4^a E_6^b), echelonised so that a_j(f_i) = delta_ij, and
Tr T_n = sum_i a_i(T_n f_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class PrecisionError(ValueError):
    pass


@dataclass(frozen=True)
class PowerSeriesZ:
    """Integer power series truncated to ``prec`` terms."""

    coeffs: tuple[int, ...]

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __add__(self, other):
        n = min(self.prec, other.prec)
        return PowerSeriesZ(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __sub__(self, other):
        n = min(self.prec, other.prec)
        return PowerSeriesZ(tuple(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def scale(self, c: int):
        return PowerSeriesZ(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return PowerSeriesZ(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = PowerSeriesZ((1,) + (0,) * (self.prec - 1))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, c: int):
        if any(a % c for a in self.coeffs):
            raise ArithmeticError(f"series not divisible by {c}")
        return PowerSeriesZ(tuple(a // c for a in self.coeffs))


def _sigma(n: int, k: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def eisenstein_e4(prec: int) -> PowerSeriesZ:
    return PowerSeriesZ((1,) + tuple(240 * _sigma(n, 3) for n in range(1, prec)))


def eisenstein_e6(prec: int) -> PowerSeriesZ:
    return PowerSeriesZ((1,) + tuple(-504 * _sigma(n, 5) for n in range(1, prec)))


def delta_series(prec: int) -> PowerSeriesZ:
    """(E_4^3 - E_6^2) / 1728; raises if the division leaves a remainder."""
    e4, e6 = eisenstein_e4(prec), eisenstein_e6(prec)
    return (e4**3 - e6**2).exact_div(1728)


def dim_sk(k: int) -> int:
    """Dimension of weight-k level-1 cusp forms, k even >= 4."""
    if k % 2 or k < 4:
        raise ValueError(f"weight must be even and >= 4, got {k}")
    return k // 12 - 1 if k % 12 == 2 else k // 12


def _eisenstein_monomial(w: int, prec: int) -> PowerSeriesZ:
    """E_4^a E_6^b with 4a + 6b = w (w = 0 or w >= 4 even)."""
    for b in range(w // 6 + 1):
        rest = w - 6 * b
        if rest % 4 == 0:
            return eisenstein_e4(prec) ** (rest // 4) * eisenstein_e6(prec) ** b
    raise ValueError(f"no monomial of weight {w}")


@dataclass(frozen=True)
class CuspBasis:
    k: int
    prec: int
    basis: tuple[PowerSeriesZ, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def miller_basis(k: int, prec: int) -> CuspBasis:
    """Echelon basis of S_k with integer coefficients known to q^(prec-1)."""
    d = dim_sk(k)
    if prec < d + 1:
        raise PrecisionError(f"precision {prec} too small for dim {d}")
    if d == 0:
        return CuspBasis(k, prec, ())
    delta = delta_series(prec)
    rows = [
        [Fraction(c) for c in (delta**i * _eisenstein_monomial(k - 12 * i, prec)).coeffs]
        for i in range(1, d + 1)
    ]
    # row i-1 starts at q^i; clear the entries above and below each pivot
    for i in range(d):
        piv = rows[i][i + 1]
        rows[i] = [c / piv for c in rows[i]]
        for j in range(d):
            if j != i and rows[j][i + 1]:
                f = rows[j][i + 1]
                rows[j] = [a - f * b for a, b in zip(rows[j], rows[i])]
    basis = []
    for row in rows:
        if any(c.denominator != 1 for c in row):
            raise ArithmeticError(f"weight {k} echelon basis is not integral")
        basis.append(PowerSeriesZ(tuple(int(c) for c in row)))
    return CuspBasis(k, prec, tuple(basis))


def hecke_coefficient(f: PowerSeriesZ, k: int, n: int, m: int) -> int:
    """a_m(T_n f) = sum over d | gcd(m, n) of d^(k-1) a_{mn/d^2}(f)."""
    if m * n >= f.prec:
        raise PrecisionError(f"need coefficient {m * n}, series known to {f.prec - 1}")
    total = 0
    for d in range(1, min(m, n) + 1):
        if m % d == 0 and n % d == 0:
            total += d ** (k - 1) * f[m * n // (d * d)]
    return total


def trace_tk_mf(k: int, n: int) -> int:
    """Tr T_n on S_k via the echelon basis."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = dim_sk(k)
    B = miller_basis(k, n * d + d + 1)
    return sum(hecke_coefficient(f, k, n, i + 1) for i, f in enumerate(B.basis))
