"""Beurling-Selberg majorants and minorants for the indicator of J = [alpha, beta] in [0, 1].

Construction: for x away from the endpoints,

    chi_J(x) = (beta - alpha) + psi(alpha - x) + psi(x - beta),   psi(x) = x - floor(x) - 1/2.

Vaaler's degree-M polynomial V_M satisfies |psi - V_M| <= Delta_{M+1} / (2M + 2) with
Delta the Fejer kernel, so B = V_M + Delta_{M+1}/(2M+2) is a majorant of psi and
-B(-x) a minorant.  Substituting gives

    S+(x) = (beta - alpha) + B(alpha - x) + B(x - beta)
    S-(x) = (beta - alpha) - B(x - alpha) - B(beta - x)

All coefficients are returned as Fourier coefficients with e(x) = exp(2 pi i x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class IntervalJ:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (0.0 <= self.alpha < self.beta <= 1.0):
            raise ValueError(f"need 0 <= alpha < beta <= 1, got [{self.alpha}, {self.beta}]")

    @property
    def length(self) -> float:
        return self.beta - self.alpha

    def indicator(self, x):
        """chi_J on R (periodic with period 1), closed at both ends."""
        x = np.asarray(x, dtype=float) % 1.0
        inside = (x >= self.alpha) & (x <= self.beta)
        if self.beta == 1.0:
            inside |= x == 0.0
        return inside.astype(float)


def e(x):
    return np.exp(2j * np.pi * np.asarray(x, dtype=float))


def chi_hat(J: IntervalJ, m: int) -> complex:
    """Fourier coefficient of chi_J at m."""
    if m == 0:
        return complex(J.length)
    return complex((e(-m * J.alpha) - e(-m * J.beta)) / (2j * math.pi * m))


def _vaaler_weight(u):
    return math.pi * u * (1 - u) / math.tan(math.pi * u) + u


def sawtooth_majorant_coeffs(M: int) -> np.ndarray:
    """Fourier coefficients b(n), |n| <= M, of B = V_M + Delta_{M+1}/(2M+2); index n + M."""
    b = np.zeros(2 * M + 1, dtype=complex)
    for n in range(1, M + 1):
        # V_M(x) = -sum J(n/(M+1)) sin(2 pi n x) / (pi n)
        c = -_vaaler_weight(n / (M + 1)) / (math.pi * n)
        fejer = (1 - n / (M + 1)) / (2 * M + 2)
        b[M + n] = c / 2j + fejer
        b[M - n] = -c / 2j + fejer
    b[M] = 1 / (2 * M + 2)
    return b


@dataclass(frozen=True)
class SelbergPolynomial:
    J: IntervalJ
    M: int
    sign: str  # "majorant" or "minorant"
    coeffs: np.ndarray  # coeffs[m + M] = S_hat(m)

    def __getitem__(self, m: int) -> complex:
        if abs(m) > self.M:
            return 0j
        return complex(self.coeffs[m + self.M])

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.M, self.M + 1)

    def __call__(self, x):
        """S(x) = sum S_hat(m) e(m x); complex dtype, imaginary part is roundoff."""
        x = np.asarray(x, dtype=float)
        return np.tensordot(e(np.multiply.outer(x, self.frequencies)), self.coeffs, axes=([-1], [0]))

    def real(self, x):
        return np.real(self(x))

    def mean(self) -> float:
        return float(self.coeffs[self.M].real)


def selberg(J: IntervalJ, M: int, sign: str = "majorant") -> SelbergPolynomial:
    """Degree-M one-sided approximation to chi_J."""
    if M < 1:
        raise ValueError("degree M must be >= 1")
    if sign not in ("majorant", "minorant"):
        raise ValueError(f"sign must be 'majorant' or 'minorant', not {sign!r}")
    b = sawtooth_majorant_coeffs(M)
    m = np.arange(-M, M + 1)
    b_pos, b_neg = b, b[::-1]  # b(m), b(-m)
    if sign == "majorant":
        coeffs = b_neg * e(-m * J.alpha) + b_pos * e(-m * J.beta)
        coeffs[M] = J.length + 1 / (M + 1)
    else:
        coeffs = -b_pos * e(-m * J.alpha) - b_neg * e(-m * J.beta)
        coeffs[M] = J.length - 1 / (M + 1)
    return SelbergPolynomial(J, M, sign, coeffs)


def paired_coeff(S: SelbergPolynomial, m: int) -> float:
    """S_hat(m) + S_hat(-m) for 0 < m <= M (a real number)."""
    if not 0 < m <= S.M:
        raise ValueError(f"m={m} outside 1..{S.M}")
    return float((S[m] + S[-m]).real)


def paired_main(J: IntervalJ, m: int) -> float:
    """(sin 2 pi m beta - sin 2 pi m alpha) / (m pi), the limit of paired_coeff."""
    return (math.sin(2 * math.pi * m * J.beta) - math.sin(2 * math.pi * m * J.alpha)) / (m * math.pi)
