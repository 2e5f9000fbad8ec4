"""Sato-Tate counts, the Beurling-Selberg sandwich and discrepancy tables.

Angles are theta_t = arccos(t / 2 sqrt q) in [0, pi].  Everything that
depends on the curves goes through a :class:`~satolab.curves.TraceHistogram`,
so one enumeration per field serves every interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from . import beurling
from .curves import TraceHistogram, _char_sum, _singular_mask_for_a, angle_of_trace, trace_histogram
from .ff import FieldContext, field_for_q
from .traceformula import curve_cheb_integers


@dataclass(frozen=True)
class AngleInterval:
    """[alpha, beta] inside [0, pi]; ``closed_right=False`` gives [alpha, beta)."""

    alpha: float
    beta: float
    closed_right: bool = True

    def __post_init__(self):
        if not (0.0 <= self.alpha < self.beta <= math.pi):
            raise ValueError(f"need 0 <= alpha < beta <= pi, got [{self.alpha}, {self.beta}]")

    def contains(self, theta):
        theta = np.asarray(theta, dtype=float)
        upper = theta <= self.beta if self.closed_right else theta < self.beta
        return (theta >= self.alpha) & upper

    def complement(self) -> list["_Piece"]:
        """[0, pi] minus this closed interval, as the two pieces [0, alpha) and (beta, pi]."""
        return [_Piece(0.0, self.alpha, True, False), _Piece(self.beta, math.pi, False, True)]


@dataclass(frozen=True)
class _Piece:
    alpha: float
    beta: float
    closed_left: bool
    closed_right: bool

    def contains(self, theta):
        theta = np.asarray(theta, dtype=float)
        lo = theta >= self.alpha if self.closed_left else theta > self.alpha
        hi = theta <= self.beta if self.closed_right else theta < self.beta
        return lo & hi


def mu_st(I: AngleInterval) -> float:
    """Sato-Tate measure (2/pi) int_I sin^2."""
    a, b = I.alpha, I.beta
    return ((b - a) - (math.sin(2 * b) - math.sin(2 * a)) / 2) / math.pi


def mu_st_quad(I: AngleInterval) -> float:
    """Same measure by adaptive quadrature (used as a check)."""
    val, _ = integrate.quad(lambda th: math.sin(th) ** 2, I.alpha, I.beta, epsabs=1e-14, epsrel=1e-13, limit=200)
    return 2 * val / math.pi


@lru_cache(maxsize=64)
def histogram_for(q: int, mode: str | None = None) -> TraceHistogram:
    return trace_histogram(field_for_q(q), mode=mode)


def _hist(ctx: FieldContext, mode: str | None, hist: TraceHistogram | None) -> TraceHistogram:
    if hist is not None:
        return hist
    return histogram_for(ctx.q, mode)


def count_in(hist: TraceHistogram, I) -> int:
    """Number of nonsingular pairs whose angle lies in I (anything with ``contains``)."""
    mask = I.contains(angle_of_trace(hist.traces, hist.q))
    return int(hist.array[mask].sum())


def count_NI(ctx: FieldContext, I: AngleInterval, mode: str | None = None,
             hist: TraceHistogram | None = None) -> int:
    """N_I(q): nonsingular (a, b) with theta_ab in I (closed unless I says otherwise)."""
    return count_in(_hist(ctx, mode, hist), I)


# ---------------------------------------------------------------------------
# Beurling-Selberg sandwich
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Sandwich:
    q: int
    M: int
    lower: float
    upper: float
    main_upper: float  # q^2 (2 S+(0) - P+(2)), the leading-order main term
    main_lower: float

    @property
    def width(self) -> float:
        return self.upper - self.lower


def chebyshev_curve_sums(hist: TraceHistogram, m_max: int) -> np.ndarray:
    """C_m = sum over nonsingular (a, b) of U_m(cos theta_ab), m = 0 .. m_max."""
    exact = curve_cheb_integers(hist, m_max)
    sq = math.sqrt(hist.q)
    return np.array([0.0 if x == 0 else x / sq**m for m, x in enumerate(exact)])


def _side(S: beurling.SelbergPolynomial, C: np.ndarray, n_curves: int) -> float:
    # sum over curves of S(theta/2pi) + S(-theta/2pi) = 2 S(0) n + sum_m P(m) (C_m - C_{m-2})
    total = 2 * S.mean() * n_curves
    for m in range(1, S.M + 1):
        prev = C[m - 2] if m >= 2 else 0.0
        total += beurling.paired_coeff(S, m) * (C[m] - prev)
    return total


def sandwich(ctx: FieldContext, I: AngleInterval, M: int | None = None,
             mode: str | None = None, hist: TraceHistogram | None = None) -> Sandwich:
    """Lower and upper bounds on N_I(q) from degree-M Beurling-Selberg polynomials.

    Uses J = I / 2pi and the angles +-theta/2pi, exactly as the Chebyshev
    rewriting of the majorant sum; M defaults to floor(q^(1/4)).
    """
    hist = _hist(ctx, mode, hist)
    q = hist.q
    if M is None:
        M = default_M(q)
    if M < 1:
        raise ValueError("M must be >= 1")
    J = beurling.IntervalJ(I.alpha / (2 * math.pi), I.beta / (2 * math.pi))
    Sp = beurling.selberg(J, M, "majorant")
    Sm = beurling.selberg(J, M, "minorant")
    C = chebyshev_curve_sums(hist, M)
    n = hist.total()
    upper = _side(Sp, C, n)
    lower = _side(Sm, C, n)
    # -theta/2pi also lands in J when theta = 0 and alpha = 0, or theta = pi and beta = pi
    extra = 0
    if hist.bound * hist.bound == 4 * q:
        if I.alpha == 0.0:
            extra += hist[hist.bound]
        if I.beta == math.pi:
            extra += hist[-hist.bound]
    lower -= extra

    def main(S):
        return q * q * (2 * S.mean() - (beurling.paired_coeff(S, 2) if M >= 2 else 0.0))

    return Sandwich(q, M, lower, upper, main(Sp), main(Sm))


def sandwich_direct(hist: TraceHistogram, I: AngleInterval, M: int, sign: str) -> float:
    """sum over curves of S(theta/2pi) + S(-theta/2pi), evaluated pointwise (test oracle)."""
    J = beurling.IntervalJ(I.alpha / (2 * math.pi), I.beta / (2 * math.pi))
    S = beurling.selberg(J, M, sign)
    x = angle_of_trace(hist.traces, hist.q) / (2 * math.pi)
    vals = S.real(x) + S.real(-x)
    return float(np.dot(hist.array, vals))


def default_M(q: int) -> int:
    return max(1, int(math.floor(q**0.25 + 1e-12)))


# ---------------------------------------------------------------------------
# discrepancy
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscrepancyRow:
    q: int
    alpha: float
    beta: float
    N_I: int
    main: float
    diff: float
    normalized: float

    FIELDS = ("q", "alpha", "beta", "N_I", "main", "diff", "normalized")

    def as_dict(self):
        return {f: getattr(self, f) for f in self.FIELDS}


def uniform_grid(cells: int) -> list[AngleInterval]:
    """[0, pi] cut into equal half-open cells; the last cell is closed."""
    edges = np.linspace(0.0, math.pi, cells + 1)
    edges[-1] = math.pi
    return [
        AngleInterval(float(edges[i]), float(edges[i + 1]), closed_right=(i == cells - 1))
        for i in range(cells)
    ]


def discrepancy_row(hist: TraceHistogram, I: AngleInterval) -> DiscrepancyRow:
    q = hist.q
    n = count_in(hist, I)
    main = mu_st(I) * q * q
    diff = n - main
    return DiscrepancyRow(q, I.alpha, I.beta, n, main, diff, diff / q**1.75)


def discrepancy_table(q_list, interval_grid, mode: str | None = None) -> list[DiscrepancyRow]:
    """One row per (q, I), sorted by q, then alpha, then beta."""
    rows = []
    for q in sorted(set(q_list)):
        hist = histogram_for(q, mode)
        for I in interval_grid:
            rows.append(discrepancy_row(hist, I))
    rows.sort(key=lambda r: (r.q, r.alpha, r.beta))
    return rows


def fit_exponent(qs, diffs) -> float:
    """Least-squares slope of log|diff| against log q; zero diffs are skipped."""
    pts = [(q, d) for q, d in zip(qs, diffs) if d != 0]
    if len(pts) < 3:
        raise ValueError("exponent fit needs at least 3 nonzero points")
    x = np.log([q for q, _ in pts])
    y = np.log([abs(d) for _, d in pts])
    return float(np.polyfit(x, y, 1)[0])


def exponent_fit(q_list, I: AngleInterval, mode: str | None = None) -> float:
    """Empirical growth exponent of |N_I - mu_ST(I) q^2| over q_list."""
    if len(set(q_list)) < 3:
        raise ValueError("exponent fit needs at least 3 values of q")
    rows = discrepancy_table(q_list, [I], mode)
    return fit_exponent([r.q for r in rows], [r.diff for r in rows])


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------


def singular_char_sums(ctx: FieldContext) -> list[int]:
    """sum_x chi(x^3 + ax + b) for each of the q singular pairs (a, b)."""
    out = []
    for a in range(ctx.q):
        for b in np.nonzero(_singular_mask_for_a(ctx, a))[0]:
            out.append(_char_sum(ctx, a, int(b)))
    return out


def moment_sum(ctx: FieldContext, R: int, mode: str | None = None,
               hist: TraceHistogram | None = None) -> tuple[int, float]:
    """sum over all (a, b) of (sum_x chi(x^3 + ax + b))^(2R), and its ratio to C(2R,R) q^(R+2) / (R+1)."""
    if R < 0:
        raise ValueError("R must be >= 0")
    hist = _hist(ctx, mode, hist)
    value = hist.moment(2 * R) + sum(s ** (2 * R) for s in singular_char_sums(ctx))
    predicted = math.comb(2 * R, R) * ctx.q ** (R + 2) / (R + 1)
    return value, value / predicted
