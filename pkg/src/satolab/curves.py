"""Weierstrass curves y^2 = x^3 + ax + b over F_q: point counts, traces, orbits.

Two routes build the trace histogram.  ``brute`` sums the quadratic character
over every (a, b, x); ``orbit`` counts one representative per isomorphism class
(a, b) ~ (u^4 a, u^6 b) and weights it by the orbit size.  Brute is the ground
truth and the orbit route is only trusted because tests compare the two.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classnumber import hurwitz
from .ff import FieldContext, FieldElement

ORBIT_THRESHOLD = 200


class SingularCurveError(ValueError):
    pass


def hasse_bound(q: int) -> int:
    """floor(2 sqrt q), exactly."""
    return math.isqrt(4 * q)


@dataclass(frozen=True)
class CurveParams:
    a: FieldElement
    b: FieldElement
    discriminant_nonzero: bool
    trace: int | None
    q: int

    @property
    def angle(self) -> float:
        """theta in [0, pi] with 2 sqrt(q) cos(theta) = trace."""
        if self.trace is None:
            raise SingularCurveError("singular curve has no Frobenius angle")
        return angle_of_trace(self.trace, self.q)


def angle_of_trace(t, q):
    c = np.clip(np.asarray(t, dtype=float) / (2.0 * math.sqrt(q)), -1.0, 1.0)
    return np.arccos(c) if c.ndim else float(np.arccos(c))


def discriminant_nonzero(ctx: FieldContext, a, b) -> bool:
    a, b = ctx.element(a), ctx.element(b)
    d = ctx.add(ctx.mul(4, ctx.pow(a, 3)), ctx.mul(27, ctx.mul(b, b)))
    return d != ctx.zero


def _require_nonsingular(ctx, a, b):
    if not discriminant_nonzero(ctx, a, b):
        raise SingularCurveError(f"4a^3 + 27b^2 = 0 for a={a}, b={b}")


def _char_sum(ctx: FieldContext, a_idx: int, b_idx: int) -> int:
    v = ctx.add_idx(ctx.cube_plus_linear(a_idx), b_idx)
    return int(ctx.chi[v].sum(dtype=np.int64))


def point_count(ctx: FieldContext, a, b) -> tuple[int, int]:
    """Return (#E(F_q) including infinity, trace)."""
    a, b = ctx.element(a), ctx.element(b)
    _require_nonsingular(ctx, a, b)
    s = _char_sum(ctx, ctx.index(a), ctx.index(b))
    count = ctx.q + 1 + s
    return count, ctx.q + 1 - count


def curve(ctx: FieldContext, a, b) -> CurveParams:
    a, b = ctx.element(a), ctx.element(b)
    ok = discriminant_nonzero(ctx, a, b)
    t = point_count(ctx, a, b)[1] if ok else None
    return CurveParams(a, b, ok, t, ctx.q)


# ---------------------------------------------------------------------------
# histograms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TraceHistogram:
    """Exact number of nonsingular (a, b) per trace t, |t| <= floor(2 sqrt q)."""

    q: int
    array: np.ndarray  # array[t + bound] = count

    @property
    def bound(self) -> int:
        return hasse_bound(self.q)

    @property
    def traces(self) -> np.ndarray:
        return np.arange(-self.bound, self.bound + 1)

    @property
    def counts(self) -> dict[int, int]:
        return {int(t): int(c) for t, c in zip(self.traces, self.array)}

    def __getitem__(self, t: int) -> int:
        if abs(t) > self.bound:
            return 0
        return int(self.array[t + self.bound])

    def total(self) -> int:
        return int(self.array.sum())

    def moment(self, e: int) -> int:
        """Exact sum over nonsingular pairs of trace**e."""
        return sum(int(c) * int(t) ** e for t, c in zip(self.traces, self.array))

    def __eq__(self, other):
        return isinstance(other, TraceHistogram) and self.q == other.q and np.array_equal(
            self.array, other.array
        )

    def __hash__(self):
        return hash((self.q, self.array.tobytes()))

    def rows(self):
        return [{"q": self.q, "t": int(t), "count": int(c)} for t, c in zip(self.traces, self.array)]


def _singular_mask_for_a(ctx: FieldContext, a_idx: int) -> np.ndarray:
    """Boolean mask over b of pairs (a, b) with 4a^3 + 27b^2 = 0."""
    b = np.arange(ctx.q, dtype=np.int64)
    a3 = ctx.mul_idx(ctx.mul_idx(a_idx, a_idx), a_idx)
    four_a3 = ctx.mul_idx(4 % ctx.p, a3)
    disc = ctx.add_idx(four_a3, ctx.mul_idx(27 % ctx.p, ctx.mul_idx(b, b)))
    return disc == 0


def _brute_shard(ctx: FieldContext, a_values, bound: int) -> np.ndarray:
    hist = np.zeros(2 * bound + 1, dtype=np.int64)
    b = np.arange(ctx.q, dtype=np.int64)[:, None]
    for a in a_values:
        v = ctx.cube_plus_linear(int(a))[None, :]
        sums = ctx.chi[ctx.add_idx(v, b)].sum(axis=1, dtype=np.int64)
        traces = -sums[~_singular_mask_for_a(ctx, int(a))]
        hist += np.bincount(traces + bound, minlength=2 * bound + 1)
    return hist


def _brute_histogram(ctx: FieldContext, threads: int = 1) -> np.ndarray:
    bound = hasse_bound(ctx.q)
    shards = np.array_split(np.arange(ctx.q), max(1, threads))
    if threads <= 1:
        return _brute_shard(ctx, shards[0], bound)
    with ThreadPoolExecutor(threads) as pool:
        parts = list(pool.map(lambda s: _brute_shard(ctx, s, bound), shards))
    return np.sum(parts, axis=0)


@dataclass(frozen=True)
class OrbitRep:
    a: int  # element index
    b: int
    size: int


def orbit_representatives(ctx: FieldContext) -> list[OrbitRep]:
    """One (a, b) per class under (a, b) -> (u^4 a, u^6 b), with orbit sizes.

    Works in discrete-log coordinates: with L = q - 1 and u = g^k, a = g^s maps
    to g^(s + 4k) and b = g^s' to g^(s' + 6k).  Includes singular classes.
    """
    L = ctx.q - 1
    exp = ctx.exp_table
    reps = [OrbitRep(0, 0, 1)]
    g4, g6 = math.gcd(4, L), math.gcd(6, L)
    reps += [OrbitRep(int(exp[s]), 0, L // g4) for s in range(g4)]
    reps += [OrbitRep(0, int(exp[s]), L // g6) for s in range(g6)]
    # both nonzero: log a reduces mod g4; the stabiliser k in (L/g4)Z then moves log b by 6k
    d = math.gcd(6 * (L // g4), L)
    reps += [OrbitRep(int(exp[s]), int(exp[s2]), L // 2) for s in range(g4) for s2 in range(d)]
    return reps


def _orbit_histogram(ctx: FieldContext, threads: int = 1) -> np.ndarray:
    bound = hasse_bound(ctx.q)
    hist = np.zeros(2 * bound + 1, dtype=np.int64)
    reps = [rep for rep in orbit_representatives(ctx) if discriminant_nonzero(
        ctx, ctx.from_index(rep.a), ctx.from_index(rep.b))]

    def work(chunk):
        out = np.zeros_like(hist)
        for rep in chunk:
            t = -_char_sum(ctx, rep.a, rep.b)
            out[t + bound] += rep.size
        return out

    chunks = [reps[i::max(1, threads)] for i in range(max(1, threads))]
    if threads <= 1:
        return work(reps)
    with ThreadPoolExecutor(threads) as pool:
        return np.sum(list(pool.map(work, chunks)), axis=0)


def trace_histogram(ctx: FieldContext, mode: str | None = None, threads: int = 1) -> TraceHistogram:
    """Histogram of traces over all nonsingular (a, b) in F_q^2.

    mode is ``"brute"`` or ``"orbit"``; the default picks brute for q <= 200.
    """
    if mode is None:
        mode = "brute" if ctx.q <= ORBIT_THRESHOLD else "orbit"
    if mode == "brute":
        arr = _brute_histogram(ctx, threads)
    elif mode == "orbit":
        arr = _orbit_histogram(ctx, threads)
    else:
        raise ValueError(f"unknown histogram mode {mode!r}")
    return TraceHistogram(ctx.q, arr)


# ---------------------------------------------------------------------------
# automorphisms and orbits (scalar, for inspection and tests)
# ---------------------------------------------------------------------------


def aut_size(ctx: FieldContext, a, b) -> int:
    """#{u in F_q^*: u^4 a = a and u^6 b = b}."""
    a, b = ctx.element(a), ctx.element(b)
    _require_nonsingular(ctx, a, b)
    n = 0
    for u in ctx.elements()[1:]:
        if ctx.mul(ctx.pow(u, 4), a) == a and ctx.mul(ctx.pow(u, 6), b) == b:
            n += 1
    return n


def orbit(ctx: FieldContext, a, b) -> set[CurveParams]:
    """The isomorphism class {(u^4 a, u^6 b)} of a nonsingular curve."""
    a, b = ctx.element(a), ctx.element(b)
    _require_nonsingular(ctx, a, b)
    t = point_count(ctx, a, b)[1]
    members = set()
    for u in ctx.elements()[1:]:
        a2 = ctx.mul(ctx.pow(u, 4), a)
        b2 = ctx.mul(ctx.pow(u, 6), b)
        members.add(CurveParams(a2, b2, True, t, ctx.q))
    return members


# ---------------------------------------------------------------------------
# Deuring's count
# ---------------------------------------------------------------------------
#
# With Hurwitz weights 1, 1/2, 1/3 (that is 2/#Aut), the classes of trace t
# weighted by 1/#Aut sum to H(4q - t^2)/2, so the number of pairs (a, b) is
# (q - 1) H(4q - t^2) / 2.  The "literal" convention drops the 1/2; brute force
# refutes it (sum_t H(4p - t^2) = 2p would give 2(p^2 - p) curves).

CONVENTIONS = {"aut": 24, "literal": 12}


@dataclass(frozen=True)
class DeuringRow:
    q: int
    t: int
    count: int
    twelve_qH: int  # 12 (q - 1) H(4q - t^2)
    asserted: bool  # gcd(t, p) = 1

    def expected(self, convention: str = "aut") -> Fraction:
        return Fraction(self.twelve_qH, CONVENTIONS[convention])

    def matches(self, convention: str = "aut") -> bool:
        return CONVENTIONS[convention] * self.count == self.twelve_qH

    def status(self, convention: str = "aut") -> str:
        if not self.asserted:
            return "INFO"
        return "PASS" if self.matches(convention) else "FAIL"


@dataclass(frozen=True)
class DeuringReport:
    q: int
    rows: tuple[DeuringRow, ...]
    convention: str = "aut"

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failures(self):
        return [row for row in self.rows if row.status(self.convention) == "FAIL"]

    @property
    def informational(self):
        return [row for row in self.rows if not row.asserted]

    def table(self):
        return [
            {
                "q": self.q,
                "t": row.t,
                "count": row.count,
                "expected": str(row.expected(self.convention)),
                "status": row.status(self.convention),
            }
            for row in self.rows
        ]


def verify_deuring(
    ctx: FieldContext, hist: TraceHistogram | None = None, convention: str = "aut"
) -> DeuringReport:
    """Compare counts[t] with Deuring's class count for every t^2 < 4q.

    convention "aut" expects (q-1) H(4q - t^2) / 2, "literal" expects
    (q-1) H(4q - t^2).  Only traces prime to p are asserted; rows with p | t
    carry both numbers but status INFO.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if hist is None:
        hist = trace_histogram(ctx, mode="brute")
    q = ctx.q
    rows = []
    for t in range(-hist.bound, hist.bound + 1):
        if t * t >= 4 * q:
            continue
        twelve = (q - 1) * hurwitz(4 * q - t * t).twelve_H
        rows.append(DeuringRow(q, t, hist[t], twelve, t % ctx.p != 0))
    return DeuringReport(q, tuple(rows), convention)
