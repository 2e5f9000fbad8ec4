"""Arithmetic in F_q = F_p[x]/(f) for primes p >= 5.

Elements are stored as coefficient tuples (low-to-high) in :class:`FieldElement`.
Every element also has an integer *index* ``sum(c_i * p**i)``; the index order is
the canonical element enumeration, and the vectorised helpers on
:class:`FieldContext` (``add_idx``, ``mul_idx``, ``chi`` ...) work on numpy arrays
of indices.  Those helpers are what the point-counting loops use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import factorint, isprime

MAX_Q = 2**20


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def __repr__(self):
        return f"FieldElement{self.coeffs}"


# ---------------------------------------------------------------------------
# polynomials over F_p, coefficient lists low-to-high, no trailing zeros
# ---------------------------------------------------------------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _trim(a)
    m = _trim(m)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _trim(a)
    return a


def _monic_polys(deg, p):
    """All monic polynomials of the given degree, lexicographic in (c_{d-1}, ..., c_0)."""
    for tail in itertools.product(range(p), repeat=deg):
        yield list(reversed(tail)) + [1]


def is_irreducible(f, p):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    f = _trim(f)
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_mod(f, g, p):
                return False
    return True


def smallest_irreducible(p, r):
    """Lexicographically smallest monic irreducible of degree r over F_p."""
    for f in _monic_polys(r, p):
        if is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {r} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldContext:
    """The field F_{p^r}; construct with :func:`make_field`."""

    p: int
    r: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.r)

    def __repr__(self):
        return f"FieldContext(p={self.p}, r={self.r}, modulus={self.modulus})"

    # -- scalar surface ----------------------------------------------------

    def element(self, value) -> FieldElement:
        """Coerce an int (reduced mod p, constant term), an index-free tuple, or an element."""
        if isinstance(value, FieldElement):
            if len(value.coeffs) != self.r or any(not 0 <= c < self.p for c in value.coeffs):
                raise FieldError(f"{value!r} is not an element of F_{self.q}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement((int(value) % self.p,) + (0,) * (self.r - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.r:
            raise FieldError(f"expected {self.r} coefficients, got {len(coeffs)}")
        return FieldElement(coeffs)

    def from_index(self, i: int) -> FieldElement:
        if not 0 <= i < self.q:
            raise FieldError(f"index {i} out of range for F_{self.q}")
        coeffs = []
        for _ in range(self.r):
            i, c = divmod(i, self.p)
            coeffs.append(c)
        return FieldElement(tuple(coeffs))

    def index(self, x: FieldElement) -> int:
        return sum(c * self.p**i for i, c in enumerate(x.coeffs))

    def elements(self):
        """All q elements in canonical enumeration order."""
        return [self.from_index(i) for i in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement((0,) * self.r)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    def add(self, x, y) -> FieldElement:
        x, y = self.element(x), self.element(y)
        return FieldElement(tuple((a + b) % self.p for a, b in zip(x.coeffs, y.coeffs)))

    def neg(self, x) -> FieldElement:
        x = self.element(x)
        return FieldElement(tuple(-a % self.p for a in x.coeffs))

    def sub(self, x, y) -> FieldElement:
        return self.add(x, self.neg(y))

    def mul(self, x, y) -> FieldElement:
        x, y = self.element(x), self.element(y)
        prod = [0] * (2 * self.r - 1)
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    prod[i + j] += a * b
        red = _poly_mod([c % self.p for c in prod], self.modulus, self.p)
        return FieldElement(tuple(red) + (0,) * (self.r - len(red)))

    def pow(self, x, e: int) -> FieldElement:
        x = self.element(x)
        if e < 0:
            return self.pow(self.inv(x), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def inv(self, x) -> FieldElement:
        x = self.element(x)
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(x, self.q - 2)

    def quad_char(self, z) -> int:
        """Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise."""
        z = self.element(z)
        if z == self.zero:
            return 0
        s = self.pow(z, (self.q - 1) // 2)
        if s == self.one:
            return 1
        assert s == self.neg(self.one)
        return -1

    # -- vectorised index arithmetic --------------------------------------

    @cached_property
    def _digits(self) -> np.ndarray:
        """(q, r) array of coefficients of every element index."""
        idx = np.arange(self.q, dtype=np.int64)
        return np.stack([(idx // self.p**i) % self.p for i in range(self.r)], axis=1)

    @cached_property
    def _place(self) -> np.ndarray:
        return self.p ** np.arange(self.r, dtype=np.int64)

    def add_idx(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.r == 1:
            return (x + y) % self.p
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        for i in range(self.r):
            pw = int(self._place[i])
            out += ((x // pw + y // pw) % self.p) * pw
        return out

    def neg_idx(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.r == 1:
            return (-x) % self.p
        return (((-self._digits[x]) % self.p) * self._place).sum(axis=-1)

    @cached_property
    def generator(self) -> int:
        """Index of the smallest-index primitive element."""
        order = self.q - 1
        primes = list(factorint(order))
        for g in range(2 if self.q > 2 else 1, self.q):
            x = self.from_index(g)
            if all(self.pow(x, order // ell) != self.one for ell in primes):
                return g
        raise FieldError("no primitive element found")  # unreachable for a field

    @cached_property
    def exp_table(self) -> np.ndarray:
        """exp_table[k] = index of g**k for k in [0, q-1)."""
        order = self.q - 1
        table = np.empty(order, dtype=np.int64)
        if self.r == 1:
            g = self.generator
            v = 1
            for k in range(order):
                table[k] = v
                v = v * g % self.p
            return table
        g = self.from_index(self.generator)
        v = self.one
        for k in range(order):
            table[k] = self.index(v)
            v = self.mul(v, g)
        return table

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[x] = k with g**k = x; entry 0 is -1 (zero has no logarithm)."""
        table = np.full(self.q, -1, dtype=np.int64)
        table[self.exp_table] = np.arange(self.q - 1, dtype=np.int64)
        return table

    def mul_idx(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.r == 1:
            return (x * y) % self.p
        lx, ly = self.log_table[x], self.log_table[y]
        out = self.exp_table[(lx + ly) % (self.q - 1)]
        return np.where((x == 0) | (y == 0), 0, out)

    def pow_idx(self, x, e: int):
        x = np.asarray(x, dtype=np.int64)
        if self.r == 1:
            return np.array([pow(int(v), e, self.p) for v in x.ravel()], dtype=np.int64).reshape(x.shape)
        lx = self.log_table[x]
        out = self.exp_table[(lx * e) % (self.q - 1)]
        if e == 0:
            return np.ones_like(x)
        return np.where(x == 0, 0, out)

    @cached_property
    def chi(self) -> np.ndarray:
        """Quadratic character table indexed by element index (int8)."""
        if self.r == 1:
            table = -np.ones(self.q, dtype=np.int8)
            squares = (np.arange(1, self.q, dtype=np.int64) ** 2) % self.p
            table[squares] = 1
        else:
            table = np.where(self.log_table % 2 == 0, 1, -1).astype(np.int8)
        table[0] = 0
        return table

    def cube_plus_linear(self, a: int):
        """Index array of x**3 + a*x over all x (a given by index)."""
        x = np.arange(self.q, dtype=np.int64)
        if self.r == 1:
            return (x * x % self.p * x + a * x) % self.p
        x3 = self.mul_idx(self.mul_idx(x, x), x)
        return self.add_idx(x3, self.mul_idx(a, x))


def make_field(p: int, r: int = 1) -> FieldContext:
    """Build F_{p^r} with the lexicographically smallest irreducible modulus.

    Rejects composite p, p in {2, 3}, r < 1 and q above ``MAX_Q``.
    """
    if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
        raise FieldError(f"p={p} is not prime")
    if p in (2, 3):
        raise FieldError("characteristics 2 and 3 are not supported")
    if r < 1:
        raise FieldError("extension degree must be positive")
    if p**r > MAX_Q:
        raise FieldError(f"q={p}**{r} exceeds the supported maximum {MAX_Q}")
    modulus = (0, 1) if r == 1 else smallest_irreducible(int(p), int(r))
    return FieldContext(int(p), int(r), modulus)


def field_for_q(q: int) -> FieldContext:
    """Field of order q, for q a prime power with prime p >= 5."""
    fac = factorint(q)
    if len(fac) != 1:
        raise FieldError(f"q={q} is not a prime power")
    ((p, r),) = fac.items()
    return make_field(int(p), int(r))
