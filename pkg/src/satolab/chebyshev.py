"""Chebyshev polynomials of the second kind and the integer sequence behind them.

For rho, rho_bar the roots of y^2 - t y + q, the numbers
w_j = (rho^j - rho_bar^j) / (rho - rho_bar) are integers with
w_1 = 1, w_2 = t, w_{j+1} = t w_j - q w_{j-1}, and
w_{n+1}(t, q) = q^(n/2) U_n(t / (2 sqrt q)).
"""

from __future__ import annotations

import numpy as np


def u_poly(n: int, x):
    """U_n(x) by the three-term recurrence; accepts scalars or arrays."""
    if n < 0:
        raise ValueError("U_n needs n >= 0")
    x = np.asarray(x, dtype=float)
    prev, cur = np.zeros_like(x), np.ones_like(x)
    for _ in range(n):
        prev, cur = cur, 2 * x * cur - prev
    return cur if cur.ndim else float(cur)


def u_poly_table(n_max: int, x) -> np.ndarray:
    """Rows U_0(x) .. U_{n_max}(x); row -1 is never needed so none is stored."""
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 2 * x
    for n in range(2, n_max + 1):
        out[n] = 2 * x * out[n - 1] - out[n - 2]
    return out


def lucas_w(j: int, t: int, q: int) -> int:
    """Exact w_j(t, q) for j >= 1 (w_0 = 0 is also accepted)."""
    if j < 0:
        raise ValueError("index must be nonnegative")
    prev, cur = 0, 1
    if j == 0:
        return 0
    for _ in range(j - 1):
        prev, cur = cur, t * cur - q * prev
    return cur


def lucas_w_table(j_max: int, t: int, q: int) -> list[int]:
    """[w_0, w_1, ..., w_{j_max}] for one (t, q)."""
    out = [0, 1]
    for _ in range(j_max - 1):
        out.append(t * out[-1] - q * out[-2])
    return out[: j_max + 1]


def cos_combination(n: int, theta):
    """U_n(cos theta) - U_{n-2}(cos theta), which equals 2 cos(n theta)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    c = np.cos(theta)
    return u_poly(n, c) - u_poly(n - 2, c)
