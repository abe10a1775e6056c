"""Pure-Python (numpy) implementations of the hot kernels.

These are the reference implementations; ``casimirshell._kernels`` swaps in
the compiled Cython twins when they are available.  The three entry points
dominate the free-energy runtime:

* ``halfk_psum``: closed-form Matsubara p-sum of a half-integer-order
  Bessel-K block via negative-order polylogarithms (no truncation at all);
* ``ksum_polylog``: the remaining angular n-sum over those blocks;
* ``thermal_log_sum``: the K_{1/2} block, i.e. the Bose log-sum;
* ``debye_remainder``: the analytic large-order form of the Bessel
  remainder B'(nu, x) used for nu >= 30.
"""

from __future__ import annotations

import math

import numpy as np

from ._kernel_tables import EULERIAN, HALF_K_COEFFS

_LOG_FLOOR = 745.0  # exp(-745) underflows; beyond this every term is zero


def _li_neg(q: int, w: float) -> float:
    """Li_{-q}(w) for integer q >= 0 and 0 <= w < 1."""
    one_m = 1.0 - w
    if q == 0:
        return w / one_m
    coeffs = EULERIAN[q]
    acc = 0.0
    for r in range(q):
        acc += coeffs[r] * w ** (q - r)
    return acc / one_m ** (q + 1)


def halfk_psum(z0: float, scale: float, m: int) -> float:
    """sum_{p>=1} (p*scale)^(m+1/2) K_{m+1/2}(p*z0), exactly (polylog form).

    The half-integer K is a finite polynomial times exp(-z); summing over p
    turns each polynomial term into a negative-order polylogarithm of
    w = exp(-z0), a rational function of w.
    """
    if z0 >= _LOG_FLOOR:
        return 0.0
    w = math.exp(-z0)
    pref = math.sqrt(0.5 * math.pi) * scale ** (m + 0.5) / math.sqrt(z0)
    coeffs = HALF_K_COEFFS[m]
    inv2z = 1.0 / (2.0 * z0)
    acc = 0.0
    power = 1.0
    for r in range(m + 1):
        acc += coeffs[r] * power * _li_neg(m - r, w)
        power *= inv2z
    return pref * acc


def ksum_polylog(
    chi: float,
    temp: float,
    alpha: float,
    m: int,
    scale: float,
    rel_tol: float,
    n_max: int,
) -> tuple[float, int]:
    """sum_{n>=0} (n+chi)^alpha * halfk_psum((n+chi)/temp, scale, m).

    Terms decay like exp(-(n+chi)/temp); the sum is cut once a term falls
    below rel_tol relative to the accumulated value past the exponential
    turnover.  Returns (value, number of n-terms used).
    """
    acc = 0.0
    turnover = (max(alpha, 0.0) + m + 2.0) * temp
    n = 0
    while n < n_max:
        base = n + chi
        z0 = base / temp
        if z0 >= _LOG_FLOOR:
            break
        term = base**alpha * halfk_psum(z0, scale, m)
        acc += term
        if base > turnover and abs(term) <= rel_tol * abs(acc):
            break
        n += 1
    return acc, n + 1


def thermal_log_sum(
    chi: float, j: int, temp: float, rel_tol: float, n_max: int
) -> tuple[float, int]:
    """sum_{n>=0} (n+chi)^j log(1 - exp(-(n+chi)/temp))."""
    acc = 0.0
    turnover = (j + 2.0) * temp
    n = 0
    while n < n_max:
        base = n + chi
        z0 = base / temp
        if z0 >= _LOG_FLOOR:
            break
        term = base**j * math.log(-math.expm1(-z0))
        acc += term
        if base > turnover and abs(term) <= rel_tol * abs(acc):
            break
        n += 1
    return acc, n + 1


def debye_remainder(
    nu: float, xs: np.ndarray, qcoeffs: np.ndarray, i_start: int
) -> np.ndarray:
    """-2 sum_i P_{2i}(t)/nu^(2i) for i = i_start..i_start+rows-1.

    ``qcoeffs[row, k]`` holds the coefficient of t^(2i) * (t^2)^k in P_{2i}
    (i = i_start + row), so with r = 1/(nu^2 + x^2) and t^2 = nu^2 r the
    i-th term is r^i * Q_i(t^2).  This is the analytic form of the Bessel
    remainder for large order, accurate once nu >= ~30.
    """
    xs = np.asarray(xs, dtype=float)
    r = 1.0 / (nu * nu + xs * xs)
    t2 = nu * nu * r
    acc = np.zeros_like(xs)
    r_pow = r**i_start
    n_rows, n_cols = qcoeffs.shape
    for row in range(n_rows):
        q = np.zeros_like(xs) + qcoeffs[row, n_cols - 1]
        for k in range(n_cols - 2, -1, -1):
            q = q * t2 + qcoeffs[row, k]
        acc += r_pow * q
        r_pow = r_pow * r
    return -2.0 * acc
