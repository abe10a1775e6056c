# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython twins of the hot kernels in ``_kernels_py``.

Same signatures and semantics; plain C loops over the closed-form
polynomials.  See the pure module for the mathematics.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, expm1, log, pow, sqrt

cnp.import_array()

from ._kernel_tables import EULERIAN, HALF_K_COEFFS, MAX_HALF_ORDER

DEF PI = 3.141592653589793
DEF LOG_FLOOR = 745.0

# flatten the triangular tables into fixed-stride C buffers
cdef int _MAXM = MAX_HALF_ORDER
cdef double[::1] _HALFK = np.zeros((_MAXM + 1) * (_MAXM + 1))
cdef double[::1] _EULER = np.zeros((_MAXM + 1) * (_MAXM + 1))

def _init_tables():
    flat_h = np.zeros((_MAXM + 1) * (_MAXM + 1))
    flat_e = np.zeros((_MAXM + 1) * (_MAXM + 1))
    for m, row in enumerate(HALF_K_COEFFS):
        for r, v in enumerate(row):
            flat_h[m * (_MAXM + 1) + r] = v
    for q, row in enumerate(EULERIAN):
        for r, v in enumerate(row):
            flat_e[q * (_MAXM + 1) + r] = v
    return flat_h, flat_e

_h, _e = _init_tables()
_HALFK[:] = _h
_EULER[:] = _e


cdef inline double _li_neg(int q, double w) noexcept:
    cdef double one_m = 1.0 - w
    cdef double acc = 0.0
    cdef double wp
    cdef int r
    if q == 0:
        return w / one_m
    wp = pow(w, q)
    for r in range(q):
        acc += _EULER[q * (_MAXM + 1) + r] * wp
        wp /= w
    return acc / pow(one_m, q + 1)


cdef double _halfk_psum(double z0, double scale, int m) noexcept:
    cdef double w, pref, inv2z, acc, power
    cdef int r
    if z0 >= LOG_FLOOR:
        return 0.0
    w = exp(-z0)
    pref = sqrt(0.5 * PI) * pow(scale, m + 0.5) / sqrt(z0)
    inv2z = 1.0 / (2.0 * z0)
    acc = 0.0
    power = 1.0
    for r in range(m + 1):
        acc += _HALFK[m * (_MAXM + 1) + r] * power * _li_neg(m - r, w)
        power *= inv2z
    return pref * acc


def halfk_psum(double z0, double scale, int m):
    """sum_{p>=1} (p*scale)^(m+1/2) K_{m+1/2}(p*z0) in closed form."""
    return _halfk_psum(z0, scale, m)


def ksum_polylog(double chi, double temp, double alpha, int m, double scale,
                 double rel_tol, long n_max):
    """sum_{n>=0} (n+chi)^alpha * halfk_psum((n+chi)/temp, scale, m)."""
    cdef double acc = 0.0
    cdef double turnover = (max(alpha, 0.0) + m + 2.0) * temp
    cdef double base, z0, term
    cdef long n = 0
    while n < n_max:
        base = n + chi
        z0 = base / temp
        if z0 >= LOG_FLOOR:
            break
        term = pow(base, alpha) * _halfk_psum(z0, scale, m)
        acc += term
        if base > turnover and abs(term) <= rel_tol * abs(acc):
            break
        n += 1
    return acc, n + 1


def thermal_log_sum(double chi, int j, double temp, double rel_tol, long n_max):
    """sum_{n>=0} (n+chi)^j log(1 - exp(-(n+chi)/temp))."""
    cdef double acc = 0.0
    cdef double turnover = (j + 2.0) * temp
    cdef double base, z0, term
    cdef long n = 0
    while n < n_max:
        base = n + chi
        z0 = base / temp
        if z0 >= LOG_FLOOR:
            break
        term = pow(base, j) * log(-expm1(-z0))
        acc += term
        if base > turnover and abs(term) <= rel_tol * abs(acc):
            break
        n += 1
    return acc, n + 1


def debye_remainder(double nu, xs, cnp.ndarray[cnp.float64_t, ndim=2] qcoeffs,
                    int i_start):
    """Analytic large-order Bessel remainder; see the pure twin."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xarr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty_like(xarr)
    cdef Py_ssize_t n = xarr.shape[0]
    cdef int n_rows = qcoeffs.shape[0]
    cdef int n_cols = qcoeffs.shape[1]
    cdef Py_ssize_t idx
    cdef int row, k
    cdef double r, t2, acc, r_pow, q, nu2 = nu * nu
    for idx in range(n):
        r = 1.0 / (nu2 + xarr[idx] * xarr[idx])
        t2 = nu2 * r
        acc = 0.0
        r_pow = pow(r, i_start)
        for row in range(n_rows):
            q = qcoeffs[row, n_cols - 1]
            for k in range(n_cols - 2, -1, -1):
                q = q * t2 + qcoeffs[row, k]
            acc += r_pow * q
            r_pow *= r
        out[idx] = -2.0 * acc
    return out
