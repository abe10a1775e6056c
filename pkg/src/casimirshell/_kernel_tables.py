"""Shared constant tables for the hot kernels (both backends).

* ``HALF_K_COEFFS[m][r] = (m+r)!/(r!(m-r)!)``: the closed-form polynomial of
  the half-integer Bessel function
  K_{m+1/2}(z) = sqrt(pi/(2z)) e^(-z) sum_r HALF_K_COEFFS[m][r] (2z)^(-r).
* ``EULERIAN[q][r]``: Eulerian numbers for the negative-order polylogarithm
  Li_{-q}(w) = sum_{r=0}^{q-1} EULERIAN[q][r] w^(q-r) / (1-w)^(q+1), q >= 1,
  which performs the Matsubara p-sums of the K-blocks in closed form.
"""

from __future__ import annotations

import math

import numpy as np

MAX_HALF_ORDER = 24


def _build_half_k() -> list[np.ndarray]:
    out = []
    for m in range(MAX_HALF_ORDER + 1):
        row = [
            math.factorial(m + r) / (math.factorial(r) * math.factorial(m - r))
            for r in range(m + 1)
        ]
        out.append(np.array(row))
    return out


def _build_eulerian() -> list[np.ndarray]:
    rows: list[list[int]] = [[1]]
    for q in range(1, MAX_HALF_ORDER + 1):
        prev = rows[-1]
        row = []
        for r in range(q):
            left = (r + 1) * (prev[r] if r < len(prev) else 0)
            right = (q - r) * (prev[r - 1] if 0 <= r - 1 < len(prev) else 0)
            row.append(left + right)
        rows.append(row)
    return [np.array(r, dtype=float) for r in rows]


HALF_K_COEFFS = _build_half_k()
EULERIAN = _build_eulerian()
