"""Angular mode degeneracies on the (D-1)-sphere and their nu-expansions.

The scalar (and TM) channel carries degeneracy

    b_D(l) = (2l+D-2) (l+D-3)! / ((D-2)! l!),          l >= 0,

and the TE channel

    h_D(l) = l (l+D-2) (2l+D-2) (l+D-4)! / ((D-3)! (l+1)!),   l >= 1.

Both are polynomials in l of degree D-2, and in the Bessel order
nu = l + (D-2)/2 they re-expand with rational coefficients

    b_D(l) = sum_j y_{D;j} nu^j,       h_D(l) = sum_j x_{D;j} nu^j,

where x_{D;j}, y_{D;j} vanish unless j and D have the same parity.  The
expansion is an exact change of basis (substitute l = nu - (D-2)/2 into the
closed-form polynomial), so the parity property and the reconstruction of
b_D, h_D at integer l are theorems of the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactnum import Rational


def b_deg(dimension: int, l: int) -> Fraction:
    """Scalar/TM degeneracy b_D(l); exact and integer-valued."""
    if dimension < 3:
        raise ValueError("dimension must be >= 3")
    if l < 0:
        raise ValueError("l must be >= 0")
    d = dimension
    return Fraction(
        (2 * l + d - 2) * factorial(l + d - 3),
        factorial(d - 2) * factorial(l),
    )


def h_deg(dimension: int, l: int) -> Fraction:
    """TE degeneracy h_D(l); the TE tower starts at l = 1."""
    if dimension < 3:
        raise ValueError("dimension must be >= 3")
    if l < 1:
        raise ValueError("TE degeneracy is defined for l >= 1")
    d = dimension
    return Fraction(
        l * (l + d - 2) * (2 * l + d - 2) * factorial(l + d - 4),
        factorial(d - 3) * factorial(l + 1),
    )


@dataclass(frozen=True)
class DegeneracySet:
    """x_{D;j}, y_{D;j} for j = 0..D-2."""

    dimension: int
    y: tuple[Fraction, ...]
    x: tuple[Fraction, ...]

    def y_coeff(self, j: int) -> Fraction:
        return self.y[j] if 0 <= j <= self.dimension - 2 else Fraction(0)

    def x_coeff(self, j: int) -> Fraction:
        return self.x[j] if 0 <= j <= self.dimension - 2 else Fraction(0)


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _b_poly(d: int) -> list[Fraction]:
    """b_D as dense coefficients in l (degree D-2)."""
    poly = [Fraction(d - 2), Fraction(2)]  # 2l + D - 2
    for r in range(1, d - 2):  # (l+1)...(l+D-3)
        poly = _poly_mul(poly, [Fraction(r), Fraction(1)])
    return [c / factorial(d - 2) for c in poly]


def _h_poly(d: int) -> list[Fraction]:
    """h_D as dense coefficients in l (degree D-2), after the factorial
    ratio (l+D-4)!/(l+1)! is simplified."""
    if d == 3:
        return [Fraction(1), Fraction(2)]  # 2l + 1
    if d == 4:
        return [Fraction(0), Fraction(4), Fraction(2)]  # 2l(l+2)
    poly = [Fraction(0), Fraction(1)]  # l
    poly = _poly_mul(poly, [Fraction(d - 2), Fraction(1)])  # (l+D-2)
    poly = _poly_mul(poly, [Fraction(d - 2), Fraction(2)])  # (2l+D-2)
    for r in range(2, d - 3):  # (l+2)...(l+D-4)
        poly = _poly_mul(poly, [Fraction(r), Fraction(1)])
    return [c / factorial(d - 3) for c in poly]


def _shift(poly: list[Fraction], s: Fraction) -> list[Fraction]:
    """Coefficients of p(nu + s) given those of p(l)."""
    out = [Fraction(0)] * len(poly)
    for k, c in enumerate(poly):
        for m in range(k + 1):
            out[m] += c * comb(k, m) * s ** (k - m)
    return out


@lru_cache(maxsize=None)
def nu_expansion(dimension: int) -> DegeneracySet:
    """Exact x_{D;j}, y_{D;j} via the substitution l = nu - (D-2)/2."""
    if dimension < 3:
        raise ValueError("dimension must be >= 3")
    s = Fraction(-(dimension - 2), 2)  # l = nu + s
    y = _shift(_b_poly(dimension), s)
    x = _shift(_h_poly(dimension), s)
    n_coeffs = dimension - 1  # j = 0..D-2
    y += [Fraction(0)] * (n_coeffs - len(y))
    x += [Fraction(0)] * (n_coeffs - len(x))
    ds = DegeneracySet(dimension, tuple(y[:n_coeffs]), tuple(x[:n_coeffs]))
    _check(ds)
    return ds


def _check(ds: DegeneracySet) -> None:
    d = ds.dimension
    for j in range(d - 1):
        if (j - d) % 2 != 0:
            if ds.y[j] != 0 or ds.x[j] != 0:
                raise AssertionError("parity violation in nu-expansion")
    for l in (0, 1, 2, 7):
        nu = Fraction(2 * l + d - 2, 2)
        recon = sum(c * nu**j for j, c in enumerate(ds.y))
        if recon != b_deg(d, l):
            raise AssertionError("nu-expansion fails to reproduce b_D")
    for l in (1, 2, 7):
        nu = Fraction(2 * l + d - 2, 2)
        recon = sum(c * nu**j for j, c in enumerate(ds.x))
        if recon != h_deg(d, l):
            raise AssertionError("nu-expansion fails to reproduce h_D")
