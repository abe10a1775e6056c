"""Exact rational arithmetic substrate.

Everything in the closed-form layer of this package is a rational number,
possibly multiplied by a single power of sqrt(pi) and a power of the shell
radius ``a``.  This module provides the three carriers of that arithmetic
(:class:`Rational`, :class:`ExactCoeff`, :class:`RatPoly`) together with
exact Bernoulli polynomials and the Hurwitz zeta function at non-positive
integer arguments, where it is a rational number:

    zeta_H(-j; chi) = -B_{j+1}(chi) / (j+1).

No floating point enters here; float conversion happens only at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, pi, sqrt
from typing import Iterable, Mapping, Union

#: Exact rational numbers.  ``fractions.Fraction`` already guarantees the
#: invariants we need (lowest terms, positive denominator, exact arithmetic).
Rational = Fraction

RationalLike = Union[Rational, int]


@lru_cache(maxsize=None)
def _bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n as exact Fractions via the Akiyama-Tanigawa recurrence.

    Uses the generating-function convention B_1 = -1/2 (so that
    B_n(0) = B_n for the polynomials below).
    """
    row = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if n >= 1:
        out[1] = Fraction(-1, 2)  # Akiyama-Tanigawa yields +1/2
    return tuple(out)


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n, convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    return _bernoulli_numbers(n)[n]


def bernoulli_poly(n: int, x: RationalLike) -> Fraction:
    """Exact Bernoulli polynomial B_n(x).

    B_0(x) = 1, B_1(x) = x - 1/2, and generally
    B_n(x) = sum_k C(n, k) B_k x^(n-k).
    """
    if n < 0:
        raise ValueError("Bernoulli degree must be non-negative")
    x = Fraction(x)
    numbers = _bernoulli_numbers(n)
    acc = Fraction(0)
    xpow = Fraction(1)  # x^(n-k), built from k = n downwards
    for k in range(n, -1, -1):
        acc += comb(n, k) * numbers[k] * xpow
        xpow *= x
    return acc


def hurwitz_neg_int(j: int, chi: RationalLike) -> Fraction:
    """Exact zeta_H(-j; chi) = -B_{j+1}(chi)/(j+1) for integer j >= 0.

    This is the only window where the Hurwitz zeta function is rational;
    it supplies every zeta_H value entering the heat-kernel tables.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    chi = Fraction(chi)
    if chi <= 0:
        raise ValueError("chi must be positive")
    return -bernoulli_poly(j + 1, chi) / (j + 1)


_SQRT_PI = sqrt(pi)


@dataclass(frozen=True)
class ExactCoeff:
    """A value of the form coeff * pi^(sqrt_pi_power/2) * a^(a_power).

    Every closed-form coefficient produced by this package (heat-kernel
    entries in particular) lives in this tiny field: a rational mantissa,
    at most one factor of sqrt(pi), and an integer power of the radius.
    Zero values are canonicalised to sqrt_pi_power = 0 so that equality
    remains field-wise.
    """

    coeff: Fraction
    sqrt_pi_power: int = 0
    a_power: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.sqrt_pi_power not in (0, 1):
            raise ValueError("sqrt_pi_power must be 0 or 1")
        if self.coeff == 0 and self.sqrt_pi_power != 0:
            object.__setattr__(self, "sqrt_pi_power", 0)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __add__(self, other: "ExactCoeff") -> "ExactCoeff":
        if not isinstance(other, ExactCoeff):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if (self.sqrt_pi_power, self.a_power) != (other.sqrt_pi_power, other.a_power):
            raise ValueError(
                "cannot add ExactCoeff values with different sqrt(pi)/a powers: "
                f"{self} + {other}"
            )
        return ExactCoeff(self.coeff + other.coeff, self.sqrt_pi_power, self.a_power)

    def __neg__(self) -> "ExactCoeff":
        return ExactCoeff(-self.coeff, self.sqrt_pi_power, self.a_power)

    def __sub__(self, other: "ExactCoeff") -> "ExactCoeff":
        return self + (-other)

    def scaled(self, factor: RationalLike) -> "ExactCoeff":
        return ExactCoeff(self.coeff * Fraction(factor), self.sqrt_pi_power, self.a_power)

    def evaluate(self, a: float = 1.0) -> float:
        """Numeric value at shell radius ``a``."""
        value = float(self.coeff)
        if self.sqrt_pi_power:
            value *= _SQRT_PI
        if self.a_power:
            value *= a ** self.a_power
        return value

    def exact_str(self) -> str:
        """Serialise as e.g. ``-35*sqrt(pi)/32768/a`` (re-parseable form)."""
        if self.is_zero:
            return "0"
        num, den = self.coeff.numerator, self.coeff.denominator
        out = str(num)
        if self.sqrt_pi_power:
            out += "*sqrt(pi)"
        if den != 1:
            out += f"/{den}"
        k = self.a_power
        if k == 1:
            out += "*a"
        elif k > 1:
            out += f"*a^{k}"
        elif k == -1:
            out += "/a"
        elif k < -1:
            out += f"/a^{-k}"
        return out

    def __str__(self) -> str:
        return self.exact_str()


ZERO_COEFF = ExactCoeff(Fraction(0))


class RatPoly:
    """Sparse polynomial with exact rational coefficients.

    Stored as {exponent: coefficient} with no zero entries.  Supports the
    handful of operations the Debye recursions need: ring arithmetic,
    d/dt, and the definite integral from 0 to t.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, RationalLike] | None = None):
        data: dict[int, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError("exponents must be non-negative")
                v = Fraction(v)
                if v != 0:
                    data[int(k)] = v
        self.coeffs = data

    def coeff(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "RatPoly") -> "RatPoly":
        data = dict(self.coeffs)
        for k, v in other.coeffs.items():
            data[k] = data.get(k, Fraction(0)) + v
        return RatPoly(data)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        data = dict(self.coeffs)
        for k, v in other.coeffs.items():
            data[k] = data.get(k, Fraction(0)) - v
        return RatPoly(data)

    def __mul__(self, other: "RatPoly | RationalLike") -> "RatPoly":
        if isinstance(other, (Fraction, int)):
            return RatPoly({k: v * other for k, v in self.coeffs.items()})
        data: dict[int, Fraction] = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                data[k] = data.get(k, Fraction(0)) + v1 * v2
        return RatPoly(data)

    __rmul__ = __mul__

    def __neg__(self) -> "RatPoly":
        return self * Fraction(-1)

    def deriv(self) -> "RatPoly":
        return RatPoly({k - 1: k * v for k, v in self.coeffs.items() if k >= 1})

    def integrate(self) -> "RatPoly":
        """Definite integral from 0 to t, as a polynomial in t."""
        return RatPoly({k + 1: v / (k + 1) for k, v in self.coeffs.items()})

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for k, v in self.coeffs.items():
            acc += v * x**k
        return acc

    def evaluate_float(self, x: float) -> float:
        return sum(float(v) * x**k for k, v in self.coeffs.items())

    def exponents(self) -> list[int]:
        return sorted(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "RatPoly(0)"
        parts = [f"({v})*t^{k}" for k, v in sorted(self.coeffs.items())]
        return "RatPoly(" + " + ".join(parts) + ")"


ONE_POLY = RatPoly({0: 1})
