"""zeta(a;0) and zeta'(a;0) - 2 zeta(a;0) log a for the four boundary
conditions.

Differentiating the pole-subtracted zeta assemblies at s = 0 leaves a
four-part structure (the truncation-order N cancels identically between
the subtracted Hurwitz blocks and the Bessel-remainder reduction, which is
why none of the terms below depends on it):

* a Hurwitz-derivative block  +- sum_j w_j zeta_H'(-j; chi);
* for the Robin families, a finite double sum
  sum_j z_j sum_{i=1}^{[j/2]} c^(2i)/i * zeta_H(2i-j; D/2) whose Hurwitz
  values sit at non-positive integers and are exact rationals;
* the log Gamma reduction Y_D(c) of the remainder sum (:func:`y_d`);
* a digamma-weighted Debye block
  - sum_{i,k} W_{i,k} (psi(i+k) - psi(1) - 2 psi(chi)), where
  psi(i+k) - psi(1) = H_{i+k-1} is taken as an exact rational;
* Neumann adds log(D/2) from its exceptional l = 0 channel.

zeta(a;0) itself is assembled here independently (same s -> 0 limit, but
through this module's own exact path) and must equal the heat-kernel c_D;
the acceptance suite checks that identity for every (D, bc).

The zeta_R'(-j) weights of the published closed forms are exposed exactly:
for half-integer chi the reduction zeta_H(s; chi) = (2^s - 1) zeta_R(s) -
(finite part) contributes a factor (2^(-j) - 1), for integer chi the
factor is 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .debye import DebyeTable, debye_table
from .degeneracy import DegeneracySet, nu_expansion
from .exactnum import ExactCoeff, Rational, hurwitz_neg_int
from .heatkernel import (
    BoundaryCondition,
    bc_base_weight,
    bc_pair_weights,
    bc_sign,
    robin_constant,
)
from . import specfun

Branch = Literal["scalar", "te"]


@dataclass(frozen=True)
class ZetaPrimeResult:
    dimension: int
    bc: BoundaryCondition
    zeta_zero: ExactCoeff
    zp_value: float  # zeta'(a;0) - 2 zeta(a;0) log a
    breakdown: tuple[tuple[str, float], ...]
    zeta_rp_weights: dict[int, Fraction]

    def breakdown_dict(self) -> dict[str, float]:
        return dict(self.breakdown)


def _chi(dimension: int, bc: BoundaryCondition) -> Fraction:
    if bc is BoundaryCondition.DIRICHLET:
        return Fraction(dimension - 2, 2)
    return Fraction(dimension, 2)


def zeta_rprime_weights(dimension: int, bc: BoundaryCondition) -> dict[int, Fraction]:
    """Exact rational weight of zeta_R'(-j) in the closed form of
    zeta'(a;0) - 2 zeta(a;0) log a."""
    bc = BoundaryCondition(bc)
    deg = nu_expansion(dimension)
    chi = _chi(dimension, bc)
    sgn = bc_sign(bc)
    half_integer_chi = chi.denominator == 2
    out: dict[int, Fraction] = {}
    for j in range(dimension - 1):
        w = bc_base_weight(deg, bc, j)
        if not w:
            continue
        factor = Fraction(1, 2**j) - 1 if half_integer_chi else Fraction(1)
        weight = sgn * w * factor
        if weight:
            out[j] = weight
    return out


def zeta_zero_exact(dimension: int, bc: BoundaryCondition) -> ExactCoeff:
    """zeta(a;0) from the s -> 0 limit of the analytic continuation.

    The sin(pi s) prefactor kills the Bessel remainder at s = 0, the
    Gamma-ratio factor vanishes linearly except against the zeta_H pole at
    j = 2i - 1, and Neumann's exceptional channel contributes -1/2.  The
    spectral identity zeta(a;0) = c_D is a cross-module test, so this
    assembly deliberately does not call the heatkernel module.
    """
    bc = BoundaryCondition(bc)
    d = dimension
    deg = nu_expansion(d)
    c = robin_constant(bc, d)
    table = debye_table(d // 2 + 1, () if c is None else (c,))
    chi = _chi(d, bc)
    acc = Fraction(0)
    for j in range(d - 1):
        acc += Fraction(bc_sign(bc) * bc_base_weight(deg, bc, j), 2) * hurwitz_neg_int(j, chi)
    for i in range(1, (d - 1) // 2 + 1):
        acc -= sum(bc_pair_weights(bc, table, deg, i, 2 * i - 1), Fraction(0))
    if bc is BoundaryCondition.NEUMANN:
        acc -= Fraction(1, 2)
    return ExactCoeff(acc)


def y_d(dimension: int, c: float | Rational, branch: Branch = "scalar") -> float:
    """Y_D(c): the log Gamma reduction of the Robin remainder sum.

    ``branch`` selects the degeneracy weights: "scalar" uses y_{D;j}
    (Neumann, perfectly conducting TM), "te" uses x_{D;j} (infinitely
    permeable TE).  Requires |c| < D/2; Y_D(0) = 0 identically.
    """
    if branch not in ("scalar", "te"):
        raise ValueError("branch must be 'scalar' or 'te'")
    c = float(c)
    half_d = 0.5 * dimension
    if abs(c) >= half_d:
        raise ValueError("|c| must be smaller than D/2")
    deg = nu_expansion(dimension)
    z = deg.y if branch == "scalar" else deg.x
    psi_half = specfun.digamma(half_d)
    total = -2.0 * float(z[0]) * specfun.lgamma(half_d)
    for j in range(dimension - 1):
        zj = float(z[j])
        if zj == 0.0:
            continue
        term = 0.0
        if j % 2 == 1:
            term += 2.0 * psi_half * c ** (j + 1) / (j + 1)
        sign_j = -1.0 if j % 2 else 1.0
        term += c**j * (specfun.lgamma(half_d - c) + sign_j * specfun.lgamma(half_d + c))
        if j >= 1 and c != 0.0:
            int_plus = specfun.lngamma_moment_integral(j, c, dimension, +1)
            int_minus = specfun.lngamma_moment_integral(j, c, dimension, -1)
            term -= j * (sign_j * int_plus + int_minus)
        total += zj * term
    return total


def zeta_prime_zero(dimension: int, bc: BoundaryCondition) -> ZetaPrimeResult:
    """zeta'(a;0) - 2 zeta(a;0) log a with a labelled term breakdown."""
    if not 3 <= dimension <= 12:
        raise ValueError("dimension must be in 3..12")
    bc = BoundaryCondition(bc)
    d = dimension
    deg = nu_expansion(d)
    c = robin_constant(bc, d)
    table = debye_table(d // 2 + 1, () if c is None else (c,))
    chi = _chi(d, bc)
    sgn = bc_sign(bc)

    # 1. Hurwitz-derivative block
    hder = 0.0
    for j in range(d - 1):
        w = bc_base_weight(deg, bc, j)
        if w:
            hder += sgn * float(w) * specfun.hurwitz_deriv_neg_int(j, float(chi))

    breakdown: list[tuple[str, float]] = [("hurwitz_deriv", hder)]

    # 2. finite Hurwitz sums (Robin families only); all zeta_H arguments
    #    are non-positive integers, so the block is exactly rational.
    if bc is not BoundaryCondition.DIRICHLET:
        if bc is BoundaryCondition.INFINITELY_PERMEABLE:
            zw = deg.x
            csq = Fraction(d - 4, 2) ** 2
        else:
            zw = deg.y
            csq = Fraction(d - 2, 2) ** 2
        acc = Fraction(0)
        for j in range(d - 1):
            if not zw[j]:
                continue
            for i in range(1, j // 2 + 1):
                acc += zw[j] * csq**i / i * hurwitz_neg_int(j - 2 * i, Fraction(d, 2))
        breakdown.append(("hurwitz_sums", float(acc)))

        # 3. Y_D block
        branch: Branch = "te" if bc is BoundaryCondition.INFINITELY_PERMEABLE else "scalar"
        breakdown.append(("y_d", y_d(d, c, branch)))

    # 4. psi-weighted Debye block: -sum W_{i,k}(H_{i+k-1} - 2 psi(chi))
    harmonic_part = Fraction(0)
    weight_total = Fraction(0)
    for i in range(1, (d - 1) // 2 + 1):
        row = bc_pair_weights(bc, table, deg, i, 2 * i - 1)
        for k, w in enumerate(row):
            if w:
                harmonic_part += w * specfun.harmonic(i + k - 1)
                weight_total += w
    psi_block = -float(harmonic_part) + 2.0 * specfun.digamma(float(chi)) * float(weight_total)
    breakdown.append(("psi_debye", psi_block))

    # 5. Neumann's exceptional l = 0 channel
    if bc is BoundaryCondition.NEUMANN:
        breakdown.append(("neumann_l0", math.log(0.5 * d)))

    value = math.fsum(v for _, v in breakdown)
    return ZetaPrimeResult(
        dimension=d,
        bc=bc,
        zeta_zero=zeta_zero_exact(d, bc),
        zp_value=value,
        breakdown=tuple(breakdown),
        zeta_rp_weights=zeta_rprime_weights(d, bc),
    )
