"""Exact heat-kernel coefficients c_n of the spherical shell, 0 <= n <= D+1.

The combined interior+exterior zeta function has simple poles whose residues
give the shell's heat-kernel coefficients in closed form.  With the
nu-expansion weights y_{D;j} (scalar/TM) and x_{D;j} (TE) and the Debye
coefficient rows d_{2i,k}, m_{2i,k}(c), the Dirichlet family reads

    c_n    = a^(D-n) [ -y_{D;D-n-1}/4 * Gamma((D-n)/2)
             - sum_{i=1}^{[(n-1)/2]} y_{D;D-n+2i-1}
               sum_k d_{2i,k} Gamma((D-n)/2+i+k)/Gamma(i+k) ],  n <= D-1,
    c_D    = -1/2 sum_j y_{D;j} zeta_H(-j;(D-2)/2)
             - sum_{i=1}^{[(D-1)/2]} y_{D;2i-1} sum_k d_{2i,k},
    c_{D+1}= -1/a sum_{i=1}^{[D/2]} y_{D;2i-2}
             sum_k d_{2i,k} Gamma(i+k-1/2)/Gamma(i+k),

and the Neumann / perfectly-conducting / infinitely-permeable families swap
in m_{2i,k}(c) rows with the boundary condition's Robin constant and the
appropriate x/y weight combinations (Neumann additionally contributes the
constant -1/2 to c_D from its exceptional l = 0 channel).  All Gamma ratios
carry half-integer arguments at most once, so every coefficient is an exact
rational times at most one factor of sqrt(pi): an :class:`ExactCoeff`.

Structural facts baked in and re-checked at assembly time: c_n = 0 for even
n <= D-1, and c_{D+1} = 0 for odd D (so the free energy is unambiguous
exactly in odd dimensions).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .debye import DebyeTable, debye_table
from .degeneracy import DegeneracySet, nu_expansion
from .exactnum import ExactCoeff, Rational, hurwitz_neg_int


class BoundaryCondition(enum.Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"
    PERFECT_CONDUCTOR = "pc"
    INFINITELY_PERMEABLE = "ip"

    @classmethod
    def parse(cls, name: str) -> "BoundaryCondition":
        name = name.strip().lower()
        aliases = {
            "d": cls.DIRICHLET,
            "dirichlet": cls.DIRICHLET,
            "n": cls.NEUMANN,
            "neumann": cls.NEUMANN,
            "pc": cls.PERFECT_CONDUCTOR,
            "conductor": cls.PERFECT_CONDUCTOR,
            "ip": cls.INFINITELY_PERMEABLE,
            "permeable": cls.INFINITELY_PERMEABLE,
        }
        try:
            return aliases[name]
        except KeyError:
            raise ValueError(f"unknown boundary condition {name!r}") from None


def robin_constant(bc: BoundaryCondition, dimension: int) -> Fraction | None:
    """Robin parameter of the non-Dirichlet channel, or None for Dirichlet.

    Neumann: c = (2-D)/2 (with the exceptional l = 0 channel),
    perfectly conducting TM: c = (D-2)/2, infinitely permeable TE:
    c = (4-D)/2.
    """
    if bc is BoundaryCondition.DIRICHLET:
        return None
    if bc is BoundaryCondition.NEUMANN:
        return Fraction(2 - dimension, 2)
    if bc is BoundaryCondition.PERFECT_CONDUCTOR:
        return Fraction(dimension - 2, 2)
    return Fraction(4 - dimension, 2)


@dataclass(frozen=True)
class HeatKernelSet:
    """c_0..c_{D+1} for one (dimension, boundary condition) pair."""

    dimension: int
    bc: BoundaryCondition
    coeffs: tuple[ExactCoeff, ...]

    def coeff(self, n: int) -> ExactCoeff:
        return self.coeffs[n]

    @property
    def is_unambiguous(self) -> bool:
        """True iff c_{D+1} = 0, i.e. the free energy carries no log(mu)."""
        return self.coeffs[self.dimension + 1].is_zero


def gamma_exact(twice_arg: int) -> ExactCoeff:
    """Gamma(k/2) for integer k >= 1 as rational (x) sqrt(pi)."""
    if twice_arg < 1:
        raise ValueError("argument must be positive")
    if twice_arg % 2 == 0:
        n = twice_arg // 2
        acc = Fraction(1)
        for r in range(2, n):
            acc *= r
        return ExactCoeff(acc)
    # Gamma(m + 1/2) = sqrt(pi) (2m-1)!! / 2^m
    m = (twice_arg - 1) // 2
    acc = Fraction(1)
    for r in range(1, m + 1):
        acc *= Fraction(2 * r - 1, 2)
    return ExactCoeff(acc, sqrt_pi_power=1)


def gamma_ratio_exact(p: Rational, m: int) -> ExactCoeff:
    """Gamma(m + p)/Gamma(m) for integer m >= 1 and integer or
    half-integer p with m + p > 0, evaluated by ascending products so the
    result is exactly rational (x) sqrt(pi)."""
    p = Fraction(p)
    if m < 1:
        raise ValueError("m must be a positive integer")
    if p.denominator == 1:
        k = int(p)
        if k < 0:
            raise ValueError("negative integer shifts not needed")
        acc = Fraction(1)
        for r in range(k):
            acc *= m + r
        return ExactCoeff(acc)
    if p.denominator != 2:
        raise ValueError("shift must be integer or half-integer")
    q = int(p - Fraction(1, 2))  # p = q + 1/2, q >= -1 in all uses
    if m + q < 0:
        raise ValueError("m + p must be positive")
    num = Fraction(1)
    for r in range(m + q):
        num *= Fraction(2 * r + 1, 2)
    den = Fraction(1)
    for r in range(1, m):
        den *= r
    return ExactCoeff(num / den, sqrt_pi_power=1)


def bc_sign(bc: BoundaryCondition) -> int:
    """Sign of the leading Hurwitz block: -1 for the Dirichlet-type
    combination (Dirichlet, PC), +1 for the Robin-type (Neumann, IP)."""
    if bc in (BoundaryCondition.DIRICHLET, BoundaryCondition.PERFECT_CONDUCTOR):
        return -1
    return 1


def bc_base_weight(deg: DegeneracySet, bc: BoundaryCondition, j: int) -> Fraction:
    """Unsigned degeneracy weight of the leading blocks: y_{D;j} for the
    scalar families, x_{D;j} - y_{D;j} for the electromagnetic ones."""
    if bc in (BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN):
        return deg.y_coeff(j)
    return deg.x_coeff(j) - deg.y_coeff(j)


def bc_pair_weights(
    bc: BoundaryCondition,
    table: DebyeTable,
    deg: DegeneracySet,
    i: int,
    j: int,
) -> list[Fraction]:
    """W_{i,k}: weights of the order-2i Debye rows at degeneracy index j,
    i.e. the (x, y)-weighted combination of d_{2i,k} and m_{2i,k}(c)."""
    y_j = deg.y_coeff(j)
    x_j = deg.x_coeff(j)
    d_row = table.d_row(2 * i)
    if bc is BoundaryCondition.DIRICHLET:
        return [y_j * dk for dk in d_row]
    c = robin_constant(bc, deg.dimension)
    m_row = table.m_row(2 * i, c)
    if bc is BoundaryCondition.NEUMANN:
        return [y_j * mk for mk in m_row]
    if bc is BoundaryCondition.PERFECT_CONDUCTOR:
        return [x_j * dk + y_j * mk for dk, mk in zip(d_row, m_row)]
    return [x_j * mk + y_j * dk for dk, mk in zip(d_row, m_row)]


def _first_weight(bc: BoundaryCondition, deg: DegeneracySet, j: int) -> Fraction:
    """Signed weight of the Gamma((D-n)/2)/4 term (j = D-n-1) and of the
    zeta_H block in c_D."""
    return bc_sign(bc) * bc_base_weight(deg, bc, j)


@lru_cache(maxsize=None)
def heat_kernel_coeffs(dimension: int, bc: BoundaryCondition) -> HeatKernelSet:
    """Exact c_n, 0 <= n <= D+1, for 3 <= D <= 12."""
    if not 3 <= dimension <= 12:
        raise ValueError("dimension must be in 3..12")
    bc = BoundaryCondition(bc)
    d = dimension
    deg = nu_expansion(d)
    c = robin_constant(bc, d)
    table = debye_table(d // 2 + 1, () if c is None else (c,))

    coeffs: list[ExactCoeff] = []
    for n in range(d):  # 0 <= n <= D-1
        first = _first_weight(bc, deg, d - n - 1)
        acc = gamma_exact(d - n).scaled(first / 4)
        for i in range(1, (n - 1) // 2 + 1):
            row = bc_pair_weights(bc, table, deg, i, d - n + 2 * i - 1)
            for k, w in enumerate(row):
                if w:
                    term = gamma_ratio_exact(Fraction(d - n, 2), i + k).scaled(-w)
                    acc = acc + term
        if acc.is_zero:
            acc = ExactCoeff(Fraction(0), 0, d - n)
        else:
            acc = ExactCoeff(acc.coeff, acc.sqrt_pi_power, d - n)
        coeffs.append(acc)

    # n = D: zeta(a;0)
    chi = Fraction(d - 2, 2) if bc is BoundaryCondition.DIRICHLET else Fraction(d, 2)
    acc_d = Fraction(0)
    for j in range(d - 1):
        acc_d += _first_weight(bc, deg, j) / 2 * hurwitz_neg_int(j, chi)
    for i in range(1, (d - 1) // 2 + 1):
        acc_d -= sum(bc_pair_weights(bc, table, deg, i, 2 * i - 1), Fraction(0))
    if bc is BoundaryCondition.NEUMANN:
        acc_d -= Fraction(1, 2)
    coeffs.append(ExactCoeff(acc_d, 0, 0))

    # n = D+1: the residue at s = -1/2
    acc_top = ExactCoeff(Fraction(0), 0, -1)
    for i in range(1, d // 2 + 1):
        row = bc_pair_weights(bc, table, deg, i, 2 * i - 2)
        for k, w in enumerate(row):
            if w:
                term = gamma_ratio_exact(Fraction(-1, 2), i + k).scaled(-w)
                acc_top = acc_top + term
    coeffs.append(ExactCoeff(acc_top.coeff, acc_top.sqrt_pi_power, -1))

    result = HeatKernelSet(d, bc, tuple(coeffs))
    _check_parity(result)
    return result


def _check_parity(hk: HeatKernelSet) -> None:
    d = hk.dimension
    for n in range(0, d, 2):
        if not hk.coeffs[n].is_zero:
            raise AssertionError(f"parity violation: c_{n} nonzero for D={d}")
    if d % 2 == 1 and not hk.coeffs[d + 1].is_zero:
        raise AssertionError(f"c_{d+1} nonzero for odd D={d}")
