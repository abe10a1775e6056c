"""Polynomials of the large-order (Debye) uniform asymptotics of I_nu, K_nu.

In the Debye variable t = 1/sqrt(1+z^2) the large-order expansions of the
modified Bessel functions are governed by polynomials u_k(t), v_k(t)
(DLMF 10.41.ii) defined by

    u_0 = 1,  u_k = t^2(1-t^2)/2 * u_{k-1}' + 1/8 * int_0^t (1-5*tau^2) u_{k-1} dtau,
    v_0 = 1,  v_k = u_k - t^2(1-t^2) u_{k-1}' - t(1-t^2)/2 * u_{k-1}.

Taking logarithms of the two asymptotic series

    log(1 + sum_k u_k/nu^k)                    = sum_n D_n(t)/nu^n,
    log(1 + sum_k (c t u_{k-1} + v_k)/nu^k)    = sum_n M_{n,c}(t)/nu^n,

produces the polynomials D_n and M_{n,c} whose coefficient arrays

    D_n(t) = sum_{k=0}^n d_{n,k} t^(n+2k),
    M_{n,c}(t) = sum_{k=0}^n m_{n,k}(c) t^(n+2k),

drive every analytic continuation in this package.  All coefficients are
exact rationals.  The even rows obey the sum rules

    sum_k d_{2i,k} = 0,        sum_k m_{2i,k}(c) = -c^(2i)/(2i),

which downstream modules rely on and the test suite checks exactly.

The phase eta(z) of the expansions is deliberately never constructed: in
the products I_nu*K_nu and their Robin analogues the exp(+-nu*eta) factors
cancel identically, so only t(z) ever enters numerics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactnum import ONE_POLY, RatPoly, Rational

#: Hard cap on the expansion order; everything in scope needs far less and
#: the exact recursion cost grows quickly beyond this.
MAX_ORDER = 16

_HALF_T2_1MT2 = RatPoly({2: Fraction(1, 2), 4: Fraction(-1, 2)})  # t^2(1-t^2)/2
_T2_1MT2 = RatPoly({2: 1, 4: -1})  # t^2(1-t^2)
_HALF_T_1MT2 = RatPoly({1: Fraction(1, 2), 3: Fraction(-1, 2)})  # t(1-t^2)/2
_EIGHTH_1M5T2 = RatPoly({0: Fraction(1, 8), 2: Fraction(-5, 8)})  # (1-5t^2)/8


def _build_u_v(order: int) -> tuple[list[RatPoly], list[RatPoly]]:
    u = [ONE_POLY]
    v = [ONE_POLY]
    for k in range(1, order + 1):
        du = u[k - 1].deriv()
        u_k = _HALF_T2_1MT2 * du + (_EIGHTH_1M5T2 * u[k - 1]).integrate()
        v_k = u_k - _T2_1MT2 * du - _HALF_T_1MT2 * u[k - 1]
        u.append(u_k)
        v.append(v_k)
    return u, v


def log_expansion(w: Sequence[RatPoly]) -> list[RatPoly]:
    """Coefficients L_n of log(1 + sum_{k>=1} w_k/nu^k) = sum_n L_n/nu^n.

    ``w`` holds w_1..w_N (w_0 = 1 implied).  Uses the explicit recursion

        L_1 = w_1,   L_n = w_n - (1/n) sum_{j=1}^{n-1} j L_j w_{n-j},

    so each L_n is independently checkable against the defining series.
    """
    n_max = len(w)
    ws = [ONE_POLY, *w]
    out: list[RatPoly] = []
    for n in range(1, n_max + 1):
        acc = ws[n]
        for j in range(1, n):
            acc = acc - Fraction(j, n) * (out[j - 1] * ws[n - j])
        out.append(acc)
    return out


@dataclass(frozen=True)
class DebyeTable:
    """Exact u_k, v_k, D_n and M_{n,c} polynomials through order 2N."""

    order: int
    u_polys: tuple[RatPoly, ...]  # k = 0..2N
    v_polys: tuple[RatPoly, ...]  # k = 0..2N
    d_polys: tuple[RatPoly, ...]  # D_n, n = 1..2N
    m_polys: dict[Fraction, tuple[RatPoly, ...]]  # c -> (M_{1,c}..M_{2N,c})

    def d_coeff(self, n: int, k: int) -> Fraction:
        """d_{n,k}: coefficient of t^(n+2k) in D_n."""
        return self.d_polys[n - 1].coeff(n + 2 * k)

    def d_row(self, n: int) -> list[Fraction]:
        return [self.d_coeff(n, k) for k in range(n + 1)]

    def _m_list(self, c: Rational) -> tuple[RatPoly, ...]:
        try:
            return self.m_polys[Fraction(c)]
        except KeyError:
            raise KeyError(f"Robin parameter {c} not in table") from None

    def m_coeff(self, n: int, k: int, c: Rational) -> Fraction:
        """m_{n,k}(c): coefficient of t^(n+2k) in M_{n,c}."""
        return self._m_list(c)[n - 1].coeff(n + 2 * k)

    def m_row(self, n: int, c: Rational) -> list[Fraction]:
        polys = self._m_list(c)
        return [polys[n - 1].coeff(n + 2 * k) for k in range(n + 1)]


@lru_cache(maxsize=None)
def _cached_u_v(order: int) -> tuple[tuple[RatPoly, ...], tuple[RatPoly, ...]]:
    u, v = _build_u_v(order)
    return tuple(u), tuple(v)


@lru_cache(maxsize=None)
def _cached_d(order: int) -> tuple[RatPoly, ...]:
    u, _ = _cached_u_v(order)
    return tuple(log_expansion(list(u[1:])))


@lru_cache(maxsize=None)
def _cached_m(order: int, c: Fraction) -> tuple[RatPoly, ...]:
    u, v = _cached_u_v(order)
    # w_k = c*t*u_{k-1} + v_k
    w = [RatPoly({1: c}) * u[k - 1] + v[k] for k in range(1, order + 1)]
    return tuple(log_expansion(w))


def build_debye_table(n: int, robin_params: Iterable[Rational] = ()) -> DebyeTable:
    """Exact Debye polynomials through order 2n, n >= 1.

    ``robin_params`` lists the Robin constants c for which the M_{n,c}
    family is materialised.  The exact recursion products are cached per
    order, so tables for different Robin sets share the u/v/D work.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the supported cap {MAX_ORDER}")
    order = 2 * n
    u, v = _cached_u_v(order)
    table = DebyeTable(
        order=n,
        u_polys=u,
        v_polys=v,
        d_polys=_cached_d(order),
        m_polys={Fraction(c): _cached_m(order, Fraction(c)) for c in robin_params},
    )
    _check_structure(table)
    return table


def _check_structure(table: DebyeTable) -> None:
    # D_n and M_{n,c} may only contain exponents n, n+2, ..., 3n.
    for n in range(1, 2 * table.order + 1):
        allowed = {n + 2 * k for k in range(n + 1)}
        families = [table.d_polys[n - 1]]
        families += [polys[n - 1] for polys in table.m_polys.values()]
        for poly in families:
            if not set(poly.exponents()) <= allowed:
                raise AssertionError(f"order-{n} Debye polynomial has stray exponents")


@lru_cache(maxsize=None)
def _cached_table(n: int, robin_params: frozenset[Fraction]) -> DebyeTable:
    return build_debye_table(n, sorted(robin_params))


def debye_table(n: int, robin_params: Iterable[Rational] = ()) -> DebyeTable:
    """Cached variant of :func:`build_debye_table`."""
    return _cached_table(n, frozenset(Fraction(c) for c in robin_params))


def coeff_sums(table: DebyeTable, c: Rational) -> list[tuple[Fraction, Fraction]]:
    """(sum_k d_{2i,k}, sum_k m_{2i,k}(c)) for i = 1..N.

    The exact values are 0 and -c^(2i)/(2i); freeenergy and zetazero use
    these identities, and returning the sums straight from the table lets
    callers verify them.
    """
    c = Fraction(c)
    out = []
    for i in range(1, table.order + 1):
        d_sum = sum(table.d_row(2 * i), Fraction(0))
        m_sum = sum(table.m_row(2 * i, c), Fraction(0))
        out.append((d_sum, m_sum))
    return out
