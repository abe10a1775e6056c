"""Floating-point special functions for the zeta and free-energy assemblies.

Scope and accuracy targets:

* ``lgamma`` / ``digamma``: relative error <= 1e-13 for x > 0.
* ``hurwitz``: Hurwitz zeta by Euler-Maclaurin, relative error <= 1e-11.
* ``hurwitz_deriv_neg_int``: d/ds zeta_H(s; chi) at s = -j by term-wise
  differentiated Euler-Maclaurin (finite differences in s would lose six
  digits or more), absolute/relative error <= 1e-10.
* ``bessel_log``: log I_nu, log K_nu and the logarithmic derivative ratios
  for 1/2 <= nu <= 1e4, 1e-6 <= x <= 1e4, relative error <= 1e-10 with no
  overflow or underflow.  Three regimes:

    - nu >= 50: large-order (Debye) uniform asymptotics built from the
      exact u_k/v_k polynomials of :mod:`casimirshell.debye`;
    - x <= 2:  ascending series for I (log form, all terms positive),
      Lentz continued fraction for I_{nu+1}/I_nu, Temme's series for
      K_mu/K_{mu+1} with a log-scaled upward recurrence in the order;
    - otherwise: scipy's exponentially scaled ``ive``/``kve``.

  The Wronskian I_nu(x) K_nu'(x) - I_nu'(x) K_nu(x) = -1/x polices the
  regime seams (see :meth:`BesselLogPair.wronskian_residual`).
* ``lngamma_moment_integral``: adaptive quadrature of the log-gamma
  moments appearing in the zeta'(0) reduction, absolute error <= 1e-11.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate as _integrate
from scipy import special as _sc

from .debye import debye_table
from .exactnum import bernoulli_number
from .exactnum import hurwitz_neg_int as hurwitz_exact_neg_int

__all__ = [
    "Accuracy",
    "BesselLogPair",
    "DEFAULT_ACCURACY",
    "bessel_log",
    "digamma",
    "digamma_half_shifted",
    "harmonic",
    "hurwitz",
    "hurwitz_deriv_neg_int",
    "lgamma",
    "lngamma_moment_integral",
    "riemann_zeta",
    "zeta_prime_neg_even",
]


@dataclass(frozen=True)
class Accuracy:
    """Error budget knobs shared by the iterative routines."""

    rel_tol: float = 1e-12
    abs_floor: float = 1e-300
    max_terms: int = 4096

    def __post_init__(self) -> None:
        if not (0.0 < self.rel_tol < 1e-6):
            raise ValueError("rel_tol must lie in (0, 1e-6)")
        if self.max_terms < 64:
            raise ValueError("max_terms must be >= 64")


DEFAULT_ACCURACY = Accuracy()


def lgamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError("lgamma requires x > 0")
    return math.lgamma(x)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError("digamma requires x > 0")
    return float(_sc.digamma(x))


def harmonic(n: int) -> Fraction:
    """Exact harmonic number H_n = psi(n+1) - psi(1)."""
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def digamma_half_shifted(q: int) -> float:
    """psi(q - 1/2) - psi(1) for integer q >= 1, via the half-integer
    recurrence off psi(1/2) = -gamma - 2 log 2."""
    if q < 1:
        raise ValueError("q must be >= 1")
    acc = -2.0 * math.log(2.0)
    for r in range(1, q):
        acc += 2.0 / (2 * r - 1)
    return acc


# ---------------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin
# ---------------------------------------------------------------------------


def _poch_with_deriv(s: float, q: int) -> tuple[float, float]:
    """(s)_q = s(s+1)...(s+q-1) and its s-derivative (safe at zero factors)."""
    val, dval = 1.0, 0.0
    for t in range(q):
        f = s + t
        dval = dval * f + val
        val *= f
    return val, dval


def _hurwitz_em(s: float, chi: float, want_deriv: bool, acc: Accuracy):
    """Euler-Maclaurin evaluation of zeta_H(s; chi) and optionally its
    s-derivative.  Valid for any real s != 1.

    The direct-sum cutoff is kept deliberately small: the Bernoulli
    corrections at negative integer s grow like (cutoff+chi)^(|s|+1) and
    cancel against the direct part, so a large cutoff destroys precision.
    All pieces are accumulated with compensated summation.
    """
    if chi <= 0.0:
        raise ValueError("chi must be positive")
    if s == 1.0:
        raise ValueError("zeta_H has a pole at s = 1")

    n_direct = max(6, int(math.ceil(7.0 - chi)))
    terms_v: list[float] = []
    terms_d: list[float] = []
    for n in range(n_direct):
        base = n + chi
        p = base ** (-s)
        terms_v.append(p)
        if want_deriv:
            terms_d.append(-math.log(base) * p)

    a = n_direct + chi
    log_a = math.log(a)
    a_ms = a ** (-s)
    terms_v.append(a * a_ms / (s - 1.0))  # integral part
    terms_v.append(0.5 * a_ms)
    if want_deriv:
        terms_d.append(a * a_ms * (-log_a / (s - 1.0) - 1.0 / (s - 1.0) ** 2))
        terms_d.append(-0.5 * log_a * a_ms)

    prev = math.inf
    for r in range(1, 40):
        b2r = float(bernoulli_number(2 * r)) / math.factorial(2 * r)
        poch, dpoch = _poch_with_deriv(s, 2 * r - 1)
        weight = a ** (-s - 2 * r + 1)
        terms_v.append(b2r * poch * weight)
        mag = abs(terms_v[-1])
        if want_deriv:
            terms_d.append(b2r * weight * (dpoch - poch * log_a))
            mag = max(mag, abs(terms_d[-1]))
        if mag < 1e-18 and r >= 4:
            break
        if mag > prev and r >= 8:  # asymptotic tail started to diverge
            break
        prev = mag
    value = math.fsum(terms_v)
    return value, (math.fsum(terms_d) if want_deriv else None)


def hurwitz(s: float, chi: float, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """Analytic continuation of zeta_H(s; chi) = sum (n+chi)^(-s), s != 1."""
    s = float(s)
    chi = float(chi)
    if s <= 0.0 and s == round(s):
        # rational window: exact Bernoulli-polynomial value
        return float(hurwitz_exact_neg_int(int(-s), Fraction(chi)))
    value, _ = _hurwitz_em(s, chi, False, acc)
    return value


def hurwitz_deriv_neg_int(j: int, chi: float, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """d/ds zeta_H(s; chi) evaluated at s = -j, integer j >= 0.

    At j = 0 this reduces to Lerch's identity
    zeta_H'(0; chi) = log Gamma(chi) - log(2 pi)/2, which the tests use as
    an independent oracle.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    _, deriv = _hurwitz_em(-float(j), float(chi), True, acc)
    return deriv


def riemann_zeta(s: float) -> float:
    """Riemann zeta for s > 1 (all in-scope uses are on the real axis)."""
    if s <= 1.0:
        raise ValueError("riemann_zeta is only needed for s > 1")
    return float(_sc.zeta(s, 1.0))


def zeta_prime_neg_even(k: int) -> float:
    """zeta_R'(-k) for even k >= 2 from the differentiated functional
    equation: zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2 pi)^(2n)).

    Serves as the independent route to the zeta_R'-weighted table entries.
    """
    if k < 2 or k % 2:
        raise ValueError("k must be even and >= 2")
    n = k // 2
    return (-1.0) ** n * math.factorial(k) * riemann_zeta(k + 1) / (2.0 * (2.0 * math.pi) ** k)


# ---------------------------------------------------------------------------
# Modified Bessel functions with logarithmic scaling
# ---------------------------------------------------------------------------

_DEBYE_NU = 50.0
_DEBYE_TERMS = 12
_SMALL_X = 2.0


@dataclass(frozen=True)
class BesselLogPair:
    """log I_nu(x), log K_nu(x) and the ratios I'/I, K'/K at one point."""

    nu: float
    x: float
    ln_i: float
    ln_k: float
    i_ratio: float
    k_ratio: float

    def wronskian_residual(self) -> float:
        """|x (I'/I - K'/K) I K - 1|; exact zero by the Wronskian."""
        return abs(
            self.x * (self.i_ratio - self.k_ratio) * math.exp(self.ln_i + self.ln_k) - 1.0
        )


@lru_cache(maxsize=1)
def _debye_float_polys() -> tuple[list[np.ndarray], list[np.ndarray]]:
    """u_k, v_k as dense float arrays in t^2: u_k(t) = t^k * P_k(t^2)."""
    table = debye_table(max(_DEBYE_TERMS // 2 + 1, 6))
    us, vs = [], []
    for k in range(_DEBYE_TERMS + 1):
        for polys, out in ((table.u_polys, us), (table.v_polys, vs)):
            poly = polys[k]
            coeffs = np.zeros(k + 1)
            for e, c in poly.coeffs.items():
                coeffs[(e - k) // 2] = float(c)
            out.append(coeffs)
    return us, vs


def _poly_in_t2(coeffs: np.ndarray, t2):
    acc = 0.0 * t2 + coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * t2 + c
    return acc


def _debye_sums(nu: float, t):
    """S_u(+-), S_v(+-): the four sign-alternating Debye series in 1/nu."""
    us, vs = _debye_float_polys()
    t2 = t * t
    su_p = su_m = sv_p = sv_m = 1.0 + 0.0 * t2
    tk = t + 0.0 * t2
    inv_nu = 1.0 / nu
    nu_k = inv_nu
    for k in range(1, _DEBYE_TERMS + 1):
        uk = _poly_in_t2(us[k], t2) * tk * nu_k
        vk = _poly_in_t2(vs[k], t2) * tk * nu_k
        if k % 2:
            su_p += uk
            su_m -= uk
            sv_p += vk
            sv_m -= vk
        else:
            su_p += uk
            su_m += uk
            sv_p += vk
            sv_m += vk
        tk = tk * t
        nu_k *= inv_nu
    return su_p, su_m, sv_p, sv_m


def _bessel_debye(nu: float, x):
    z = x / nu
    w = np.sqrt(1.0 + z * z)
    t = 1.0 / w
    eta = w + np.log(z) - np.log1p(w)
    su_p, su_m, sv_p, sv_m = _debye_sums(nu, t)
    ln_i = -0.5 * math.log(2.0 * math.pi * nu) + nu * eta - 0.5 * np.log(w) + np.log(su_p)
    ln_k = 0.5 * math.log(math.pi / (2.0 * nu)) - nu * eta - 0.5 * np.log(w) + np.log(su_m)
    i_ratio = (w / z) * (sv_p / su_p)
    k_ratio = -(w / z) * (sv_m / su_m)
    return ln_i, ln_k, i_ratio, k_ratio


def _ln_i_series(nu: float, x: float) -> float:
    """log I_nu(x) by the ascending series; exact-positive terms, so no
    cancellation.  Intended for x <= 2 where ~25 terms suffice."""
    q = 0.25 * x * x
    s = 1.0
    term = 1.0
    for k in range(1, 400):
        term *= q / (k * (nu + k))
        s += term
        if term < 1e-17 * s:
            break
    return nu * math.log(0.5 * x) - math.lgamma(nu + 1.0) + math.log(s)


def _i_ratio_cf1(nu: float, x: float) -> float:
    """I_nu'(x)/I_nu(x) via the Lentz continued fraction for I_{nu+1}/I_nu."""
    tiny = 1e-290
    f = tiny
    c = f
    d = 0.0
    for k in range(1, 20000):
        b = 2.0 * (nu + k) / x
        d = b + d
        if d == 0.0:
            d = tiny
        c = b + 1.0 / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return nu / x + f


# odd Taylor coefficients of 1/Gamma(1+x); only needed where the
# symmetric difference below would cancel (|mu| ~ 0)
_INV_GAMMA_ODD = (
    0.5772156649015328606,
    -0.0420026350340952355,
    -0.0421977345555443367,
    0.0072189432466630995,
)


def _temme_k_pair(mu: float, x: float) -> tuple[float, float]:
    """K_mu(x), K_{mu+1}(x) for |mu| <= 1/2 and x <= 2 (Temme's series)."""
    gp = 1.0 / math.gamma(1.0 + mu)
    gm = 1.0 / math.gamma(1.0 - mu)
    if abs(mu) > 1e-3:
        gam1 = (gm - gp) / (2.0 * mu)
    else:
        mu2 = mu * mu
        gam1 = -(
            _INV_GAMMA_ODD[0]
            + mu2 * (_INV_GAMMA_ODD[1] + mu2 * (_INV_GAMMA_ODD[2] + mu2 * _INV_GAMMA_ODD[3]))
        )
    gam2 = 0.5 * (gm + gp)
    d = -math.log(0.5 * x)
    e = mu * d
    pimu = math.pi * mu
    fact = pimu / math.sin(pimu) if abs(pimu) > 1e-14 else 1.0
    sinhc = math.sinh(e) / e if abs(e) > 1e-14 else 1.0
    f = fact * (gam1 * math.cosh(e) + gam2 * sinhc * d)
    p = 0.5 * math.exp(e) / gp
    q = 0.5 * math.exp(-e) / gm
    c = 1.0
    x2_4 = 0.25 * x * x
    sum_f = f
    sum_h = p
    for k in range(1, 400):
        f = (k * f + p + q) / (k * k - mu * mu)
        p /= k - mu
        q /= k + mu
        c *= x2_4 / k
        del_f = c * f
        sum_f += del_f
        sum_h += c * (p - k * f)
        if abs(del_f) < 1e-17 * abs(sum_f):
            break
    return sum_f, 2.0 * sum_h / x


def _temme_ln_k(nu: float, x: float) -> tuple[float, float]:
    """(log K_nu(x), K_{nu+1}/K_nu) for x <= 2, via the scaled upward
    recurrence from Temme's (K_mu, K_{mu+1})."""
    n = int(math.floor(nu + 0.5))
    mu = nu - n
    km, kc = _temme_k_pair(mu, x)  # K_mu, K_{mu+1}
    if n == 0:
        return math.log(km), kc / km
    ln_scale = 0.0
    for m in range(1, n):
        km, kc = kc, km + (2.0 * (mu + m) / x) * kc
        if kc > 1e250:
            km *= 1e-250
            kc *= 1e-250
            ln_scale += 250.0 * math.log(10.0)
    # kc = K_nu, km = K_{nu-1}, both scaled by exp(-ln_scale)
    k_next = km + (2.0 * nu / x) * kc
    return math.log(kc) + ln_scale, k_next / kc


def bessel_log(nu: float, x: float, acc: Accuracy = DEFAULT_ACCURACY) -> BesselLogPair:
    """Log-scaled I_nu, K_nu and their logarithmic derivatives.

    Covers 0 <= nu <= 1e4 (callers never need nu below 1/2), 0 < x <= 1e4,
    without overflow or underflow of any intermediate.
    """
    if x <= 0.0:
        raise ValueError("x must be positive")
    if nu < 0.0:
        raise ValueError("nu must be non-negative")
    if nu >= _DEBYE_NU:
        ln_i, ln_k, i_ratio, k_ratio = _bessel_debye(nu, x)
        return BesselLogPair(nu, x, float(ln_i), float(ln_k), float(i_ratio), float(k_ratio))
    if x <= _SMALL_X:
        ln_i = _ln_i_series(nu, x)
        i_ratio = _i_ratio_cf1(nu, x)
        ln_k, k_next_ratio = _temme_ln_k(nu, x)
        return BesselLogPair(nu, x, ln_i, ln_k, i_ratio, nu / x - k_next_ratio)
    iv0 = float(_sc.ive(nu, x))
    iv1 = float(_sc.ive(nu + 1.0, x))
    kv0 = float(_sc.kve(nu, x))
    kv1 = float(_sc.kve(nu + 1.0, x))
    return BesselLogPair(
        nu,
        x,
        math.log(iv0) + x,
        math.log(kv0) - x,
        nu / x + iv1 / iv0,
        nu / x - kv1 / kv0,
    )


def bessel_log_arrays(nu: float, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised ``bessel_log`` over an array of arguments at fixed order.

    Returns (ln_i, ln_k, i_ratio, k_ratio) arrays.  Same regime map as the
    scalar routine; the x <= 2 block falls back to scalar evaluation since
    Temme's series and the continued fraction are short there anyway.
    """
    xs = np.asarray(xs, dtype=float)
    if nu >= _DEBYE_NU:
        return _bessel_debye(nu, xs)
    ln_i = np.empty_like(xs)
    ln_k = np.empty_like(xs)
    i_ratio = np.empty_like(xs)
    k_ratio = np.empty_like(xs)
    small = xs <= _SMALL_X
    if small.any():
        for idx in np.nonzero(small)[0]:
            pair = bessel_log(nu, float(xs[idx]))
            ln_i[idx] = pair.ln_i
            ln_k[idx] = pair.ln_k
            i_ratio[idx] = pair.i_ratio
            k_ratio[idx] = pair.k_ratio
    big = ~small
    if big.any():
        xb = xs[big]
        iv0 = _sc.ive(nu, xb)
        iv1 = _sc.ive(nu + 1.0, xb)
        kv0 = _sc.kve(nu, xb)
        kv1 = _sc.kve(nu + 1.0, xb)
        ln_i[big] = np.log(iv0) + xb
        ln_k[big] = np.log(kv0) - xb
        i_ratio[big] = nu / xb + iv1 / iv0
        k_ratio[big] = nu / xb - kv1 / kv0
    return ln_i, ln_k, i_ratio, k_ratio


# ---------------------------------------------------------------------------
# Log-gamma moment integrals (zeta'(0) reduction)
# ---------------------------------------------------------------------------


def lngamma_moment_integral(j: int, c: float, dimension: int, sign: int) -> float:
    """int_0^c u^(j-1) log Gamma(D/2 + sign*u) du by adaptive quadrature.

    Needs j >= 1 (the j = 0 moments never occur: they carry an explicit
    factor j in the reduction) and |c| < D/2 so the integrand stays in the
    domain of log Gamma.  ``c`` may be negative; the integral is signed.
    """
    if j < 1:
        raise ValueError("moment order j must be >= 1")
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    half_d = 0.5 * dimension
    if abs(c) >= half_d:
        raise ValueError("|c| must be smaller than D/2")
    if c == 0.0:
        return 0.0

    def integrand(u: float) -> float:
        return u ** (j - 1) * math.lgamma(half_d + sign * u)

    value, _err = _integrate.quad(integrand, 0.0, c, epsabs=1e-13, epsrel=1e-13, limit=200)
    return value
