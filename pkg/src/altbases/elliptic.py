"""Complete elliptic integrals, singular moduli and the cubic/sextic base parameters.

Conventions: ``k_r`` is the singular modulus with K(k_r')/K(k_r) = sqrt(r),
the nome is q = exp(-pi sqrt(r)), ``alpha(r)`` is the cubic singular value
and ``beta(r)`` the signature-6 value obtained from alpha(3r).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .precision import DomainError, PrecisionContext, agm, hyp2f1
from .theta import Nome, borwein_a, borwein_b, borwein_c, theta_null

__all__ = [
    "ModularPoint",
    "BaseParameters",
    "MultiplierReport",
    "elliptic_K",
    "singular_modulus",
    "modulus_from_theta",
    "landen_descend",
    "alpha",
    "beta",
    "z_of_r",
    "base_parameters",
    "multiplier_m3",
]

log = logging.getLogger(__name__)

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)
SIXTH = Fraction(1, 6)
FIVE_SIXTHS = Fraction(5, 6)


@dataclass(frozen=True)
class ModularPoint:
    r: object
    q: object
    k: object
    k_comp: object
    K: object
    K_comp: object

    @property
    def nome(self) -> Nome:
        return Nome(self.q, self.r)


@dataclass(frozen=True)
class BaseParameters:
    alpha: object
    beta: object
    z: object


def elliptic_K(k, ctx: PrecisionContext):
    """K(k) = pi / (2 agm(1, sqrt(1 - k^2))) for 0 < k < 1."""
    k = ctx.real(k)
    if not 0 < k < 1:
        raise DomainError("elliptic_K needs 0 < k < 1")
    return ctx.pi / (2 * agm(1, ctx.mp.sqrt((1 - k) * (1 + k)), ctx))


def _K_from_comp(kp, ctx):
    # K(k) evaluated from k' directly; avoids forming 1 - k^2 when k is near 1
    return ctx.pi / (2 * agm(1, kp, ctx))


def _ratio(k, kp, ctx):
    return _K_from_comp(k, ctx) / _K_from_comp(kp, ctx)


def _solve_modulus(sr, ctx: PrecisionContext):
    """Return (k, k') with K(k')/K(k) = sr for sr >= 1, i.e. k <= 1/sqrt(2).

    Bisection in log k (to ten digits) followed by secant polish.  The ratio
    is strictly decreasing in k, and for k -> 0 it behaves like
    log(16/k^2)/pi, which gives the initial bracket.
    """
    mp = ctx.mp

    def kk(s):
        k = mp.exp(s)
        return k, mp.sqrt((1 - k) * (1 + k))

    def f(s):
        k, kp = kk(s)
        return _ratio(k, kp, ctx) - sr

    hi = -mp.log(2) / 2
    lo = mp.log(4) - ctx.pi * sr / 2 - 2
    while f(lo) <= 0:
        lo -= 2
    flo, fhi = f(lo), f(hi)
    if fhi > 0:
        raise AssertionError("bracket failure in singular_modulus")
    if fhi == 0:
        return kk(hi)
    while hi - lo > mp.mpf(10) ** -10:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm > 0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    s0, s1, f0, f1 = lo, hi, flo, fhi
    tol = ctx.work_eps
    for _ in range(200):
        if f1 == f0:
            break
        s2 = s1 - f1 * (s1 - s0) / (f1 - f0)
        s0, f0 = s1, f1
        s1, f1 = s2, f(s2)
        if abs(s1 - s0) < tol:
            break
    return kk(s1)


@lru_cache(maxsize=512)
def singular_modulus(r, ctx: PrecisionContext) -> ModularPoint:
    """ModularPoint for r > 0: k_r, k_r', K(k_r), K(k_r'), q = exp(-pi sqrt(r))."""
    mp = ctx.mp
    rr = ctx.real(r)
    if rr <= 0:
        raise DomainError("singular_modulus needs r > 0")
    sr = mp.sqrt(rr)
    if rr == 1:
        k = kp = 1 / mp.sqrt(2)
    elif rr > 1:
        k, kp = _solve_modulus(sr, ctx)
    else:
        kp, k = _solve_modulus(1 / sr, ctx)
    K = _K_from_comp(kp, ctx)
    Kp = _K_from_comp(k, ctx)
    return ModularPoint(r=r, q=ctx.nome(r), k=k, k_comp=kp, K=K, K_comp=Kp)


def modulus_from_theta(nome, ctx: PrecisionContext):
    """k = theta_2(q)^2 / theta_3(q)^2."""
    return theta_null(2, nome, ctx) ** 2 / theta_null(3, nome, ctx) ** 2


def landen_descend(k, ctx: PrecisionContext):
    """(1 - k') / (1 + k'); maps k_r to k_{4r}."""
    k = ctx.real(k)
    if not 0 < k < 1:
        raise DomainError("landen_descend needs 0 < k < 1")
    kp = ctx.mp.sqrt((1 - k) * (1 + k))
    # (1 - k')/(1 + k') = k^2 / (1 + k')^2 without cancellation for small k
    return k * k / (1 + kp) ** 2


@lru_cache(maxsize=512)
def alpha(r, ctx: PrecisionContext):
    """Cubic singular value (c(q1)/a(q1))**3 with q1 = exp(-pi sqrt(4r/3))."""
    mp = ctx.mp
    rr = ctx.real(r)
    if rr <= 0:
        raise DomainError("alpha needs r > 0")
    if rr == 1:
        return mp.mpf(1) / 2
    if rr < 1:
        # alpha(1/r) = 1 - alpha(r) keeps the nome small
        return 1 - _alpha_series(1 / rr, ctx)
    return _alpha_series(rr, ctx)


def _alpha_series(rr, ctx):
    q1 = ctx.mp.exp(-ctx.pi * ctx.mp.sqrt(4 * rr / 3))
    return (borwein_c(q1, ctx) / borwein_a(q1, ctx)) ** 3


def _scaled(r, factor):
    if isinstance(r, (int, Fraction)):
        return Fraction(r) * factor
    return r * factor


def _reciprocal_scaled(r, factor):
    if isinstance(r, (int, Fraction)):
        return Fraction(factor) / Fraction(r)
    return factor / r


def _beta_from_alpha(a):
    return (1 - (1 - 20 * a - 8 * a * a) / (1 + 8 * a) ** 1.5) / 2


def beta(r, ctx: PrecisionContext):
    """beta_r = 1/2 - (1 - 20 a - 8 a^2) / (2 (1 + 8a)^(3/2)) with a = alpha(3r).

    For r < 1/9 the numerator cancels badly, so the work is repeated with
    doubled guard digits.
    """
    rr = ctx.real(r)
    if rr <= 0:
        raise DomainError("beta needs r > 0")
    if rr < ctx.real(Fraction(1, 9)):
        wide = ctx.with_digits(ctx.decimal_digits, 2 * ctx.guard_digits)
        a = alpha(_scaled(r, 3), wide)
        return ctx.real(_beta_from_alpha(a))
    a = alpha(_scaled(r, 3), ctx)
    return _beta_from_alpha(a)


def z_of_r(r, ctx: PrecisionContext):
    """z_{3r} = a(q^2) with q = exp(-pi sqrt(r))."""
    q = ctx.nome(r)
    return borwein_a(q * q, ctx)


def base_parameters(r, ctx: PrecisionContext) -> BaseParameters:
    """alpha_r, beta_r and z_r = 2F1(1/3, 2/3; 1; alpha_r)."""
    a = alpha(r, ctx)
    return BaseParameters(alpha=a, beta=beta(r, ctx), z=hyp2f1(THIRD, TWO_THIRDS, 1, a, ctx))


@dataclass(frozen=True)
class MultiplierReport:
    """Both sides of the claimed degree-3 multiplier under each reading of alpha'."""

    r: object
    lhs: object
    rhs_complement: object
    rhs_inverse: object
    residual_complement: object
    residual_inverse: object

    @property
    def best_reading(self) -> str:
        if self.residual_complement <= self.residual_inverse:
            return "1 - alpha(3r)"
        return "alpha(3/r)"

    @property
    def lhs_inverse(self):
        return 1 / self.lhs


def multiplier_m3(r, ctx: PrecisionContext) -> MultiplierReport:
    """2F1(1/6,5/6;1;beta_9r)/2F1(1/6,5/6;1;beta_r) against sqrt(3r)((1+8a')/(1+8a))^(1/4).

    ``a = alpha(3r)``; a' is read both as 1 - a and as alpha(3/r).
    Nothing is asserted: the report carries both residuals.
    """
    mp = ctx.mp
    rr = ctx.real(r)
    a3 = alpha(_scaled(r, 3), ctx)
    lhs = hyp2f1(SIXTH, FIVE_SIXTHS, 1, beta(_scaled(r, 9), ctx), ctx) / hyp2f1(
        SIXTH, FIVE_SIXTHS, 1, beta(r, ctx), ctx
    )
    pref = mp.sqrt(3 * rr)
    rhs_c = pref * mp.root((1 + 8 * (1 - a3)) / (1 + 8 * a3), 4)
    a_inv = alpha(_reciprocal_scaled(r, 3), ctx)
    rhs_i = pref * mp.root((1 + 8 * a_inv) / (1 + 8 * a3), 4)
    rep = MultiplierReport(r, lhs, rhs_c, rhs_i, abs(lhs - rhs_c), abs(lhs - rhs_i))
    log.info("multiplier_m3(r=%s): lhs=%s, best reading %s", r, mp.nstr(lhs, 15), rep.best_reading)
    return rep
