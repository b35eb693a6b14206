"""The quartic Q(v), the constant lambda_r and closed forms built on them.

``QUARTIC`` is P(u, v) with P(Q(v), v) = 0.  For each v in (0, 1) exactly one
positive real root u gives -Q'(v)/Q(v) > 0, and that root is the branch for
which (2K/pi) k k' lambda reproduces the cubic theta series a(q).  The root is
the smaller real root for v > v* and the larger one for v < v*, where
v* = 17 - 12 sqrt(2) = k_4^2.  At v* the two real roots meet in a node at
u* = 243 + 162 sqrt(3); there P_u = P_v = 0 and the branch slope comes from
the tangent cone P_uu s^2 + 2 P_uv s + P_vv = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .elliptic import _scaled, alpha, beta, landen_descend, singular_modulus
from .polynomial import BivariatePolyZZ
from .precision import DomainError, PrecisionContext
from .theta import theta_null

__all__ = [
    "QUARTIC",
    "BranchError",
    "LambdaValue",
    "JCubicReport",
    "BetaQuarticReport",
    "eval_Q",
    "eval_Qprime",
    "quartic_roots",
    "lambda_at_modulus",
    "lambda_r",
    "a0_closed",
    "a0_q2_closed",
    "c0_closed",
    "b0_closed",
    "alpha_from_moduli",
    "j_invariant",
    "j_cubic_x",
    "beta_quartic_t",
]

QUARTIC = BivariatePolyZZ.parse(
    """
    -16*u**3 + 387420489*v + 19131876*u*v + 196830*u**2*v + 84*u**3*v + u**4*v
    - 1549681956*v**2 - 76527504*u*v**2 - 787320*u**2*v**2 - 12480*u**3*v**2 - 4*u**4*v**2
    + 2324522934*v**3 + 114791256*u*v**3 + 1180980*u**2*v**3 - 40712*u**3*v**3 + 6*u**4*v**3
    - 1549681956*v**4 - 76527504*u*v**4 - 787320*u**2*v**4 - 12480*u**3*v**4 - 4*u**4*v**4
    + 387420489*v**5 + 19131876*u*v**5 + 196830*u**2*v**5 + 84*u**3*v**5 + u**4*v**5
    - 16*u**3*v**6
    """
)
_PU = QUARTIC.diff_u()
_PV = QUARTIC.diff_v()
_PUU = _PU.diff_u()
_PUV = _PU.diff_v()
_PVV = _PV.diff_v()


class BranchError(ArithmeticError):
    """No root of the quartic satisfies the branch rule, or the branch is singular."""

    def __init__(self, message, roots=()):
        super().__init__(message)
        self.roots = list(roots)


@dataclass(frozen=True)
class LambdaValue:
    lam: object
    Q_at: object
    Qprime_at: object


def _node(ctx):
    mp = ctx.mp
    return 17 - 12 * mp.sqrt(2), 243 + 162 * mp.sqrt(3)


def quartic_roots(v, ctx: PrecisionContext) -> list:
    """All four complex roots of P(., v), Newton-polished."""
    mp = ctx.mp
    coeffs = QUARTIC.coefficients_in_u(ctx.real(v))
    roots = mp.polyroots(coeffs, maxsteps=400, extraprec=2 * mp.prec)
    out = []
    for z in roots:
        for _ in range(8):
            d = _PU(z, v)
            if d == 0:
                break
            step = QUARTIC(z, v) / d
            z -= step
            if abs(step) <= ctx.work_eps * abs(z):
                break
        out.append(z)
    return out


def _branch(v, ctx: PrecisionContext, widened: bool = False):
    """(Q(v), Q'(v)) on the theta branch."""
    mp = ctx.mp
    v = ctx.real(v)
    if not 0 < v < 1:
        raise DomainError("Q is defined for 0 < v < 1")
    vstar, ustar = _node(ctx)
    if abs(v - vstar) < ctx.eps:
        A, B, C = _PUU(ustar, vstar), 2 * _PUV(ustar, vstar), _PVV(ustar, vstar)
        disc = mp.sqrt(B * B - 4 * A * C)
        slopes = [(-B + disc) / (2 * A), (-B - disc) / (2 * A)]
        good = [s for s in slopes if -s / ustar > 0]
        if len(good) != 1:
            raise BranchError(f"node at v*={vstar}: slopes {slopes}", [ustar, ustar])
        return ustar, good[0]
    if not widened and abs(v - vstar) < mp.mpf(10) ** -10:
        # near the node the two real roots almost coincide; spend more digits
        wide = ctx.with_digits(ctx.decimal_digits, 2 * ctx.guard_digits + ctx.decimal_digits)
        Q, Qp = _branch(wide.real(v), wide, widened=True)
        return ctx.real(Q), ctx.real(Qp)
    roots = quartic_roots(v, ctx)
    cands = []
    imag_tol = mp.mpf(10) ** (-(ctx.decimal_digits // 2))
    for z in roots:
        if abs(mp.im(z)) > imag_tol * max(1, abs(z)):
            continue
        u = mp.re(z)
        pu = _PU(u, v)
        if u <= 0 or pu == 0:
            continue
        qp = -_PV(u, v) / pu
        if -qp / u > 0:
            cands.append((u, qp))
    if len(cands) != 1:
        raise BranchError(
            f"expected one positive root with -Q'/Q > 0 at v={mp.nstr(v, 20)}, found {len(cands)}",
            roots,
        )
    return cands[0]


@lru_cache(maxsize=512)
def _branch_cached(v, ctx):
    return _branch(v, ctx)


def eval_Q(v, ctx: PrecisionContext):
    """Q(v): the theta-branch root of the quartic P(u, v) = 0."""
    return _branch_cached(ctx.real(v), ctx)[0]


def eval_Qprime(v, ctx: PrecisionContext):
    """dQ/dv = -P_v / P_u on the theta branch."""
    return _branch_cached(ctx.real(v), ctx)[1]


def lambda_at_modulus(k, ctx: PrecisionContext) -> LambdaValue:
    """lambda = sqrt(-Q'(k^2)/Q(k^2))."""
    k = ctx.real(k)
    Q, Qp = _branch_cached(k * k, ctx)
    rad = -Qp / Q
    if rad < 0:
        raise BranchError(f"negative radicand: Q={Q}, Q'={Qp}", [Q])
    return LambdaValue(ctx.mp.sqrt(rad), Q, Qp)


def lambda_r(r, ctx: PrecisionContext) -> LambdaValue:
    return lambda_at_modulus(singular_modulus(r, ctx).k, ctx)


def _lambda_4r(point, ctx):
    # lambda_{4r} from the Landen image of k_r
    return lambda_at_modulus(landen_descend(point.k, ctx), ctx).lam


def _prefactor(point, ctx):
    return 2 * point.K / ctx.pi


def a0_closed(r, ctx: PrecisionContext):
    """a(q) = (2K/pi) k k' lambda_r."""
    P = singular_modulus(r, ctx)
    return _prefactor(P, ctx) * P.k * P.k_comp * lambda_r(r, ctx).lam


def a0_q2_closed(r, ctx: PrecisionContext):
    """a(q^2) = (2K/pi) ((1 - k^2 + k^4)/(1 + 8 alpha_3r))^(1/4)."""
    P = singular_modulus(r, ctx)
    k2 = P.k**2
    a3 = alpha(_scaled(r, 3), ctx)
    return _prefactor(P, ctx) * ctx.mp.root((1 - k2 + k2 * k2) / (1 + 8 * a3), 4)


def _c0_b0_factor(r, ctx):
    P = singular_modulus(r, ctx)
    kp = P.k_comp
    return _prefactor(P, ctx) * (1 - kp) / (1 + kp) * ctx.mp.sqrt(kp) * _lambda_4r(P, ctx)


def c0_closed(r, ctx: PrecisionContext):
    """c(q^2) = (2K/pi) ((1-k')/(1+k')) sqrt(k') alpha_3r^(1/3) lambda_4r."""
    return _c0_b0_factor(r, ctx) * ctx.mp.cbrt(alpha(_scaled(r, 3), ctx))


def b0_closed(r, ctx: PrecisionContext):
    """b(q^2) = (2K/pi) ((1-k')/(1+k')) sqrt(k') (1 - alpha_3r)^(1/3) lambda_4r."""
    return _c0_b0_factor(r, ctx) * ctx.mp.cbrt(1 - alpha(_scaled(r, 3), ctx))


def alpha_from_moduli(r, ctx: PrecisionContext):
    """alpha_3r recovered from k_r, k_r' and lambda_4r alone."""
    P = singular_modulus(r, ctx)
    k2, kp = P.k**2, P.k_comp
    lam4 = _lambda_4r(P, ctx)
    return (-1 + (1 - k2 + k2 * k2) * (1 + kp) ** 4 / ((1 - kp) ** 4 * kp**2 * lam4**4)) / 8


def j_invariant(r, ctx: PrecisionContext):
    """j_r = 256 (1 - (k k')^2)^3 / (k k')^4."""
    P = singular_modulus(r, ctx)
    m = (P.k * P.k_comp) ** 2
    return 256 * (1 - m) ** 3 / (m * m)


@dataclass(frozen=True)
class JCubicReport:
    """x = theta_3^8 / (2 d8) with d8 = theta_2^8 + theta_3^8 + theta_4^8.

    ``residual`` is C x (1-x)^2 - 1 for C = j/256.  The cubic is solved by
    X = 2 theta_3^8 / d8 = 4x (since j/256 = y^3/(1-y)^2 with y = d8/(2 theta_3^8));
    ``residual_4x`` records C X (1-X)^2 - 1 for comparison.
    """

    r: object
    x: object
    C: object
    residual: object
    residual_4x: object


def j_cubic_x(r, ctx: PrecisionContext) -> JCubicReport:
    q = ctx.nome(r)
    t2, t3, t4 = (theta_null(k, q, ctx) ** 8 for k in (2, 3, 4))
    d8 = t2 + t3 + t4
    x = t3 / (2 * d8)
    C = j_invariant(r, ctx) / 256
    X = 4 * x
    return JCubicReport(r, x, C, C * x * (1 - x) ** 2 - 1, C * X * (1 - X) ** 2 - 1)


@dataclass(frozen=True)
class BetaQuarticReport:
    """t = sqrt(1 + 8 alpha_3r), C1 = 1 - 2 beta_r and the quartic residual.

    ``residual_alpha_r`` is the same residual with t built from alpha_r instead.
    """

    r: object
    t: object
    C1: object
    residual: object
    residual_alpha_r: object


def _quartic_t(t, C1):
    return t**4 + 8 * C1 * t**3 + 18 * t**2 - 27


def beta_quartic_t(r, ctx: PrecisionContext) -> BetaQuarticReport:
    mp = ctx.mp
    C1 = 1 - 2 * beta(r, ctx)
    t = mp.sqrt(1 + 8 * alpha(_scaled(r, 3), ctx))
    t_alt = mp.sqrt(1 + 8 * alpha(r, ctx))
    return BetaQuarticReport(r, t, C1, _quartic_t(t, C1), _quartic_t(t_alt, C1))


def sextic_numerator_in_t(t: Fraction) -> tuple[Fraction, Fraction]:
    """Exact check helper: with alpha = (t^2 - 1)/8, return
    ((1 - 20 alpha - 8 alpha^2) / t^3, (27 - 18 t^2 - t^4) / (8 t^3))."""
    t = Fraction(t)
    a = (t * t - 1) / 8
    return (1 - 20 * a - 8 * a * a) / t**3, (27 - 18 * t**2 - t**4) / (8 * t**3)
