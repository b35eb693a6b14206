"""Catalog of identities, each bound to a residual computation.

Every entry maps (r, D, ctx) to ``(lhs, rhs)`` or ``(lhs, rhs, notes)``.  The
residual is |lhs - rhs| / max(|lhs|, 1): relative for sizeable values and
absolute near zero, where a relative error is meaningless (N(q) = E_6
vanishes at q = exp(-2 pi), so I-14 has lhs = 0 at r = 1).

Categories
----------
series
    pure q-series identities, tolerance 1e-40.
root
    identities that chain root finding (singular modulus, quartic branch),
    tolerance 1e-30.
claim
    statements whose printed form is doubtful; a failure is reported but does
    not count as a suite failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import algebraic as alg
from .conjectures import S_function
from .counting import PRINCIPAL_FORMS
from .elliptic import _scaled, alpha, beta, multiplier_m3, singular_modulus
from .precision import PrecisionContext, hyp2f1
from .theta import (
    CLASS_ONE_ODD,
    borwein_a,
    borwein_b,
    borwein_c,
    character_lambert,
    form_theta,
    lambert,
    theta_null,
)

__all__ = ["IdentityCase", "CATALOG", "TOLERANCES", "DEFAULT_GRID", "run_identity", "run_all"]

TOLERANCES = {"series": Fraction(1, 10**40), "root": Fraction(1, 10**30), "claim": Fraction(1, 10**30)}
DEFAULT_GRID = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))
THIRD, TWO_THIRDS = Fraction(1, 3), Fraction(2, 3)
SIXTH, FIVE_SIXTHS = Fraction(1, 6), Fraction(5, 6)


@dataclass
class IdentityCase:
    id: str
    equation: str
    inputs: dict
    lhs: object
    rhs: object
    residual: object
    tolerance: object
    category: str
    verdict: str = ""
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.verdict:
            self.verdict = "pass" if self.residual < self.tolerance else "fail"

    @property
    def counts_as_failure(self) -> bool:
        return self.verdict == "fail" and self.category != "claim"


@dataclass(frozen=True)
class Entry:
    id: str
    equation: str
    category: str
    fn: Callable
    per_D: tuple = ()


def _N(q, ctx):
    return 1 - 504 * lambert(5, 1, "trivial", q, ctx)


def _q(r, ctx):
    return ctx.nome(r)


def i06(r, D, ctx):
    q = _q(r, ctx)
    return borwein_a(q, ctx) ** 3, borwein_b(q, ctx) ** 3 + borwein_c(q, ctx) ** 3


def i07(r, D, ctx):
    # the transfer holds for every 0 <= x < 1; sampled at x = 1/(2(1 + r))
    x = ctx.real(1 / (2 * (1 + Fraction(r)))) if isinstance(r, (int, Fraction)) else 1 / (2 * (1 + r))
    mp = ctx.mp
    arg = (1 - (1 - 20 * x - 8 * x * x) / (1 + 8 * x) ** 1.5) / 2
    return mp.root(1 + 8 * x, 4) * hyp2f1(THIRD, TWO_THIRDS, 1, x, ctx), hyp2f1(SIXTH, FIVE_SIXTHS, 1, arg, ctx)


def i09(r, D, ctx):
    a3 = alpha(_scaled(r, 3), ctx)
    lhs = ctx.mp.root(1 + 8 * a3, 4) * hyp2f1(THIRD, TWO_THIRDS, 1, a3, ctx)
    return lhs, hyp2f1(SIXTH, FIVE_SIXTHS, 1, beta(r, ctx), ctx)


def i10(r, D, ctx):
    rep = multiplier_m3(r, ctx)
    return rep.lhs, rep.rhs_complement, {
        "rhs_alpha_3_over_r": rep.rhs_inverse,
        "residual_alpha_3_over_r": rep.residual_inverse,
        "best_reading": rep.best_reading,
    }


def i11(r, D, ctx):
    q = _q(r, ctx)
    return borwein_a(q * q, ctx), hyp2f1(THIRD, TWO_THIRDS, 1, alpha(_scaled(r, 3), ctx), ctx)


def i12(r, D, ctx):
    q2 = _q(r, ctx) ** 2
    lhs = 28 * (borwein_b(q2, ctx) ** 6 - borwein_c(q2, ctx) ** 6)
    return lhs, 27 * _N(q2**3, ctx) + _N(q2, ctx)


def _z6(r, ctx):
    q = _q(r, ctx)
    return alpha(_scaled(r, 3), ctx), borwein_a(q * q, ctx) ** 6


def i14(r, D, ctx):
    a, z6 = _z6(r, ctx)
    return _N(_q(r, ctx) ** 2, ctx), (1 - 20 * a - 8 * a * a) * z6


def i15(r, D, ctx):
    a, z6 = _z6(r, ctx)
    return _N(_q(r, ctx) ** 6, ctx), (1 - 4 * a / 3 + 8 * a * a / 27) * z6


def i16(r, D, ctx):
    a, z6 = _z6(r, ctx)
    q2 = _q(r, ctx) ** 2
    return borwein_b(q2, ctx) ** 6 - borwein_c(q2, ctx) ** 6, (1 - 2 * a) * z6


def i19(r, D, ctx):
    q = _q(r, ctx)
    rhs = 1 + 12 * lambert(1, 1, "trivial", q, ctx) - 36 * lambert(1, 3, "trivial", q, ctx)
    return borwein_a(q, ctx) ** 2, rhs


def i23(r, D, ctx):
    q = _q(r, ctx)
    return borwein_a(q, ctx), 1 + 6 * lambert(0, 1, "mod3", q, ctx)


def i24(r, D, ctx):
    q = _q(r, ctx)
    d8 = sum(theta_null(k, q, ctx) ** 8 for k in (2, 3, 4))
    return 1 + 240 * lambert(3, 2, "trivial", q, ctx), d8 / 2


def i28(r, D, ctx):
    # a(q)^2 = -q d/dq log Q(k(q)^2) with k(q) = theta_2^2/theta_3^2; central difference
    mp = ctx.mp
    q0 = _q(r, ctx)

    def logQ(q):
        k = theta_null(2, q, ctx) ** 2 / theta_null(3, q, ctx) ** 2
        return mp.log(alg.eval_Q(k * k, ctx))

    h = q0 * mp.mpf(10) ** (-(ctx.decimal_digits + ctx.guard_digits) // 4)
    # fourth-order stencil: error O(h^4) ~ 10^-(digits)
    d = (-logQ(q0 + 2 * h) + 8 * logQ(q0 + h) - 8 * logQ(q0 - h) + logQ(q0 - 2 * h)) / (12 * h)
    return borwein_a(q0, ctx) ** 2, -q0 * d


def i32(r, D, ctx):
    return alg.a0_closed(r, ctx), borwein_a(_q(r, ctx), ctx)


def i33(r, D, ctx):
    q = _q(r, ctx)
    return alg.a0_q2_closed(r, ctx), borwein_a(q * q, ctx)


def i36(r, D, ctx):
    q = _q(r, ctx)
    return alg.c0_closed(r, ctx), borwein_c(q * q, ctx)


def i37(r, D, ctx):
    q = _q(r, ctx)
    return alg.b0_closed(r, ctx), borwein_b(q * q, ctx)


def i38(r, D, ctx):
    return alg.alpha_from_moduli(r, ctx), alpha(_scaled(r, 3), ctx)


def i40(r, D, ctx):
    rep = alg.j_cubic_x(r, ctx)
    x = rep.x
    return rep.C * x * (1 - x) ** 2, ctx.real(1), {"x": x, "residual_4x": abs(rep.residual_4x)}


def i40c(r, D, ctx):
    rep = alg.j_cubic_x(r, ctx)
    X = 4 * rep.x
    return rep.C * X * (1 - X) ** 2, ctx.real(1), {"X": X}


def i42(r, D, ctx):
    q = _q(r, ctx)
    P = singular_modulus(r, ctx)
    d8 = sum(theta_null(k, q, ctx) ** 8 for k in (2, 3, 4))
    return d8, 2 * (2 * P.K / ctx.pi) ** 4 * (1 - (P.k * P.k_comp) ** 2)


def i44(r, D, ctx):
    rep = alg.beta_quartic_t(r, ctx)
    t, C1 = rep.t, rep.C1
    return t**4 + 8 * C1 * t**3 + 18 * t**2, ctx.real(27), {
        "t": t, "C1": C1, "residual_with_alpha_r": abs(rep.residual_alpha_r)}


def i50(r, D, ctx):
    q = _q(r, ctx)
    lhs = form_theta(PRINCIPAL_FORMS[D], q, ctx) ** 2
    L1 = lambert(1, 1, "trivial", q, ctx)
    LD = lambert(1, -D, "trivial", q, ctx)
    return lhs, (1 - 24 * L1 + D * (1 - 24 * LD)) / (D + 1)


def i54(r, D, ctx):
    q = _q(r, ctx)
    return borwein_a(q, ctx), hyp2f1(THIRD, TWO_THIRDS, 1, alpha(_scaled(r, Fraction(3, 4)), ctx), ctx)


def i56(r, D, ctx):
    x = singular_modulus(r, ctx).k
    lam = alg.lambda_at_modulus(x, ctx).lam
    return S_function(-3, (1, 1, 1), x, ctx), x * ctx.mp.sqrt((1 - x) * (1 + x)) * lam, {"x": x}


def i69(r, D, ctx):
    q = _q(r, ctx)
    p = 6 if D == -3 else 2
    return form_theta(PRINCIPAL_FORMS[D], q, ctx), 1 + p * character_lambert(D, q, ctx)


CATALOG = {
    e.id: e
    for e in (
        Entry("I-06", "a^3 = b^3 + c^3", "series", i06),
        Entry("I-07", "2F1(1/3,2/3;1;x) transfer to 2F1(1/6,5/6;1;.)", "series", i07),
        Entry("I-09", "(1+8 alpha_3r)^(1/4) z_3r = 2F1(1/6,5/6;1;beta_r)", "series", i09),
        Entry("I-10", "degree-3 multiplier for 2F1(1/6,5/6;1;.)", "claim", i10),
        Entry("I-11", "a(q^2) = 2F1(1/3,2/3;1;alpha_3r)", "series", i11),
        Entry("I-12", "28 (b^6 - c^6)(q^2) = 27 N(q^6) + N(q^2)", "series", i12),
        Entry("I-14", "N(q^2) = (1 - 20a - 8a^2) z^6", "series", i14),
        Entry("I-15", "N(q^6) = (1 - 4a/3 + 8a^2/27) z^6", "series", i15),
        Entry("I-16", "(b^6 - c^6)(q^2) = (1 - 2a) z^6", "series", i16),
        Entry("I-19", "a(q)^2 = 1 + 12 L1(q) - 36 L1(q^3)", "series", i19),
        Entry("I-23", "a(q) = 1 + 6 (mod-3 Lambert series)", "series", i23),
        Entry("I-24", "1 + 240 L3(q^2) = (theta_2^8 + theta_3^8 + theta_4^8)/2", "series", i24),
        Entry("I-28", "a(q)^2 = -q d/dq log Q(k^2)", "root", i28),
        Entry("I-32", "a(q) = (2K/pi) k k' lambda_r", "root", i32),
        Entry("I-33", "a(q^2) = (2K/pi) ((1-k^2+k^4)/(1+8 alpha_3r))^(1/4)", "root", i33),
        Entry("I-36", "c(q^2) closed form with lambda_4r", "root", i36),
        Entry("I-37", "b(q^2) closed form with lambda_4r", "root", i37),
        Entry("I-38", "alpha_3r from k_r, k_r', lambda_4r", "root", i38),
        Entry("I-40", "C x (1-x)^2 = 1, x = theta_3^8/(2 sum theta^8)", "claim", i40),
        Entry("I-40c", "C X (1-X)^2 = 1, X = 4x", "root", i40c),
        Entry("I-42", "sum theta^8 = 2 (2K/pi)^4 (1 - (k k')^2)", "series", i42),
        Entry("I-44", "t^4 + 8 C1 t^3 + 18 t^2 = 27", "root", i44),
        Entry("I-50", "theta_Q^2 as divisor Lambert series", "series", i50, (-3, -4, -7)),
        Entry("I-54", "a(q) = 2F1(1/3,2/3;1;alpha_(3r/4))", "series", i54),
        Entry("I-56", "S_3(x) = x x' lambda", "root", i56),
        Entry("I-69", "theta_Q = 1 + p sum (n|-D) q^n/(1-q^n)", "series", i69, CLASS_ONE_ODD),
    )
}


def _residual(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), 1)


def run_identity(id: str, ctx: PrecisionContext, r=1, D: int | None = None) -> IdentityCase:
    """Evaluate one catalog entry at a single r (and D, for the per-discriminant ids)."""
    if id not in CATALOG:
        raise KeyError(f"unknown identity id {id!r}")
    e = CATALOG[id]
    if e.per_D:
        D = e.per_D[0] if D is None else D
        if D not in e.per_D:
            raise ValueError(f"{id} is defined for D in {e.per_D}")
    else:
        D = None
    out = e.fn(r, D, ctx)
    lhs, rhs = out[0], out[1]
    notes = out[2] if len(out) > 2 else {}
    inputs = {"r": r} if D is None else {"r": r, "D": D}
    return IdentityCase(
        id=id,
        equation=e.equation,
        inputs=inputs,
        lhs=lhs,
        rhs=rhs,
        residual=_residual(lhs, rhs),
        tolerance=ctx.real(TOLERANCES[e.category]),
        category=e.category,
        notes=notes,
    )


def run_all(r_grid: Sequence = DEFAULT_GRID, ctx: PrecisionContext | None = None,
            only: Sequence[str] | None = None) -> list[IdentityCase]:
    """Every catalog entry (or the ``only`` subset) over the grid, in catalog order."""
    ctx = ctx or PrecisionContext()
    ids = list(CATALOG) if only is None else [i for i in CATALOG if i in set(only)]
    unknown = set(only or ()) - set(CATALOG)
    if unknown:
        raise KeyError(f"unknown identity ids: {sorted(unknown)}")
    cases = []
    for id in ids:
        e = CATALOG[id]
        for r in r_grid:
            for D in e.per_D or (None,):
                cases.append(run_identity(id, ctx, r=r, D=D))
    return cases
