"""Conjectured u-v relations for binary theta series, S-functions and relation discovery."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .counting import PRINCIPAL_FORMS
from .elliptic import elliptic_K, singular_modulus
from .lattice import InconclusiveError, integer_relation, lll_reduce
from .polynomial import BivariatePolyZZ
from .precision import PrecisionContext
from .theta import QuadraticForm, form_theta, theta_null

__all__ = [
    "UVConvention",
    "DEFAULT_CONVENTION",
    "CONVENTIONS",
    "CONJECTURES",
    "RelationReport",
    "uv_pair",
    "verify_uv_relation",
    "S_function",
    "modular_ratio_squared",
    "discover_bivariate",
    "DEFAULT_SAMPLES",
]


@dataclass(frozen=True)
class UVConvention:
    """How u and v are built from the form's theta series.

    ``u_def``: ``theta_over_theta3_squared`` gives u = (sum / theta_3^2)^2,
    ``F_over_theta3`` gives u = (F / theta_3)^2 with F = sum / theta_3^2.
    ``v_def``: ``k`` or ``k_squared``.
    """

    u_def: str = "theta_over_theta3_squared"
    v_def: str = "k_squared"

    @property
    def name(self) -> str:
        return f"u={self.u_def}, v={self.v_def}"


DEFAULT_CONVENTION = UVConvention()
CONVENTIONS = (
    DEFAULT_CONVENTION,
    UVConvention("theta_over_theta3_squared", "k"),
    UVConvention("F_over_theta3", "k_squared"),
    UVConvention("F_over_theta3", "k"),
)

_P32 = (
    "-16384*u + 16384*u**2 - 589824*u**3 + 589824*u**4 - 6291456*u**5 + 6291456*u**6"
    " - 16777216*u**7 + 16777216*u**8 + 28672*u*v - 221184*u**2*v + 933888*u**3*v"
    " - 327680*u**4*v + 4456448*u**5*v + 1048576*u**6*v - 13568*u*v**2 + 206336*u**2*v**2"
    " - 372736*u**3*v**2 + 24576*u**4*v**2 + 1216*u*v**3 + 256*u**2*v**3 + v**4"
)

# As printed; the D = -32 and D = -36 entries are the same polynomial.
CONJECTURES = {
    -4: BivariatePolyZZ.parse("u - 1"),
    -8: BivariatePolyZZ.parse("-4*u + 4*u**2 + v"),
    -12: BivariatePolyZZ.parse("-1 - 8*u - 18*u**2 + 27*u**4 + 16*u*v"),
    -16: BivariatePolyZZ.parse(
        "-64*u + 64*u**2 - 256*u**3 + 256*u**4 + 48*u*v + 32*u**2*v + v**2"
    ),
    -20: BivariatePolyZZ.parse(
        "-1 + 26*u - 275*u**2 + 1500*u**3 - 4375*u**4 + 6250*u**5 - 3125*u**6"
        " - 256*u*v + 256*u*v**2"
    ),
    -24: BivariatePolyZZ.parse(
        "-6912*u**4 - 55296*u**5 - 124416*u**6 + 186624*u**8 - 1024*u*v - 8192*u**2*v"
        " - 18432*u**3*v + 6912*u**4*v + 69120*u**5*v + 62208*u**6*v + 1280*u*v**2"
        " + 8480*u**2*v**2 + 16128*u**3*v**2 + 4320*u**4*v**2 - 288*u*v**3 + 112*u**2*v**3 + v**4"
    ),
    -28: BivariatePolyZZ.parse(
        "-1 - 48*u - 980*u**2 - 10976*u**3 - 72030*u**4 - 268912*u**5 - 470596*u**6"
        " + 823543*u**8 + 2144*u*v - 37632*u**2*v + 21952*u**3*v + 537824*u**5*v"
        " - 6144*u*v**2 + 37632*u**2*v**2 + 4096*u*v**3"
    ),
    -32: BivariatePolyZZ.parse(_P32),
    -36: BivariatePolyZZ.parse(_P32),
    -40: BivariatePolyZZ.parse(
        "12800000*u**6 - 332800000*u**7 + 3520000000*u**8 - 19200000000*u**9"
        " + 56000000000*u**10 - 80000000000*u**11 + 40000000000*u**12 - 262144*u*v"
        " + 6815744*u**2*v - 72089600*u**3*v + 393216000*u**4*v - 1153280000*u**5*v"
        " + 1785600000*u**6*v - 2163200000*u**7*v + 6080000000*u**8*v - 13600000000*u**9*v"
        " + 12000000000*u**10*v + 589824*u*v**2 - 13631488*u**2*v**2 + 126156800*u**3*v**2"
        " - 588704000*u**4*v**2 + 1412480000*u**5*v**2 - 1489600000*u**6*v**2"
        " + 355200000*u**7*v**2 + 540000000*u**8*v**2 - 425984*u*v**3 + 3899392*u**2*v**3"
        " - 58668800*u**3*v**3 + 197984000*u**4*v**3 - 293280000*u**5*v**3 + 10400000*u**6*v**3"
        " + 102400*u*v**4 + 2920752*u**2*v**4 + 4463200*u**3*v**4 + 102000*u**4*v**4"
        " - 4200*u*v**5 + 504*u**2*v**5 + v**6"
    ),
}


def _form_for(D, form):
    if form is None:
        form = PRINCIPAL_FORMS[D]
    Q = form if isinstance(form, QuadraticForm) else QuadraticForm(*form)
    if Q.D != D:
        raise ValueError(f"form {Q.as_tuple()} has discriminant {Q.D}, not {D}")
    return Q


def uv_pair(D: int, form, r, conv: UVConvention, ctx: PrecisionContext):
    """(u, v) at q = exp(-pi sqrt(r)) under a convention."""
    Q = _form_for(D, form)
    P = singular_modulus(r, ctx)
    q = ctx.nome(r)
    t3 = theta_null(3, q, ctx)
    F = form_theta(Q, q, ctx) / t3**2
    if conv.u_def == "theta_over_theta3_squared":
        u = F * F
    elif conv.u_def == "F_over_theta3":
        u = (F / t3) ** 2
    else:
        raise ValueError(f"unknown u_def {conv.u_def!r}")
    if conv.v_def == "k_squared":
        v = P.k**2
    elif conv.v_def == "k":
        v = P.k
    else:
        raise ValueError(f"unknown v_def {conv.v_def!r}")
    return u, v


@dataclass
class RelationReport:
    D: int
    r_grid: list
    convention: UVConvention
    max_residual: object
    verdict: str
    tolerance: object
    residuals: list = field(default_factory=list)
    alternates: dict = field(default_factory=dict)
    best_convention: str | None = None
    note: str = ""


def _max_residual(poly, D, form, r_grid, conv, ctx):
    res = []
    for r in r_grid:
        u, v = uv_pair(D, form, r, conv, ctx)
        res.append(abs(poly(u, v)))
    return max(res) if res else ctx.real(0), res


def verify_uv_relation(D: int, r_grid: Sequence, ctx: PrecisionContext, tol=None, form=None) -> RelationReport:
    """Evaluate the printed polynomial for D on the grid.

    Verdict ``pass`` when the default convention fits; otherwise the
    alternates are tried and the verdict is ``ambiguous`` if one of them fits,
    ``fail`` if none does.  The default is never replaced.
    """
    if D not in CONJECTURES:
        raise ValueError(f"no conjectured polynomial for D={D}")
    tol = ctx.real(Fraction(1, 10**35) if tol is None else tol)
    poly = CONJECTURES[D]
    r_grid = list(r_grid)
    mx, res = _max_residual(poly, D, form, r_grid, DEFAULT_CONVENTION, ctx)
    report = RelationReport(D, r_grid, DEFAULT_CONVENTION, mx, "pass" if mx < tol else "fail", tol, res)
    twins = [E for E, p in CONJECTURES.items() if E != D and p == poly]
    if twins:
        report.note = f"polynomial printed identically for D={twins}"
    if report.verdict == "fail" and r_grid:
        best = None
        for conv in CONVENTIONS[1:]:
            m, _ = _max_residual(poly, D, form, r_grid, conv, ctx)
            report.alternates[conv.name] = m
            if best is None or m < best[1]:
                best = (conv.name, m)
        report.best_convention = best[0]
        if best[1] < tol:
            report.verdict = "ambiguous"
    else:
        report.best_convention = DEFAULT_CONVENTION.name
    return report


def modular_ratio_squared(x, ctx: PrecisionContext):
    """(K(sqrt(1 - x^2)) / K(x))^2: the r whose singular modulus is x."""
    x = ctx.real(x)
    return (elliptic_K(ctx.mp.sqrt((1 - x) * (1 + x)), ctx) / elliptic_K(x, ctx)) ** 2


def S_function(D: int, form, x, ctx: PrecisionContext):
    """(pi / (2 K(x))) * theta_Q(q1) with q1 = exp(-pi K(x')/K(x))."""
    Q = _form_for(D, form)
    mp = ctx.mp
    x = ctx.real(x)
    K = elliptic_K(x, ctx)
    Kp = elliptic_K(mp.sqrt((1 - x) * (1 + x)), ctx)
    q1 = mp.exp(-ctx.pi * Kp / K)
    return ctx.pi / (2 * K) * form_theta(Q, q1, ctx)


DEFAULT_SAMPLES = tuple(Fraction(m, 23) for m in range(3, 21))


def default_samples(count: int, avoid=Fraction(5, 7)) -> tuple:
    """``count`` distinct rationals m/d in (0, 1/2]; DEFAULT_SAMPLES when it suffices.

    Small x keeps the nome of K'(x)/K(x) small and the lattice sums short.
    """
    if count <= len(DEFAULT_SAMPLES):
        return DEFAULT_SAMPLES
    d = 2 * count + 7
    while d % 7 == 0:
        d += 1
    return tuple(x for x in (Fraction(m, d) for m in range(3, count + 4)) if x != avoid)


def _monomials(du, dv):
    return [(i, j) for j in range(dv + 1) for i in range(du + 1)]


def discover_bivariate(
    D: int,
    degrees: tuple[int, int],
    sample_xs: Sequence | None = None,
    ctx: PrecisionContext | None = None,
    form=None,
    fresh_x=Fraction(5, 7),
) -> BivariatePolyZZ | None:
    """Find integer a_ij with sum a_ij u^i v^j = 0 at u = S_D(x)^2, v = x^2.

    All samples enter one stacked lattice, so a single vector must annihilate
    every sample.  With u = S^2 and v = x^2 the search space matches the
    printed u-v polynomials.  Without ``sample_xs`` enough points m/d are
    generated for the requested degrees.  The working precision is raised to at least
    30 + 10 M digits (M monomials).  A candidate is accepted only if it also
    vanishes at ``fresh_x`` (not among the samples) to 1e-30 and at doubled
    precision; otherwise :class:`InconclusiveError` is raised.
    """
    du, dv = degrees
    mons = _monomials(du, dv)
    M = len(mons)
    xs = list(dict.fromkeys(sample_xs if sample_xs is not None else default_samples(M + 2, fresh_x)))
    if len(xs) < M:
        raise ValueError(f"need at least {M} distinct samples, got {len(xs)}")
    xs = xs[: max(M, min(len(xs), M + 2))]
    ctx = ctx or PrecisionContext()
    need = 30 + 10 * M
    wctx = ctx if ctx.decimal_digits >= need else ctx.with_digits(need)
    mp = wctx.mp

    def rows(c, x):
        S = S_function(D, form, x, c)
        u, v = S * S, c.real(x) ** 2
        return [u**i * v**j for i, j in mons]

    samples = [rows(wctx, x) for x in xs]
    scale = mp.mpf(10) ** (wctx.decimal_digits - 10)
    basis = []
    for a in range(M):
        row = [0] * M + [int(mp.nint(scale * s[a])) for s in samples]
        row[a] = 1
        basis.append(row)
    reduced = lll_reduce(basis)
    tol = mp.mpf(10) ** (-(wctx.decimal_digits - 10 - 2 * M))
    for vec in reduced:
        coeffs = vec[:M]
        if not any(coeffs):
            continue
        ok = all(abs(mp.fsum(c * m for c, m in zip(coeffs, s))) < tol for s in samples)
        if not ok:
            continue
        poly = BivariatePolyZZ.from_dict(dict(zip(mons, coeffs))).primitive()
        hi = wctx.doubled()
        for c, x, t in ((hi, xs[0], hi.mp.mpf(10) ** (-(hi.decimal_digits - 10 - 2 * M))),
                        (wctx, fresh_x, mp.mpf(10) ** -30)):
            S = S_function(D, form, x, c)
            if abs(poly(S * S, c.real(x) ** 2)) >= t:
                raise InconclusiveError(f"candidate {poly} failed re-verification at x={x}")
        return poly
    return None
