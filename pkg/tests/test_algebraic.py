import re
from fractions import Fraction

import pytest

from altbases import algebraic as alg
from altbases import elliptic as el
from altbases import theta as th
from altbases.precision import DomainError

from conftest import close

T30, T35, T40 = Fraction(1, 10**30), Fraction(1, 10**35), Fraction(1, 10**40)

# the displayed minimal polynomial, transcribed term by term
PRINTED = """
-16 u^3 + 387420489 v + 19131876 u v + 196830 u^2 v + 84 u^3 v + 1 u^4 v - 1549681956 v^2
- 76527504 u v^2 - 787320 u^2 v^2 - 12480 u^3 v^2 - 4 u^4 v^2 + 2324522934 v^3 + 114791256 u v^3
+ 1180980 u^2 v^3 - 40712 u^3 v^3 + 6 u^4 v^3 - 1549681956 v^4 - 76527504 u v^4 - 787320 u^2 v^4
- 12480 u^3 v^4 - 4 u^4 v^4 + 387420489 v^5 + 19131876 u v^5 + 196830 u^2 v^5
+ 84 u^3 v^5 + 1 u^4 v^5 - 16 u^3 v^6
"""


def test_quartic_table_matches_display():
    coeffs = [int(c.replace(" ", "")) for c in re.findall(r"([+-]?\s*\d+)\s*u?", PRINTED.replace("\n", " "))
              if c.strip() not in ("2", "3", "4", "5", "6")]
    terms = re.findall(r"([+-]?)\s*(\d+)((?:\s*u\^?\d*)?)((?:\s*v\^?\d*)?)", PRINTED.replace("\n", " "))
    table = {}
    for sign, c, u, v in terms:
        i = 0 if not u.strip() else int(u.strip()[2:] or 1) if "^" in u else 1
        j = 0 if not v.strip() else int(v.strip()[2:] or 1) if "^" in v else 1
        table[(i, j)] = (-1 if sign == "-" else 1) * int(c)
    assert table == alg.QUARTIC.as_dict()
    assert alg.QUARTIC(1, 1) == sum(table.values())
    assert coeffs  # the loose scan found integer tokens too
    assert alg.QUARTIC.degree_u == 4 and alg.QUARTIC.degree_v == 6


def _Q_half(mp):
    s3 = mp.sqrt(3)
    return 81 * (885 + 511 * s3 - 3 * mp.sqrt(174033 + 100478 * s3))


def _Qp_half(mp):
    s3 = mp.sqrt(3)
    return 162 * (5082 + 2934 * s3 - mp.sqrt(51655599 + 29823374 * s3))


def test_example_values(ctx):
    mp = ctx.mp
    Q, Qp = alg.eval_Q(Fraction(1, 2), ctx), alg.eval_Qprime(Fraction(1, 2), ctx)
    assert close(Q, _Q_half(mp), T40)
    assert close(Qp, _Qp_half(mp), T40)
    # the closed forms evaluate to about 13.32 and -60.68
    assert mp.nstr(Q, 6) == "13.3166" and mp.nstr(Qp, 6) == "-60.6785"
    assert -Qp / Q > 0


def test_root_is_root(ctx):
    v = ctx.real("0.3")
    assert abs(alg.QUARTIC(alg.eval_Q(v, ctx), v)) < ctx.eps


def test_finite_difference(ctx):
    v, h = ctx.real("0.3"), ctx.real("1e-20")
    fd = (alg.eval_Q(v + h, ctx) - alg.eval_Q(v - h, ctx)) / (2 * h)
    assert close(fd, alg.eval_Qprime(v, ctx), Fraction(1, 10**15))


def test_branch_continuity(ctx):
    vs = [Fraction(k, 10) for k in range(1, 10)]
    us = [alg.eval_Q(v, ctx) for v in vs]
    fine = [alg.eval_Q(Fraction(k, 100), ctx) for k in range(10, 91)]
    for a, b, c in zip(fine, fine[1:], fine[2:]):
        slope1, slope2 = abs(b - a), abs(c - b)
        assert slope2 <= 10 * max(slope1, 1e-30) and slope1 <= 10 * max(slope2, 1e-30)
    assert all(u > 0 for u in us)
    # derivative sign is consistent along the branch
    assert all(alg.eval_Qprime(v, ctx) < 0 for v in vs)


def test_branch_passes_node(ctx):
    mp = ctx.mp
    vstar = 17 - 12 * mp.sqrt(2)
    Q0, Qp0 = alg.eval_Q(vstar, ctx), alg.eval_Qprime(vstar, ctx)
    assert close(Q0, 243 + 162 * mp.sqrt(3), ctx.eps)
    h = ctx.real("1e-25")
    for s in (h, -h):
        assert close(alg.eval_Q(vstar + s, ctx), Q0 + s * Qp0, Fraction(1, 10**40))


def test_quartic_roots_and_errors(ctx):
    roots = alg.quartic_roots(Fraction(1, 2), ctx)
    assert len(roots) == 4
    v = ctx.real(Fraction(1, 2))
    for z in roots:
        assert abs(alg.QUARTIC(z, v)) < ctx.eps * alg.QUARTIC.abs_terms(abs(z), v)
    for v in (0, 1, Fraction(3, 2)):
        with pytest.raises(DomainError):
            alg.eval_Q(v, ctx)


@pytest.mark.parametrize("r", [1, 2])
def test_lambda_and_a_closed(ctx, r):
    lv = alg.lambda_r(r, ctx)
    assert lv.lam >= 0
    assert close(lv.lam**2, -lv.Qprime_at / lv.Q_at, ctx.eps)
    assert close(alg.a0_closed(r, ctx), th.borwein_a(ctx.nome(r), ctx), T35)


def test_lambda1_from_example(ctx):
    mp = ctx.mp
    assert close(alg.lambda_r(1, ctx).lam, mp.sqrt(-_Qp_half(mp) / _Q_half(mp)), T40)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_closed_forms_match_series(ctx, r):
    q2 = ctx.nome(4 * r)
    assert close(alg.a0_q2_closed(r, ctx), th.borwein_a(q2, ctx), T30)
    assert close(alg.c0_closed(r, ctx), th.borwein_c(q2, ctx), T30)
    assert close(alg.b0_closed(r, ctx), th.borwein_b(q2, ctx), T30)
    a = alg.alpha_from_moduli(r, ctx)
    assert 0 < a < 1
    assert close(a, el.alpha(3 * r, ctx), T30)


def test_closed_form_chains(ctx):
    assert close(alg.a0_q2_closed(1, ctx), el.z_of_r(1, ctx), T35)
    b, c, a = alg.b0_closed(2, ctx), alg.c0_closed(2, ctx), alg.a0_q2_closed(2, ctx)
    assert close(b**3 + c**3, a**3, T30)
    mp = ctx.mp
    K = el.elliptic_K(1 / mp.sqrt(2), ctx)
    closed = 8 * mp.sqrt(2 * ctx.pi * (mp.sqrt(24 + 14 * mp.sqrt(3)) - 3)) / (mp.root(3, 4) * 8 * ctx.pi ** 1.5 / K)
    assert close(alg.a0_closed(1, ctx), closed, T35)


def _j_from_eisenstein(r, ctx):
    # j(tau) = 1728 E4^3 / (E4^3 - E6^2) with qhat = exp(-2 pi sqrt(r))
    qh = ctx.nome(4 * r)
    E4 = 1 + 240 * th.lambert(3, 1, "trivial", qh, ctx)
    E6 = 1 - 504 * th.lambert(5, 1, "trivial", qh, ctx)
    return 1728 * E4**3 / (E4**3 - E6**2)


def _j_qexpansion(r, ctx):
    qh = ctx.nome(4 * r)
    c = [744, 196884, 21493760, 864299970, 20245856256, 333202640600, 4252023300096, 44656994071935]
    return 1 / qh + sum(cn * qh**n for n, cn in enumerate(c))


@pytest.mark.parametrize("r,j", [(1, 1728), (2, 8000), (4, 287496)])
def test_j_invariant(ctx, r, j):
    val = alg.j_invariant(r, ctx)
    assert close(val, ctx.real(j), T40)
    assert close(val, _j_from_eisenstein(r, ctx), T40)
    assert abs(val - _j_qexpansion(r, ctx)) < 1e-6


def test_j_cubic_at_lemniscate(ctx):
    rep = alg.j_cubic_x(1, ctx)
    assert abs(rep.residual) < 1e-40
    assert 0 < rep.x <= 0.5
    q = ctx.nome(1)
    t2, t3, t4 = (th.theta_null(k, q, ctx) for k in (2, 3, 4))
    P = el.singular_modulus(1, ctx)
    kk = P.k * P.k_comp
    assert close(t2**8 + t3**8 + t4**8, 2 * (2 * P.K / ctx.pi) ** 4 * (1 - kk**2), T40)


@pytest.mark.parametrize("r", [Fraction(1, 2), 2, 3])
def test_j_cubic_solved_by_4x(ctx, r):
    # the cubic C X (1-X)^2 = 1 is solved by X = 4x, not by x itself off r = 1
    rep = alg.j_cubic_x(r, ctx)
    assert abs(rep.residual_4x) < 1e-40
    assert abs(rep.residual) > 1e-3


def test_beta_quartic(ctx):
    mp = ctx.mp
    rep = alg.beta_quartic_t(Fraction(1, 3), ctx)
    assert close(rep.t, mp.sqrt(5), ctx.eps)
    assert close(rep.C1, -11 / (5 * mp.sqrt(5)), ctx.eps)
    assert abs(rep.residual) < ctx.eps * 100
    for r in (1, 2):
        rep = alg.beta_quartic_t(r, ctx)
        assert abs(rep.residual) < 1e-35
    assert abs(alg.beta_quartic_t(2, ctx).residual_alpha_r) > 1e-3


def test_beta_quartic_exact_precheck():
    lhs, rhs = alg.sextic_numerator_in_t(Fraction(3, 2))
    assert lhs == rhs == Fraction(-11, 16)
    for t in (Fraction(1), Fraction(7, 3), Fraction(11, 5)):
        a, b = alg.sextic_numerator_in_t(t)
        assert a == b


def test_precision_stability(ctx, ctx80):
    for fn in (alg.a0_closed, alg.c0_closed, alg.alpha_from_moduli):
        assert close(fn(2, ctx), ctx.real(fn(2, ctx80)), T40)
