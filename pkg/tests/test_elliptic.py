from fractions import Fraction

import mpmath
import pytest

from altbases import elliptic as el
from altbases import theta as th
from altbases.precision import DomainError, hyp2f1

from conftest import close

THIRD, TWO_THIRDS = Fraction(1, 3), Fraction(2, 3)
SIXTH, FIVE_SIXTHS = Fraction(1, 6), Fraction(5, 6)
R_SET = [Fraction(1, 3), Fraction(1, 2), 1, 2, 3, 5]


def test_K_lemniscate(ctx):
    mp = ctx.mp
    K = el.elliptic_K(1 / mp.sqrt(2), ctx)
    assert close(K, 8 * ctx.pi ** mp.mpf(1.5) / mp.gamma(mp.mpf(-0.25)) ** 2, ctx.eps)


def test_K_small_k(ctx):
    assert abs(el.elliptic_K(ctx.real("1e-10"), ctx) - ctx.pi / 2) < 1e-18


def test_K_half_quadrature(ctx):
    with mpmath.workdps(30):
        quad = mpmath.quad(lambda t: 1 / mpmath.sqrt(1 - mpmath.sin(t) ** 2 / 4), [0, mpmath.pi / 2])
    K = el.elliptic_K(Fraction(1, 2), ctx)
    assert abs(K - quad) < mpmath.mpf(10) ** -28
    assert ctx.mp.nstr(K, 11) == "1.6857503548"


def test_K_domain(ctx):
    for k in (0, 1, Fraction(3, 2)):
        with pytest.raises(DomainError):
            el.elliptic_K(k, ctx)


def test_singular_modulus_r1(ctx):
    assert close(el.singular_modulus(1, ctx).k, 1 / ctx.mp.sqrt(2), ctx.eps)


def test_singular_modulus_inversion(ctx):
    a, b = el.singular_modulus(3, ctx), el.singular_modulus(Fraction(1, 3), ctx)
    assert close(b.k, a.k_comp, ctx.eps * 10)


def test_singular_modulus_r4(ctx):
    mp = ctx.mp
    k4 = el.singular_modulus(4, ctx).k
    assert close(k4, 3 - 2 * mp.sqrt(2), ctx.eps)
    assert close(k4, el.modulus_from_theta(ctx.nome(4), ctx), ctx.eps)


@pytest.mark.parametrize("r", R_SET)
def test_modular_point_invariants(ctx, r):
    p = el.singular_modulus(r, ctx)
    tol = ctx.real(10) ** -(ctx.decimal_digits - 5)
    mp = ctx.mp
    assert 0 < p.k < 1
    assert abs(p.k**2 + p.k_comp**2 - 1) < tol
    assert abs(p.K_comp / p.K - mp.sqrt(ctx.real(r))) < tol
    assert abs(p.q - ctx.nome(r)) < tol
    assert close(th.theta_null(3, p.q, ctx) ** 2, 2 * p.K / ctx.pi, Fraction(1, 10**40))
    assert close(el.modulus_from_theta(p.q, ctx), p.k, ctx.eps * 100)


def test_modulus_from_theta_limits(ctx):
    assert close(el.modulus_from_theta(ctx.nome(1), ctx), 1 / ctx.mp.sqrt(2), ctx.eps)
    assert el.modulus_from_theta(ctx.real("1e-12"), ctx) < 1e-5


def test_landen(ctx):
    mp = ctx.mp
    assert close(el.landen_descend(1 / mp.sqrt(2), ctx), 3 - 2 * mp.sqrt(2), ctx.eps)
    small = el.landen_descend(ctx.real("1e-6"), ctx)
    assert abs(small / ctx.real("2.5e-13") - 1) < 1e-11
    k = ctx.real("0.3")
    kp = mp.sqrt(1 - k * k)
    lhs = el.elliptic_K(el.landen_descend(k, ctx), ctx)
    assert close(lhs, (1 + kp) / 2 * el.elliptic_K(k, ctx), Fraction(1, 10**40))
    # it maps k_r to k_4r
    assert close(el.landen_descend(el.singular_modulus(2, ctx).k, ctx), el.singular_modulus(8, ctx).k, ctx.eps * 10)


def test_alpha_values(ctx):
    assert close(el.alpha(1, ctx), ctx.real(Fraction(1, 2)), ctx.eps)
    assert close(el.alpha(2, ctx) + el.alpha(Fraction(1, 2), ctx), ctx.real(1), Fraction(1, 10**40))
    a = el.alpha(2, ctx)
    ratio = hyp2f1(THIRD, TWO_THIRDS, 1, 1 - a, ctx) / hyp2f1(THIRD, TWO_THIRDS, 1, a, ctx)
    assert close(ratio, ctx.mp.sqrt(2), Fraction(1, 10**35))


def test_alpha_monotone(ctx):
    vals = [el.alpha(r, ctx) for r in (Fraction(1, 2), 1, 2, 4)]
    assert all(x > y for x, y in zip(vals, vals[1:]))
    assert all(0 < v < 1 for v in vals)


def test_beta_examples(ctx):
    mp = ctx.mp
    assert close(el.beta(Fraction(1, 3), ctx), mp.mpf(1) / 2 + 11 / (10 * mp.sqrt(5)), ctx.eps)
    a3 = el.alpha(3, ctx)
    lhs = mp.root(1 + 8 * a3, 4) * hyp2f1(THIRD, TWO_THIRDS, 1, a3, ctx)
    assert close(lhs, hyp2f1(SIXTH, FIVE_SIXTHS, 1, el.beta(1, ctx), ctx), Fraction(1, 10**35))
    assert close(el.beta(2, ctx) + el.beta(Fraction(1, 2), ctx), ctx.real(1), Fraction(1, 10**35))


def test_beta_small_r_guard(ctx):
    # r < 1/9 widens the guard digits; compare with a plainly wider context
    b = el.beta(Fraction(1, 20), ctx)
    wide = ctx.with_digits(90)
    assert close(b, ctx.real(el.beta(Fraction(1, 20), wide)), ctx.eps * 10)


def test_beta_domain(ctx):
    with pytest.raises(DomainError):
        el.beta(0, ctx)


def test_z_of_r(ctx):
    z = el.z_of_r(1, ctx)
    assert close(z, hyp2f1(THIRD, TWO_THIRDS, 1, el.alpha(3, ctx), ctx), Fraction(1, 10**35))
    assert abs(el.z_of_r(400, ctx) - 1) < 1e-20
    q2 = ctx.nome(4)
    a3 = el.alpha(3, ctx)
    lhs = th.borwein_b(q2, ctx) ** 6 - th.borwein_c(q2, ctx) ** 6
    assert close(lhs, (1 - 2 * a3) * z**6, Fraction(1, 10**40))


def test_eisenstein_in_alpha(ctx):
    q = ctx.nome(1)
    a, z = el.alpha(3, ctx), el.z_of_r(1, ctx)

    def N(qq):
        return 1 - 504 * th.lambert(5, 1, "trivial", qq, ctx)

    assert close(N(q**2), (1 - 20 * a - 8 * a * a) * z**6, Fraction(1, 10**40))
    assert close(N(q**6), (1 - 4 * a / 3 + 8 * a * a / 27) * z**6, Fraction(1, 10**40))


def test_eisenstein_polynomial_consistency():
    from sympy import Rational, expand, symbols

    a = symbols("a")
    lhs = 27 * (1 - Rational(4, 3) * a + Rational(8, 27) * a**2) + (1 - 20 * a - 8 * a**2)
    assert expand(lhs - 28 * (1 - 2 * a)) == 0


def test_base_parameters(ctx):
    bp = el.base_parameters(2, ctx)
    assert 0 < bp.alpha < 1 and 0 < bp.beta < 1 and bp.z > 0


def test_multiplier_report(ctx):
    rep = el.multiplier_m3(1, ctx)
    assert rep.lhs > 0 and rep.rhs_complement > 0 and rep.rhs_inverse > 0
    assert rep.best_reading in ("1 - alpha(3r)", "alpha(3/r)")
    rep3 = el.multiplier_m3(Fraction(1, 3), ctx)
    # r -> 1/(9r) swaps the two hypergeometric values
    assert close(rep3.lhs * rep3.lhs_inverse, ctx.real(1), ctx.eps)
    lhs_direct = hyp2f1(SIXTH, FIVE_SIXTHS, 1, el.beta(3, ctx), ctx) / hyp2f1(
        SIXTH, FIVE_SIXTHS, 1, el.beta(Fraction(1, 3), ctx), ctx)
    assert close(rep3.lhs, lhs_direct, ctx.eps)
    hi = ctx.with_digits(80)
    assert close(rep3.lhs, ctx.real(el.multiplier_m3(Fraction(1, 3), hi).lhs), ctx.eps * 10)
