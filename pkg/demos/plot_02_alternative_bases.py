"""
Signature-3 and signature-6 base parameters
===========================================

alpha_r from a theta quotient, beta_r from alpha_3r, and the hypergeometric
relations they satisfy.  The degree-3 multiplier is printed as a probe with
both readings of its complementary parameter.
"""

from fractions import Fraction

from altbases.precision import PrecisionContext, hyp2f1
from altbases.elliptic import alpha, beta, multiplier_m3, singular_modulus, z_of_r
from altbases.theta import borwein_a

ctx = PrecisionContext(60)
mp = ctx.mp
third, two_thirds = Fraction(1, 3), Fraction(2, 3)

for r in (Fraction(1, 2), 1, 2, 3):
    P = singular_modulus(r, ctx)
    a = alpha(r, ctx)
    print(f"r={r}: k_r={mp.nstr(P.k, 20)}  alpha_r={mp.nstr(a, 20)}  beta_r={mp.nstr(beta(r, ctx), 20)}")

# the inversion alpha(1/r) = 1 - alpha(r) and the period ratio sqrt(r)
a2 = alpha(2, ctx)
print("alpha(2) + alpha(1/2) - 1 =", mp.nstr(a2 + alpha(Fraction(1, 2), ctx) - 1, 5))
ratio = hyp2f1(third, two_thirds, 1, 1 - a2, ctx) / hyp2f1(third, two_thirds, 1, a2, ctx)
print("2F1(1-alpha_2)/2F1(alpha_2) - sqrt(2) =", mp.nstr(ratio - mp.sqrt(2), 5))

# z_3r two ways
print("a(q^2) - 2F1(alpha_3) at r=1:", mp.nstr(z_of_r(1, ctx) - hyp2f1(third, two_thirds, 1, alpha(3, ctx), ctx), 5))
print("a(e^-2pi) =", mp.nstr(borwein_a(ctx.nome(4), ctx), 25))

# the multiplier probe never asserts; it reports both readings
rep = multiplier_m3(1, ctx)
print("multiplier lhs:", mp.nstr(rep.lhs, 15))
print("  with 1 - alpha_3r :", mp.nstr(rep.rhs_complement, 15), "residual", mp.nstr(rep.residual_complement, 5))
print("  with alpha_(3/r)  :", mp.nstr(rep.rhs_inverse, 15), "residual", mp.nstr(rep.residual_inverse, 5))
