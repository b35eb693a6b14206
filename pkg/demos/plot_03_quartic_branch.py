"""
The quartic Q(v) and the closed forms built on it
=================================================

Q(v) is a root of an integer polynomial P(u, v) of degree 4 in u.  The
branch is the unique positive real root with -Q'/Q > 0, which also passes
cleanly through the node at v = 17 - 12 sqrt 2.
"""

from fractions import Fraction

from altbases.precision import PrecisionContext
from altbases import algebraic as alg
from altbases.theta import borwein_a, borwein_b, borwein_c

ctx = PrecisionContext(60)
mp = ctx.mp

print("P(u, v) =", alg.QUARTIC)
for k in range(1, 10):
    v = Fraction(k, 10)
    print(f"v={v}: Q={mp.nstr(alg.eval_Q(v, ctx), 20)}  Q'={mp.nstr(alg.eval_Qprime(v, ctx), 20)}")

s3 = mp.sqrt(3)
print("Q(1/2) closed :", mp.nstr(81 * (885 + 511 * s3 - 3 * mp.sqrt(174033 + 100478 * s3)), 30))
print("Q(1/2) branch :", mp.nstr(alg.eval_Q(Fraction(1, 2), ctx), 30))

# every closed form against its series
for r in (1, 2, 3):
    q = ctx.nome(r)
    q2 = q * q
    print(f"r={r}")
    print("  a(q)   ", mp.nstr(alg.a0_closed(r, ctx) - borwein_a(q, ctx), 3))
    print("  a(q^2) ", mp.nstr(alg.a0_q2_closed(r, ctx) - borwein_a(q2, ctx), 3))
    print("  b(q^2) ", mp.nstr(alg.b0_closed(r, ctx) - borwein_b(q2, ctx), 3))
    print("  c(q^2) ", mp.nstr(alg.c0_closed(r, ctx) - borwein_c(q2, ctx), 3))

# the j-invariant cubic: C X (1-X)^2 = 1 with C = j/256 is solved by X = 4x
for r in (1, 2):
    rep = alg.j_cubic_x(r, ctx)
    print(f"r={r}: j={mp.nstr(alg.j_invariant(r, ctx), 20)}  residual(x)={mp.nstr(rep.residual, 5)}"
          f"  residual(4x)={mp.nstr(rep.residual_4x, 5)}")
