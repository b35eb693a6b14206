"""
Cubic theta functions and the lemniscatic value of a(q)
=======================================================

The three lattice sums a, b, c at a real nome, the cubic identity tying
them together, and the closed form of a(e^-pi).
"""

from fractions import Fraction

from altbases.precision import PrecisionContext, format_real
from altbases.theta import borwein_a, borwein_b, borwein_c
from altbases.elliptic import elliptic_K

ctx = PrecisionContext(60)
mp = ctx.mp

# q = exp(-pi sqrt(2)); every sum is truncated by a proven tail bound
q = ctx.nome(2)
a, b, c = borwein_a(q, ctx), borwein_b(q, ctx), borwein_c(q, ctx)
print("a =", format_real(a, ctx, 30))
print("b =", format_real(b, ctx, 30))
print("c =", format_real(c, ctx, 30))
print("a^3 - b^3 - c^3 =", mp.nstr(a**3 - b**3 - c**3, 5))

# at r = 1 the value is expressible through Gamma(-1/4)^2 = 8 pi^(3/2) / K(1/sqrt 2)
K = elliptic_K(1 / mp.sqrt(2), ctx)
gamma_sq = 8 * ctx.pi ** mp.mpf(1.5) / K
closed = 8 * mp.sqrt(2 * ctx.pi * (mp.sqrt(24 + 14 * mp.sqrt(3)) - 3)) / (mp.root(3, 4) * gamma_sq)
series = borwein_a(ctx.nome(1), ctx)
print("a(e^-pi) series :", format_real(series, ctx, 45))
print("a(e^-pi) closed :", format_real(closed, ctx, 45))

# c behaves like 3 q^(1/3) for tiny q
tiny = ctx.real(Fraction(1, 10**8))
print("c(q) / (3 q^(1/3)) at q = 1e-8:", mp.nstr(borwein_c(tiny, ctx) / (3 * mp.cbrt(tiny)), 12))
