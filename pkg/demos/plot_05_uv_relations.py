"""
Algebraic relations between form thetas and the modulus
=======================================================

Printed u-v polynomials are checked on a grid of r, the duplicated pair is
told apart, and a relation is rediscovered from samples by lattice
reduction.
"""

from fractions import Fraction

from altbases.precision import PrecisionContext
from altbases import conjectures as cj
from altbases.lattice import minimal_polynomial_of_value
from altbases.elliptic import singular_modulus
from altbases.theta import borwein_a

ctx = PrecisionContext(60)
mp = ctx.mp
grid = (Fraction(1, 2), 1, 2, 3)

for D in sorted(cj.CONJECTURES, reverse=True):
    rep = cj.verify_uv_relation(D, grid, ctx)
    extra = f"  ({rep.note})" if rep.note else ""
    print(f"D={D:4d}: {rep.verdict:9s} max residual {mp.nstr(rep.max_residual, 3)}{extra}")

# rediscover the D = -8 relation from S-function samples alone
print("D=-8 :", cj.discover_bivariate(-8, (2, 1), ctx=ctx))
print("D=-4 :", cj.discover_bivariate(-4, (1, 0), ctx=ctx))


# pi^2 a(q)^2 / K^2 at r = 1 is algebraic of degree 4
def value(c):
    return c.pi**2 * borwein_a(c.nome(1), c) ** 2 / singular_modulus(1, c).K ** 2


coeffs, rel = minimal_polynomial_of_value(value, 8, 12, ctx)
print("minimal polynomial (constant first):", coeffs, f"certified, +{rel.improvement_digits:.0f} digits")
