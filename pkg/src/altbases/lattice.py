"""Integer LLL reduction and integer-relation detection on top of it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .precision import PrecisionContext

__all__ = [
    "InconclusiveError",
    "IntegerRelation",
    "lll_reduce",
    "integer_relation",
    "minimal_polynomial_of_value",
]


class InconclusiveError(ArithmeticError):
    """The working precision was too low to decide whether a relation exists."""


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)) -> list[list[int]]:
    """LLL-reduce linearly independent integer row vectors.

    All-integer variant (Cohen, Algorithm 2.6.7): Gram-Schmidt data is kept as
    the integers d_i and lambda_ij, so no rational arithmetic is needed.
    """
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    if n <= 1:
        return b
    dn, dd = delta.numerator, delta.denominator

    def dot(x, y):
        return sum(p * q for p, q in zip(x, y))

    d = [0] * (n + 1)  # d[0] = 1, d[i+1] = Gram determinant of b[0..i]
    lam = [[0] * n for _ in range(n)]
    d[0] = 1
    d[1] = dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("basis vectors must be linearly independent")
    k, kmax = 1, 0

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            qq = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - qq * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= qq * d[l + 1]
            for i in range(l):
                lam[k][i] -= qq * lam[l][i]

    def swap(k):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lmb = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lmb * lmb) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lmb * t) // d[k]
            lam[i][k - 1] = (B * t + lmb * lam[i][k]) // d[k + 1]
        d[k] = B

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise ValueError("basis vectors must be linearly independent")
                    d[k + 1] = u
        red(k, k - 1)
        if dd * d[k + 1] * d[k - 1] < dn * d[k] * d[k] - dd * lam[k][k - 1] ** 2:
            swap(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return b


@dataclass(frozen=True)
class IntegerRelation:
    """Integer vector c with sum c_i x_i ~ 0.

    ``residual`` is |sum c_i x_i| at the search precision and
    ``residual_doubled`` the same at doubled precision.
    """

    coefficients: tuple
    residual: object
    norm_bound: int
    residual_doubled: object = None
    digits: int = 0

    @property
    def improvement_digits(self) -> float:
        """Orders of magnitude gained by doubling the precision."""
        if self.residual_doubled is None:
            return 0.0
        if self.residual_doubled == 0:
            return math.inf
        if self.residual == 0:
            return 0.0
        return float(math.log10(self.residual) - math.log10(self.residual_doubled))


ValueSource = Callable[[PrecisionContext], Sequence] | Sequence


def _values(source, ctx):
    vals = source(ctx) if callable(source) else source
    return [ctx.real(v) for v in vals]


def _candidates(values, ctx, max_coeff_digits, exclude_zero_last=False):
    """LLL-reduced short vectors of the standard relation lattice."""
    mp = ctx.mp
    n = len(values)
    tol_digits = ctx.decimal_digits - 10
    scale = mp.mpf(10) ** tol_digits
    basis = []
    for i, x in enumerate(values):
        row = [0] * n + [int(mp.nint(x * scale))]
        row[i] = 1
        basis.append(row)
    reduced = lll_reduce(basis)
    bound = 10**max_coeff_digits
    tol = mp.mpf(10) ** (-tol_digits)
    out = []
    for row in reduced:
        c = row[:n]
        if not any(c) or max(abs(x) for x in c) > bound:
            continue
        res = abs(mp.fsum(ci * xi for ci, xi in zip(c, values)))
        scale_ref = max(1, max(abs(x) for x in values))
        if res < tol * scale_ref:
            out.append((sum(x * x for x in c), c, res))
    out.sort(key=lambda t: t[0])
    return [(c, res) for _, c, res in out]


def _normalise(c):
    g = 0
    for x in c:
        g = math.gcd(g, abs(x))
    c = [x // g for x in c] if g else list(c)
    for x in reversed(c):
        if x:
            if x < 0:
                c = [-y for y in c]
            break
    return tuple(c)


def integer_relation(values: ValueSource, max_coeff_digits: int, ctx: PrecisionContext) -> IntegerRelation | None:
    """Search for an integer relation among ``values`` and certify it.

    ``values`` is either a callable ``ctx -> sequence`` (preferred: the relation
    is then re-checked on values recomputed at doubled precision) or a plain
    sequence, in which case doubled-precision certification is skipped.

    Returns ``None`` only when no short relation appears at two precisions;
    raises :class:`InconclusiveError` when the outcomes disagree.
    """
    vals = _values(values, ctx)
    n = len(vals)
    if n < 2 or n > 40:
        raise ValueError("integer_relation needs between 2 and 40 values")
    found = _candidates(vals, ctx, max_coeff_digits)
    if not callable(values):
        if not found:
            return None
        c, res = found[0]
        return IntegerRelation(_normalise(c), res, 10**max_coeff_digits, None, ctx.decimal_digits)
    hi = ctx.doubled()
    hvals = _values(values, hi)
    if found:
        c, res = found[0]
        res2 = abs(hi.mp.fsum(ci * xi for ci, xi in zip(c, hvals)))
        if res2 < hi.mp.mpf(10) ** (-(hi.decimal_digits - 10)) * max(1, max(abs(x) for x in hvals)):
            return IntegerRelation(_normalise(c), res, 10**max_coeff_digits, res2, ctx.decimal_digits)
    found_hi = _candidates(hvals, hi, max_coeff_digits)
    if not found and not found_hi:
        return None
    if found_hi:
        top = hi.doubled()
        tvals = _values(values, top)
        c, res = found_hi[0]
        res2 = abs(top.mp.fsum(ci * xi for ci, xi in zip(c, tvals)))
        if res2 < top.mp.mpf(10) ** (-(top.decimal_digits - 10)) * max(1, max(abs(x) for x in tvals)):
            return IntegerRelation(_normalise(c), res, 10**max_coeff_digits, res2, hi.decimal_digits)
    raise InconclusiveError("relation search did not stabilise between precisions")


def minimal_polynomial_of_value(x: Callable[[PrecisionContext], object], max_degree: int,
                                max_coeff_digits: int, ctx: PrecisionContext):
    """Lowest-degree integer polynomial (constant term first) vanishing at ``x``.

    Returns ``(coefficients, IntegerRelation)`` or ``None``.
    """
    for deg in range(1, max_degree + 1):
        def powers(c, deg=deg):
            v = x(c)
            return [v**i for i in range(deg + 1)]

        rel = integer_relation(powers, max_coeff_digits, ctx)
        if rel is not None and rel.coefficients[-1] != 0:
            return list(rel.coefficients), rel
    return None
