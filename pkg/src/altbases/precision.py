"""Arbitrary-precision foundation shared by every other module.

All real values are ``mpf`` instances owned by a :class:`PrecisionContext`.
Each context carries its own ``mpmath.MPContext`` so that contexts never
touch mpmath's global state and can be used from several threads at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from numbers import Rational

import mpmath

__all__ = [
    "DomainError",
    "PrecisionContext",
    "agm",
    "hyp2f1",
    "series_plan",
    "lattice_tail_bound",
    "format_real",
    "parse_real",
]


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def _gauss_legendre_pi(mp):
    a = mp.mpf(1)
    b = 1 / mp.sqrt(2)
    t = mp.mpf(1) / 4
    p = mp.mpf(1)
    tol = mp.ldexp(1, -mp.prec + 4)
    while abs(a - b) > tol:
        a, b, t, p = (a + b) / 2, mp.sqrt(a * b), t - p * ((a - b) / 2) ** 2, 2 * p
    return (a + b) ** 2 / (4 * t)


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision for a computation.

    ``decimal_digits`` is the accuracy promised for returned values,
    ``guard_digits`` the extra digits carried internally and ``max_terms`` a
    hard cap on the length of any series or lattice loop.
    """

    decimal_digits: int = 60
    guard_digits: int = 20
    max_terms: int = 200_000
    mp: mpmath.ctx_mp.MPContext = field(init=False, repr=False, compare=False)
    pi: mpmath.mpf = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.decimal_digits < 15:
            raise DomainError("decimal_digits must be >= 15")
        if self.guard_digits < 10:
            raise DomainError("guard_digits must be >= 10")
        if self.max_terms < 1:
            raise DomainError("max_terms must be positive")
        mp = mpmath.MPContext()
        mp.prec = math.ceil((self.decimal_digits + self.guard_digits) * math.log2(10))
        object.__setattr__(self, "mp", mp)
        object.__setattr__(self, "pi", _gauss_legendre_pi(mp))

    @property
    def binary_precision(self) -> int:
        return self.mp.prec

    @property
    def eps(self):
        """Target accuracy ``10**-decimal_digits``."""
        return self.mp.mpf(10) ** (-self.decimal_digits)

    @property
    def work_eps(self):
        return self.mp.mpf(10) ** (-(self.decimal_digits + self.guard_digits))

    def real(self, x):
        """Convert ``x`` (int, Fraction, str, float or mpf) into this context."""
        if isinstance(x, Rational) and not isinstance(x, int):
            return self.mp.mpf(x.numerator) / x.denominator
        if hasattr(x, "_mpf_"):
            return self.mp.mpf(x._mpf_) if x.__class__.context is not self.mp else x
        return self.mp.mpf(x)

    def with_digits(self, decimal_digits: int, guard_digits: int | None = None) -> "PrecisionContext":
        return PrecisionContext(
            decimal_digits,
            self.guard_digits if guard_digits is None else guard_digits,
            self.max_terms,
        )

    def doubled(self) -> "PrecisionContext":
        return self.with_digits(2 * self.decimal_digits)

    def nome(self, r):
        """The nome ``exp(-pi*sqrt(r))``."""
        return self.mp.exp(-self.pi * self.mp.sqrt(self.real(r)))


def agm(a, b, ctx: PrecisionContext):
    """Arithmetic-geometric mean of two positive reals."""
    mp = ctx.mp
    a, b = ctx.real(a), ctx.real(b)
    if a <= 0 or b <= 0:
        raise DomainError("agm requires positive arguments")
    tol = mp.ldexp(1, -mp.prec + 3)
    for _ in range(ctx.max_terms):
        if abs(a - b) <= tol * a:
            return (a + b) / 2
        a, b = (a + b) / 2, mp.sqrt(a * b)
    raise RuntimeError("agm failed to converge within max_terms")


def hyp2f1(a, b, c, x, ctx: PrecisionContext):
    """Gauss hypergeometric series 2F1(a, b; c; x) for 0 <= x < 1.

    ``a``, ``b`` and ``c`` are rationals.  Summation stops once the tail is
    bounded by a geometric majorant: for n past every parameter the term ratio
    |(a+m)(b+m) x / ((c+m)(m+1))| for all m >= n is at most
    rho_n = x * max(1, (|a|+n)/(c+n)) * max(1, (|b|+n)/(n+1)),
    so the tail after term t_n is below |t_n| * rho_n / (1 - rho_n).
    """
    mp = ctx.mp
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c <= 0 and c.denominator == 1:
        raise DomainError("c must not be a non-positive integer")
    x = ctx.real(x)
    if x < 0 or x >= 1:
        raise DomainError("hyp2f1 is only implemented for 0 <= x < 1")
    if x == 0:
        return mp.mpf(1)
    eps = ctx.eps * mp.mpf(10) ** (-ctx.guard_digits // 2)
    A, B, C = ctx.real(a), ctx.real(b), ctx.real(c)
    term = mp.mpf(1)
    total = mp.mpf(1)
    shift = max(abs(a), abs(b), abs(c)) + 1
    for n in range(ctx.max_terms):
        term = term * (A + n) * (B + n) / ((C + n) * (n + 1)) * x
        total += term
        m = n + 1
        if m > shift:
            rho = x * max(1, (abs(A) + m) / (C + m)) * max(1, (abs(B) + m) / (m + 1))
            if rho < 1 and abs(term) * rho / (1 - rho) < eps * abs(total):
                return total
        if term == 0:
            return total
    raise RuntimeError("hyp2f1 did not reach the requested accuracy within max_terms")


def lattice_tail_bound(q, N: int, min_coef=0.5, mp=None):
    """Upper bound for sum_{max(|m|,|n|) > N} q**Q(m, n).

    ``min_coef`` is a lower bound mu with Q(m, n) >= mu * max(|m|, |n|)**2.
    The shell max(|m|,|n|) = M holds 8M lattice points, so with t = q**mu the
    tail is at most sum_{M>N} 8 M t**(M*M).  Consecutive terms have ratio
    ((M+1)/M) t**(2M+1) <= rho := ((N+2)/(N+1)) t**(2N+3) for M > N, giving the
    geometric majorant 8 (N+1) t**((N+1)**2) / (1 - rho).
    """
    mp = mp or mpmath.mp
    if isinstance(min_coef, Fraction):
        min_coef = mp.mpf(min_coef.numerator) / min_coef.denominator
    t = mp.power(q, min_coef)
    rho = mp.mpf(N + 2) / (N + 1) * t ** (2 * N + 3)
    if rho >= 1:
        return mp.inf
    return 8 * (N + 1) * t ** ((N + 1) ** 2) / (1 - rho)


def series_plan(q_magnitude, eps, min_coef=0.5, ctx: PrecisionContext | None = None) -> int:
    """Smallest N whose square lattice sum |m|, |n| <= N leaves a tail below eps.

    The default ``min_coef`` of 1/2 covers m^2 + mn + n^2 and every reduced
    form of discriminant |D| >= 3 with a = 1; callers with other forms pass
    their own bound.
    """
    mp = ctx.mp if ctx is not None else mpmath.mp
    q = q_magnitude if ctx is None else ctx.real(q_magnitude)
    q = mp.mpf(q)
    eps = mp.mpf(eps)
    if not 0 < q < 1:
        raise DomainError("series_plan needs 0 < q < 1")
    if eps <= 0:
        raise DomainError("series_plan needs eps > 0")
    cap = ctx.max_terms if ctx is not None else 10**6
    # doubling then bisection on the monotone majorant
    hi = 1
    while lattice_tail_bound(q, hi, min_coef, mp) >= eps:
        hi *= 2
        if hi > cap:
            raise RuntimeError("series_plan exceeded max_terms")
    lo = 0
    if lattice_tail_bound(q, 0, min_coef, mp) < eps:
        return 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lattice_tail_bound(q, mid, min_coef, mp) < eps:
            hi = mid
        else:
            lo = mid
    return hi


def format_real(x, ctx: PrecisionContext, digits: int | None = None) -> str:
    """Scientific notation with ``digits`` significant digits, round-half-even."""
    digits = ctx.decimal_digits if digits is None else digits
    x = ctx.real(x)
    if not ctx.mp.isfinite(x):
        return str(x)
    sign, man, exp, _ = x._mpf_
    man, exp = int(man), int(exp)
    # exact binary-to-decimal conversion, then a single rounding
    with localcontext() as dctx:
        dctx.prec = ctx.mp.prec + 50
        d = Decimal(man) * (Decimal(2) ** exp) if exp >= 0 else Decimal(man) / (Decimal(2) ** -exp)
        if sign:
            d = -d
        if d == 0:
            return f"{0:.{digits - 1}E}"
        dctx.rounding = ROUND_HALF_EVEN
        dctx.prec = digits
        d = +d
    return f"{d:.{digits - 1}E}"


def parse_real(text: str, ctx: PrecisionContext):
    return ctx.mp.mpf(text.strip())
