"""Theta-type series, Lambert series and the eta product for a real nome."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .precision import DomainError, PrecisionContext, lattice_tail_bound, series_plan

__all__ = [
    "Nome",
    "QuadraticForm",
    "theta_null",
    "borwein_a",
    "borwein_b",
    "borwein_c",
    "form_theta",
    "lambert",
    "character_lambert",
    "dedekind_eta",
    "CLASS_ONE_ODD",
]

CLASS_ONE_ODD = (-3, -7, -11, -19, -43, -67, -163)


@dataclass(frozen=True)
class Nome:
    """A nome 0 < q < 1, optionally remembering the r with q = exp(-pi*sqrt(r))."""

    q: object
    r: object = None

    @classmethod
    def from_r(cls, r, ctx: PrecisionContext) -> "Nome":
        if ctx.real(r) <= 0:
            raise DomainError("r must be positive")
        return cls(ctx.nome(r), r)

    def value(self, ctx: PrecisionContext):
        q = ctx.real(self.q)
        if not 0 < q < 1:
            raise DomainError("nome must satisfy 0 < q < 1")
        return q

    def power(self, e, ctx: PrecisionContext) -> "Nome":
        """The nome q**e; ``r`` is scaled by e**2 when known."""
        r = None if self.r is None else self.r * e * e
        return Nome(self.value(ctx) ** ctx.real(e), r)


@dataclass(frozen=True)
class QuadraticForm:
    """Binary quadratic form a x^2 + b x y + c y^2 with integer coefficients."""

    a: int
    b: int
    c: int

    @property
    def D(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def positive_definite(self) -> bool:
        return self.a > 0 and self.D < 0

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def check(self) -> "QuadraticForm":
        if not self.positive_definite:
            raise DomainError(f"form {self.as_tuple()} is not positive definite")
        return self

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def min_coefficient(self):
        """A rational mu with Q(x, y) >= mu * max(|x|, |y|)**2.

        From 4a Q = (2ax + by)^2 + |D| y^2 we get Q >= |D| y^2 / (4a), and
        symmetrically Q >= |D| x^2 / (4c).
        """
        from fractions import Fraction

        return Fraction(-self.D, 4 * max(self.a, self.c))

    def exponent_counts(self, N: int) -> Counter:
        """Multiplicity of every value Q(m, n) over the square |m|, |n| <= N."""
        return _exponent_counts(self.a, self.b, self.c, N)


@lru_cache(maxsize=256)
def _exponent_counts(a: int, b: int, c: int, N: int) -> Counter:
    counts: Counter = Counter()
    rng = range(-N, N + 1)
    for m in rng:
        am2 = a * m * m
        bm = b * m
        for n in rng:
            counts[am2 + bm * n + c * n * n] += 1
    return counts


def _power_sum(counts, q, ctx: PrecisionContext):
    """sum_e counts[e] * q**e computed with one power per distinct exponent."""
    mp = ctx.mp
    terms = [cnt * q ** e for e, cnt in sorted(counts.items())]
    return mp.fsum(terms)


def _plan(q, ctx: PrecisionContext, min_coef=0.5) -> int:
    eps = ctx.work_eps / 10
    return series_plan(q, eps, min_coef=min_coef, ctx=ctx)


def _nome(nome, ctx: PrecisionContext):
    if isinstance(nome, Nome):
        return nome.value(ctx)
    q = ctx.real(nome)
    if not 0 < q < 1:
        raise DomainError("nome must satisfy 0 < q < 1")
    return q


def _one_dim_terms(q, ctx: PrecisionContext) -> int:
    # the one-dimensional tail is dominated by the lattice majorant with mu = 1
    return _plan(q, ctx, min_coef=1) + 1


def theta_null(kind: int, nome, ctx: PrecisionContext):
    """Jacobi theta constants theta_2, theta_3, theta_4 at a real nome."""
    q = _nome(nome, ctx)
    mp = ctx.mp
    N = _one_dim_terms(q, ctx)
    if kind == 3:
        return 1 + 2 * mp.fsum(q ** (n * n) for n in range(1, N + 1))
    if kind == 4:
        return 1 + 2 * mp.fsum((-1) ** n * q ** (n * n) for n in range(1, N + 1))
    if kind == 2:
        # q**((n + 1/2)**2) = q**(1/4) * q**(n*n + n); n and -n-1 pair up
        return 2 * q ** mp.mpf(0.25) * mp.fsum(q ** (n * n + n) for n in range(0, N + 1))
    raise DomainError("theta_null kind must be 2, 3 or 4")


def borwein_a(nome, ctx: PrecisionContext):
    """a(q) = sum over m, n of q**(m^2 + m n + n^2)."""
    return form_theta(QuadraticForm(1, 1, 1), nome, ctx)


def borwein_b(nome, ctx: PrecisionContext):
    """b(q) = sum over m, n of w**(m - n) q**(m^2 + m n + n^2), w = exp(2 pi i / 3).

    The weight is split by (m - n) mod 3 into three real accumulators; the
    imaginary part sqrt(3)/2 * (S1 - S2) vanishes by the symmetry m <-> n and
    is checked rather than assumed.
    """
    q = _nome(nome, ctx)
    mp = ctx.mp
    N = _plan(q, ctx) + 1
    buckets = [Counter(), Counter(), Counter()]
    for m in range(-N, N + 1):
        for n in range(-N, N + 1):
            buckets[(m - n) % 3][m * m + m * n + n * n] += 1
    s0, s1, s2 = (_power_sum(bk, q, ctx) for bk in buckets)
    imag = mp.sqrt(3) / 2 * (s1 - s2)
    if abs(imag) > ctx.eps:
        raise AssertionError(f"b0 accumulated imaginary part {imag}")
    return s0 - (s1 + s2) / 2


def borwein_c(nome, ctx: PrecisionContext):
    """c(q) = sum over m, n of q**((m+1/3)^2 + (m+1/3)(n+1/3) + (n+1/3)^2).

    The exponent equals m^2 + m n + n^2 + m + n + 1/3, so the sum is
    q**(1/3) times an integer-exponent series.
    """
    q = _nome(nome, ctx)
    mp = ctx.mp
    N = _plan(q, ctx) + 2
    counts: Counter = Counter()
    for m in range(-N, N + 1):
        for n in range(-N, N + 1):
            counts[m * m + m * n + n * n + m + n] += 1
    return mp.cbrt(q) * _power_sum(counts, q, ctx)


def form_theta(Q: QuadraticForm | tuple, nome, ctx: PrecisionContext):
    """Theta series sum over (n, m) of q**(a n^2 + b n m + c m^2)."""
    if not isinstance(Q, QuadraticForm):
        Q = QuadraticForm(*Q)
    Q.check()
    q = _nome(nome, ctx)
    N = _plan(q, ctx, min_coef=Q.min_coefficient())
    return _power_sum(Q.exponent_counts(N), q, ctx)


def form_theta_half(Q: QuadraticForm | tuple, nome, ctx: PrecisionContext):
    """Same value as :func:`form_theta`, summed over a half lattice and doubled."""
    if not isinstance(Q, QuadraticForm):
        Q = QuadraticForm(*Q)
    Q.check()
    q = _nome(nome, ctx)
    mp = ctx.mp
    N = _plan(q, ctx, min_coef=Q.min_coefficient())
    half = mp.fsum(q ** Q(m, n) for m in range(1, N + 1) for n in range(-N, N + 1))
    axis = mp.fsum(q ** Q(0, n) for n in range(1, N + 1))
    return 1 + 2 * (half + axis)


def _lambert_terms(t, s: int, ctx: PrecisionContext) -> int:
    """N with sum_{n>N} n**s t**n / (1 - t**n) below the working epsilon.

    Each term is at most n**s t**n / (1 - t); past n0 > s / |log t| the ratio
    ((n+1)/n)**s t is at most rho < 1 and the tail is geometric.
    """
    mp = ctx.mp
    eps = ctx.work_eps / 10
    n = max(1, int(s / -mp.log(t)) + 2)
    while True:
        rho = (mp.mpf(n + 2) / (n + 1)) ** s * t
        if rho < 1:
            tail = mp.mpf(n + 1) ** s * t ** (n + 1) / ((1 - t) * (1 - rho))
            if tail < eps:
                return n
        n = n * 2 if rho >= 1 else n + max(1, n // 8)
        if n > ctx.max_terms:
            raise RuntimeError("Lambert series exceeded max_terms")


def lambert(
    s: int,
    step: int,
    sign_pattern: Literal["trivial", "mod3"],
    nome,
    ctx: PrecisionContext,
):
    """Lambert series.

    ``trivial``: sum_{n>=1} n**s q**(step n) / (1 - q**(step n)).
    ``mod3``: sum_{n>=0} q**(3n+1)/(1 - q**(3n+1)) - q**(3n+2)/(1 - q**(3n+2));
    ``s`` and ``step`` are ignored.
    """
    q = _nome(nome, ctx)
    mp = ctx.mp
    if sign_pattern == "trivial":
        if s < 0 or step < 1:
            raise DomainError("lambert needs s >= 0 and step >= 1")
        t = q**step
        N = _lambert_terms(t, s, ctx)
        return mp.fsum(mp.mpf(n) ** s * t**n / (1 - t**n) for n in range(1, N + 1))
    if sign_pattern == "mod3":
        N = _lambert_terms(q, 0, ctx)
        return mp.fsum(
            (1 if n % 3 == 1 else -1) * q**n / (1 - q**n)
            for n in range(1, N + 1)
            if n % 3
        )
    raise DomainError(f"unknown sign pattern {sign_pattern!r}")


def character_lambert(D: int, nome, ctx: PrecisionContext):
    """sum_{n>=1} (n | -D) q**n / (1 - q**n) for the odd class-number-one D."""
    from .counting import kronecker

    if D not in CLASS_ONE_ODD:
        raise DomainError(f"character_lambert supports D in {CLASS_ONE_ODD}")
    q = _nome(nome, ctx)
    mp = ctx.mp
    p = -D
    N = _lambert_terms(q, 0, ctx)
    chi = [kronecker(n, p) for n in range(p)]
    return mp.fsum(chi[n % p] * q**n / (1 - q**n) for n in range(1, N + 1) if n % p)


def dedekind_eta(nome, ctx: PrecisionContext):
    """eta(q) = q**(1/24) * prod_{n>=1} (1 - q**n).

    This is the q-series convention eta(tau) with q = exp(2 pi i tau); with
    the nome exp(-pi sqrt(r)) it is eta at tau = i sqrt(r) / 2.  The product
    is truncated once -log of the remaining factors, at most
    q**(N+1) / ((1 - q)(1 - q**(N+1))), is below the working epsilon.
    """
    q = _nome(nome, ctx)
    mp = ctx.mp
    eps = ctx.work_eps / 10
    N = 1
    while q ** (N + 1) / ((1 - q) * (1 - q ** (N + 1))) >= eps:
        N += 1
        if N > ctx.max_terms:
            raise RuntimeError("eta product exceeded max_terms")
    prod = mp.mpf(1)
    for n in range(1, N + 1):
        prod *= 1 - q**n
    return q ** (mp.mpf(1) / 24) * prod
