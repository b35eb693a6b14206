"""Exact representation numbers of binary and quaternary quadratic forms.

Everything here is integer arithmetic.  Brute-force counts are compared with
the divisor-sum formulas; ``CountReport.match`` records the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from sympy import divisor_sigma, divisors

from .precision import DomainError
from .theta import CLASS_ONE_ODD, QuadraticForm

__all__ = [
    "CountReport",
    "LemmaProbe",
    "PRINCIPAL_FORMS",
    "brute_count_binary",
    "binary_count_table",
    "brute_count_quaternary",
    "quaternary_count_table",
    "direct_count_quaternary",
    "kronecker",
    "divisor_formula_s",
    "divisor_formula_r3",
    "divisor_formula_class1",
    "formula_for",
    "count_table",
    "lemma_equivalence_probe",
    "qexpansion_coeffs",
]

PRINCIPAL_FORMS = {
    -3: (1, 1, 1), -4: (1, 0, 1), -7: (1, 1, 2), -8: (1, 0, 2), -11: (1, 1, 3),
    -12: (1, 0, 3), -16: (1, 0, 4), -19: (1, 1, 5), -20: (1, 0, 5), -24: (1, 0, 6),
    -28: (1, 0, 7), -32: (1, 0, 8), -36: (1, 0, 9), -40: (1, 0, 10), -43: (1, 1, 11),
    -67: (1, 1, 17), -163: (1, 1, 41),
}


def _form(Q) -> QuadraticForm:
    Q = Q if isinstance(Q, QuadraticForm) else QuadraticForm(*Q)
    return Q.check()


def _bounds(Q: QuadraticForm, n: int) -> tuple[int, int]:
    # 4a Q = (2ax + by)^2 + |D| y^2, so |y| <= sqrt(4an/|D|); likewise |x| <= sqrt(4cn/|D|)
    d = -Q.D
    return isqrt(4 * Q.c * n // d) + 1, isqrt(4 * Q.a * n // d) + 1


def brute_count_binary(Q, n: int) -> int:
    """#{(x, y) in Z^2 : a x^2 + b x y + c y^2 = n}."""
    Q = _form(Q)
    if n < 0:
        return 0
    X, Y = _bounds(Q, n)
    return sum(1 for x in range(-X, X + 1) for y in range(-Y, Y + 1) if Q(x, y) == n)


@lru_cache(maxsize=64)
def _binary_table(a: int, b: int, c: int, N: int) -> tuple[int, ...]:
    Q = QuadraticForm(a, b, c)
    X, Y = _bounds(Q, N)
    table = [0] * (N + 1)
    for x in range(-X, X + 1):
        for y in range(-Y, Y + 1):
            val = Q(x, y)
            if val <= N:
                table[val] += 1
    return tuple(table)


def binary_count_table(Q, N: int) -> list[int]:
    """Counts r_Q(n) for 0 <= n <= N from one enumeration of the ellipse."""
    Q = _form(Q)
    return list(_binary_table(Q.a, Q.b, Q.c, N))


def quaternary_count_table(Q, N: int) -> list[int]:
    """Counts of a(x^2+z^2) + b(xy+zw) + c(y^2+w^2) = n as the self-convolution of r_Q."""
    r = binary_count_table(Q, N)
    return [sum(r[j] * r[n - j] for j in range(n + 1)) for n in range(N + 1)]


def brute_count_quaternary(Q, n: int) -> int:
    return quaternary_count_table(Q, n)[n]


def direct_count_quaternary(Q, n: int) -> int:
    """Four-variable enumeration; slow, used to cross-check the convolution."""
    Q = _form(Q)
    X, Y = _bounds(Q, n)
    pairs = [Q(x, y) for x in range(-X, X + 1) for y in range(-Y, Y + 1)]
    pairs = [p for p in pairs if p <= n]
    return sum(1 for p in pairs for s in pairs if p + s == n)


def kronecker(n: int, m: int) -> int:
    """Jacobi symbol (n | m) for odd positive m, by quadratic reciprocity."""
    if m <= 0 or m % 2 == 0:
        raise DomainError("kronecker is implemented for odd positive m only")
    n %= m
    result = 1
    while n:
        while n % 2 == 0:
            n //= 2
            if m % 8 in (3, 5):
                result = -result
        n, m = m, n
        if n % 4 == 3 and m % 4 == 3:
            result = -result
        n %= m
    return result if m == 1 else 0


def divisor_formula_s(n: int, D: int) -> int:
    """-24/(D+1) sigma(n) + 24/(D+1) sum_{d | n, |D| divides d} d, for D in {-3, -4, -7}."""
    if D not in (-3, -4, -7):
        raise DomainError("divisor_formula_s supports D in {-3, -4, -7}")
    if n == 0:
        return 1
    sig = int(divisor_sigma(n))
    restricted = sum(d for d in divisors(n) if d % -D == 0)
    num = -24 * sig + 24 * restricted
    q, rem = divmod(num, D + 1)
    assert rem == 0
    return q


def divisor_formula_r3(n: int) -> int:
    """6 (#{d | n : d = 1 mod 3} - #{d | n : d = 2 mod 3})."""
    if n == 0:
        return 1
    ds = divisors(n)
    return 6 * (sum(1 for d in ds if d % 3 == 1) - sum(1 for d in ds if d % 3 == 2))


def divisor_formula_class1(n: int, D: int) -> int:
    """p sum_{d | n} (d | |D|) with p = 6 for D = -3 and p = 2 otherwise."""
    if D not in CLASS_ONE_ODD:
        raise DomainError(f"divisor_formula_class1 supports D in {CLASS_ONE_ODD}")
    if n == 0:
        return 1
    p = 6 if D == -3 else 2
    return p * sum(kronecker(d, -D) for d in divisors(n))


@dataclass(frozen=True)
class CountReport:
    n: int
    brute: int
    formula: int | None
    formula_name: str | None

    @property
    def match(self) -> bool | None:
        return None if self.formula is None else self.brute == self.formula


def formula_for(Q) -> tuple[str, callable] | None:
    """The divisor-sum formula in scope for a binary form, if any."""
    Q = _form(Q)
    D = Q.D
    if D in CLASS_ONE_ODD:
        return f"class-number-one divisor sum (D={D})", lambda n: divisor_formula_class1(n, D)
    return None


def count_table(Q, n_max: int, quaternary: bool = False) -> list[CountReport]:
    """Brute counts for 1 <= n <= n_max next to the applicable formula."""
    Q = _form(Q)
    if quaternary:
        brute = quaternary_count_table(Q, n_max)
        if Q.D in (-3, -4, -7):
            name, f = f"quaternary divisor sum (D={Q.D})", (lambda n: divisor_formula_s(n, Q.D))
        else:
            name, f = None, None
    else:
        brute = binary_count_table(Q, n_max)
        found = formula_for(Q)
        name, f = found if found else (None, None)
    return [CountReport(n, brute[n], f(n) if f else None, name) for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class LemmaProbe:
    forms: tuple
    N: int
    first_mismatch: int | None
    counts: tuple | None

    @property
    def agree(self) -> bool:
        return self.first_mismatch is None

    def describe(self) -> str:
        if self.agree:
            return f"agree up to {self.N}"
        a, b = self.counts
        return f"first mismatch at n={self.first_mismatch}: counts {a} vs {b}"


def lemma_equivalence_probe(Q1, Q2, N: int) -> LemmaProbe:
    """Compare representation numbers of two forms of equal discriminant for n <= N."""
    Q1, Q2 = _form(Q1), _form(Q2)
    if Q1.D != Q2.D:
        raise DomainError(f"discriminants differ: {Q1.D} vs {Q2.D}")
    t1, t2 = binary_count_table(Q1, N), binary_count_table(Q2, N)
    for n in range(N + 1):
        if t1[n] != t2[n]:
            return LemmaProbe((Q1.as_tuple(), Q2.as_tuple()), N, n, (t1[n], t2[n]))
    return LemmaProbe((Q1.as_tuple(), Q2.as_tuple()), N, None, None)


def qexpansion_coeffs(series_spec, N: int) -> list[int]:
    """Integer q-expansion coefficients of index 0..N.

    ``series_spec`` is one of

    * ``("theta", (a, b, c))`` -- binary theta series, coefficients r_Q(n);
    * ``("theta4", (a, b, c))`` -- the quaternary series (theta_Q squared);
    * ``("lambert", X)`` -- sum X(n) q^n/(1-q^n), coefficient sum_{d|n} X(d);
    * ``("character", D)`` -- 1 + p sum (n|-D) q^n/(1-q^n) for odd class-number-one D.
    """
    kind, arg = series_spec
    if kind == "theta":
        return binary_count_table(arg, N)
    if kind == "theta4":
        return quaternary_count_table(arg, N)
    if kind == "lambert":
        return [0] + [sum(arg(d) for d in divisors(n)) for n in range(1, N + 1)]
    if kind == "character":
        if arg not in CLASS_ONE_ODD:
            raise DomainError(f"character series supports D in {CLASS_ONE_ODD}")
        p = 6 if arg == -3 else 2
        return [1] + [p * sum(kronecker(d, -arg) for d in divisors(n)) for n in range(1, N + 1)]
    raise DomainError(f"unknown series kind {kind!r}")
