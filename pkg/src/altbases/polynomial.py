"""Integer bivariate polynomials in u and v."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

import sympy


@dataclass(frozen=True)
class BivariatePolyZZ:
    """sum of coeffs[(i, j)] * u**i * v**j with integer coefficients."""

    coeffs: tuple  # sorted ((i, j), c) pairs, zero coefficients dropped

    @classmethod
    def from_dict(cls, d: dict) -> "BivariatePolyZZ":
        return cls(tuple(sorted((k, int(c)) for k, c in d.items() if c)))

    @classmethod
    def parse(cls, text: str, u: str = "u", v: str = "v") -> "BivariatePolyZZ":
        U, V = sympy.symbols(f"{u} {v}")
        poly = sympy.Poly(sympy.sympify(text, locals={u: U, v: V}), U, V)
        if any(not c.is_integer for c in poly.coeffs()):
            raise ValueError("polynomial has non-integer coefficients")
        return cls.from_dict({k: int(c) for k, c in poly.terms()})

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    @property
    def degree_u(self) -> int:
        return max((i for (i, _), _c in self.coeffs), default=0)

    @property
    def degree_v(self) -> int:
        return max((j for (_, j), _c in self.coeffs), default=0)

    def __call__(self, u, v):
        upow = [1]
        for _ in range(self.degree_u):
            upow.append(upow[-1] * u)
        vpow = [1]
        for _ in range(self.degree_v):
            vpow.append(vpow[-1] * v)
        return sum(c * upow[i] * vpow[j] for (i, j), c in self.coeffs)

    def abs_terms(self, u, v):
        """sum |c u^i v^j|, the natural scale for a residual."""
        return sum(abs(c * u**i * v**j) for (i, j), c in self.coeffs)

    def diff_u(self) -> "BivariatePolyZZ":
        return BivariatePolyZZ.from_dict({(i - 1, j): i * c for (i, j), c in self.coeffs if i})

    def diff_v(self) -> "BivariatePolyZZ":
        return BivariatePolyZZ.from_dict({(i, j - 1): j * c for (i, j), c in self.coeffs if j})

    def coefficients_in_u(self, v) -> list:
        """Coefficients of the polynomial in u at fixed v, highest degree first."""
        out = [0] * (self.degree_u + 1)
        for (i, j), c in self.coeffs:
            out[self.degree_u - i] += c * v**j
        return out

    def content(self) -> int:
        return reduce(gcd, (abs(c) for _, c in self.coeffs), 0)

    def primitive(self) -> "BivariatePolyZZ":
        """Divide out the content and make the last graded coefficient positive."""
        g = self.content() or 1
        terms = self.graded_terms()
        sign = -1 if terms and terms[-1][1] < 0 else 1
        return BivariatePolyZZ.from_dict({k: sign * c // g for k, c in self.coeffs})

    def proportional_to(self, other: "BivariatePolyZZ") -> bool:
        return self.primitive() == other.primitive()

    def graded_terms(self) -> list:
        # v-degree major, u-degree minor: the order the polynomials are usually printed in
        return sorted(self.coeffs, key=lambda t: (t[0][1], t[0][0]))

    def to_string(self, u: str = "u", v: str = "v") -> str:
        parts = []
        for (i, j), c in self.graded_terms():
            mono = "*".join(
                s for s in (
                    "" if i == 0 else (u if i == 1 else f"{u}^{i}"),
                    "" if j == 0 else (v if j == 1 else f"{v}^{j}"),
                ) if s
            )
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self) -> str:
        return self.to_string()
