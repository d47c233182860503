"""Exact Laurent polynomials over Z and truncated power series over Q."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial, stored as exponent -> coefficient."""

    coeffs: tuple[tuple[int, int], ...] = field(default=())

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "LaurentPolynomial":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls.from_dict({0: c})

    @classmethod
    def t(cls, exponent: int = 1, coeff: int = 1) -> "LaurentPolynomial":
        return cls.from_dict({exponent: coeff})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        d = self.as_dict()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return LaurentPolynomial.from_dict(d)

    def __sub__(self, other):
        d = self.as_dict()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) - c
        return LaurentPolynomial.from_dict(d)

    def __neg__(self):
        return LaurentPolynomial(tuple((e, -c) for e, c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(
                tuple((e, c * other) for e, c in self.coeffs if c * other != 0)
            )
        d: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial.from_dict(d)

    def shifted(self, m: int) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e + m, c) for e, c in self.coeffs))

    def __call__(self, value=1):
        if value == 1:
            return sum(c for _, c in self.coeffs)
        return sum(c * value**e for e, c in self.coeffs)

    def derivative_at_one(self) -> int:
        return sum(c * e for e, c in self.coeffs)

    def lowest(self) -> int:
        return self.coeffs[0][0] if self.coeffs else 0

    def to_json_dict(self) -> dict:
        if not self.coeffs:
            return {"lo": 0, "coeffs": [0]}
        lo = self.coeffs[0][0]
        hi = self.coeffs[-1][0]
        d = self.as_dict()
        return {"lo": lo, "coeffs": [d.get(e, 0) for e in range(lo, hi + 1)]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "LaurentPolynomial":
        lo = int(data["lo"])
        return cls.from_dict({lo + i: int(c) for i, c in enumerate(data["coeffs"])})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in self.coeffs:
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*t")
            else:
                bits.append(f"{c}*t^{e}")
        return " + ".join(bits).replace("+ -", "- ")


ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()


@dataclass(frozen=True)
class TruncatedSeries:
    """Truncated formal power series with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]  # coefficient of h^0 .. h^order

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(tuple([Fraction(0)] * (order + 1)))

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[0] = Fraction(c)
        return cls(tuple(coeffs))

    @classmethod
    def exp_h(cls, multiple: int, order: int) -> "TruncatedSeries":
        """Series of exp(multiple * h)."""
        coeffs = []
        term = Fraction(1)
        for n in range(order + 1):
            if n:
                term = term * multiple / n
            coeffs.append(term)
        return cls(tuple(coeffs))

    def __add__(self, other):
        n = max(self.order, other.order)
        a = list(self.coeffs) + [Fraction(0)] * (n - self.order)
        b = list(other.coeffs) + [Fraction(0)] * (n - other.order)
        return TruncatedSeries(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, factor) -> "TruncatedSeries":
        f = Fraction(factor)
        return TruncatedSeries(tuple(c * f for c in self.coeffs))

    def __mul__(self, other):
        n = min(self.order, other.order) if isinstance(other, TruncatedSeries) else None
        if n is None:
            return self.scaled(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        u = TruncatedSeries((Fraction(0),) + self.coeffs[1:])
        total = TruncatedSeries.zero(n)
        power = TruncatedSeries.constant(1, n)
        for j in range(1, n + 1):
            power = power * u
            total = total + power.scaled(Fraction((-1) ** (j + 1), j))
        return total

    def exp(self) -> "TruncatedSeries":
        """exp of a series with constant term 0."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires constant term 0")
        n = self.order
        total = TruncatedSeries.constant(1, n)
        power = TruncatedSeries.constant(1, n)
        fact = Fraction(1)
        for j in range(1, n + 1):
            power = power * self
            fact = fact / j
            total = total + power.scaled(fact)
        return total

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n] if n <= self.order else Fraction(0)


def laurent_at_exp_h(poly: LaurentPolynomial, order: int) -> TruncatedSeries:
    """Evaluate a Laurent polynomial at t = e^h as a truncated series."""
    total = TruncatedSeries.zero(order)
    for e, c in poly.coeffs:
        total = total + TruncatedSeries.exp_h(e, order).scaled(c)
    return total
