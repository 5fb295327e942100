"""Exact univariate polynomials, rational functions, and series expansion.

Everything is computed over arbitrary-precision rationals
(fractions.Fraction), so probability generating functions can be expanded,
differentiated, and evaluated with no rounding anywhere.  Floating point is
for display only and never feeds back into these routines.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

__all__ = ["Polynomial", "RationalFunction", "moments_from_gf", "binomial"]

Scalar = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the out-of-range convention C(n, k) = 0."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class Polynomial:
    """Polynomial with Fraction coefficients, constant term first.

    Trailing zero coefficients are trimmed on construction, so equal
    polynomials compare equal.  The zero polynomial has degree -inf.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> float:
        return len(self.coefficients) - 1 if self.coefficients else -math.inf

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(merged)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coefficients])
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1 or 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("polynomial powers must be non-negative")
        result = Polynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)!r})"


class RationalFunction:
    """A ratio of polynomials.  No common-factor cancellation is attempted;
    evaluation and series expansion work directly on the given pair."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalFunction is immutable")

    def evaluate(self, x: Scalar) -> Fraction:
        den = self.denominator(x)
        if den == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.numerator(x) / den

    def series_coefficients(self, order: int) -> list[Fraction]:
        """Maclaurin coefficients c_0..c_order by exact long division.

        Needs denominator(0) != 0.  The defining recurrence is
        c_n = (a_n - sum_{j>=1} b_j c_{n-j}) / b_0 where a, b are the
        numerator and denominator coefficients.
        """
        b = self.denominator.coefficients
        if b[0] == 0:
            raise ValueError("series expansion needs a nonzero constant term in the denominator")
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = self.numerator.coefficient(n)
            for j in range(1, min(n, len(b) - 1) + 1):
                acc -= b[j] * out[n - j]
            out.append(acc / b[0])
        return out

    def derivative(self) -> "RationalFunction":
        num, den = self.numerator, self.denominator
        return RationalFunction(
            num.derivative() * den - num * den.derivative(),
            den * den,
        )

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __eq__(self, other: object) -> bool:
        # Equality as functions: cross-multiplied equality of the raw pairs.
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        raise TypeError("RationalFunction is unhashable (equality is up to cancellation)")

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"


def moments_from_gf(f: RationalFunction) -> tuple[Fraction, Fraction]:
    """Exact (mean, variance) of the distribution with probability generating
    function f: mean = f'(1), variance = f''(1) + f'(1) - f'(1)^2.

    Rejects f unless f(1) = 1 exactly.
    """
    total = f.evaluate(1)
    if total != 1:
        raise ValueError(f"not a probability generating function: f(1) = {total}")
    first = f.derivative()
    mean = first.evaluate(1)
    second = first.derivative().evaluate(1)
    return mean, second + mean - mean * mean
