"""Exact univariate polynomials in t with rational coefficients.

Everything here is integer/Fraction arithmetic; no floating point is used
anywhere in the package.  The main consumers build Hilbert polynomials as
alternating sums of products of shifted binomial coefficients, e.g.

>>> p = binomial_shift_polynomial(1, 0) * binomial_shift_polynomial(2, 0)
>>> str(p)  # chi of O(t,t) on P^1 x P^2
'(1/2)t^3 + 2t^2 + (5/2)t + 1'
>>> p(3)
Fraction(40, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _normalized(coefficients: Iterable[Scalar]) -> tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in one variable, coefficients indexed by power of t.

    The coefficient tuple never has a trailing zero, so the zero polynomial
    is the empty tuple and reports degree -1.
    """

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Scalar]) -> "RationalPolynomial":
        return cls(_normalized(coefficients))

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPolynomial":
        return cls((Fraction(1),))

    @classmethod
    def constant(cls, value: Scalar) -> "RationalPolynomial":
        return cls.from_coefficients([value])

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        longer, shorter = self.coefficients, other.coefficients
        if len(longer) < len(shorter):
            longer, shorter = shorter, longer
        summed = list(longer)
        for i, c in enumerate(shorter):
            summed[i] += c
        return RationalPolynomial(_normalized(summed))

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["RationalPolynomial", Scalar]) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(_normalized(c * other for c in self.coefficients))
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients))
        for i, ci in enumerate(self.coefficients):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coefficients):
                product[i + j] += ci * cj
        return RationalPolynomial(_normalized(product))

    def __rmul__(self, other: Scalar) -> "RationalPolynomial":
        return self * other

    def __call__(self, value: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def is_integer_valued_at(self, value: int) -> bool:
        return self(value).denominator == 1

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            parts.append(sign)
            parts.append(_monomial(abs(c), power))
        # Drop the leading "+", glue a leading "-" onto the first monomial.
        if parts[0] == "+":
            parts = parts[1:]
        else:
            parts = [f"-{parts[1]}"] + parts[2:]
        return " ".join(parts)


def _monomial(c: Fraction, power: int) -> str:
    if power == 0:
        return _fraction_str(c)
    var = "t" if power == 1 else f"t^{power}"
    if c == 1:
        return var
    if c.denominator == 1:
        return f"{c.numerator}{var}"
    return f"({_fraction_str(c)}){var}"


def _fraction_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def binomial_shift_polynomial(k: int, shift: int = 0) -> RationalPolynomial:
    """binomial(t - shift + k, k) as a polynomial in t.

    Expands the falling factorial (t - shift + k)(t - shift + k - 1) ...
    (t - shift + 1) / k! exactly.  Evaluating at an integer t agrees with the
    generalized binomial coefficient, including at negative arguments.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    poly = RationalPolynomial.one()
    for j in range(1, k + 1):
        poly = poly * RationalPolynomial.from_coefficients([j - shift, 1])
    return poly * Fraction(1, factorial(k))
