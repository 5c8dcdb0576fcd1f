"""
Polynomial and Rational Function Models
"""
import math
from fractions import Fraction
from typing import Iterable, Union

from plastic_kit.errors import DegenerateDenominator

Scalar = Union[int, Fraction]

# Degree of the zero polynomial
ZERO_DEGREE = -math.inf


class Poly:
    """Polynomial in y with exact rational coefficients, lowest degree first."""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def constant(cls, value: Scalar) -> 'Poly':
        return cls((value,))

    @classmethod
    def monomial(cls, value: Scalar, power: int) -> 'Poly':
        return cls([0] * power + [value])

    @property
    def degree(self):
        if not self.coefficients:
            return ZERO_DEGREE
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coefficients), len(other.coefficients))
        return Poly(self[k] + other[k] for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coefficients)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Poly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return Poly(product)

    __rmul__ = __mul__

    def divmod(self, divisor: 'Poly'):
        """Long division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise DegenerateDenominator('division by the zero polynomial')
        remainder = list(self.coefficients)
        lead = divisor.coefficients[-1]
        shift = len(remainder) - len(divisor.coefficients)
        quotient = [Fraction(0)] * max(shift + 1, 0)
        while shift >= 0:
            factor = remainder[shift + len(divisor.coefficients) - 1] / lead
            quotient[shift] = factor
            if factor:
                for k, c in enumerate(divisor.coefficients):
                    remainder[shift + k] -= factor * c
            shift -= 1
        return Poly(quotient), Poly(remainder)

    def __call__(self, value):
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f'<Poly {list(map(str, self.coefficients))}>'

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {'coefficients': [str(c) for c in self.coefficients]}


class RatFun:
    """
    Quotient of two polynomials in y.

    The stored form is not reduced; equality cross-multiplies.
    """

    __slots__ = ('numer', 'denom')

    def __init__(self, numer: Poly, denom: Poly):
        if denom.is_zero():
            raise DegenerateDenominator('rational function with zero denominator')
        self.numer = numer
        self.denom = denom

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.numer * other.denom == other.numer * self.denom

    def __hash__(self):
        return hash((self.numer, self.denom))

    def __repr__(self):
        return f'<RatFun {self.numer!r} / {self.denom!r}>'

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {'numer': self.numer.to_dict(), 'denom': self.denom.to_dict()}
