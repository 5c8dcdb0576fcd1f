"""
Plastic Ring Models
"""
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Tuple


class RingElem:
    """
    Element c2*x^2 + c1*x + c0 of Q[x]/(x^3 - x - 1).

    x stands for any of the three roots alpha, beta, gamma, so one
    equality of RingElems holds for all three roots at once.
    Components compare exactly since 1, x, x^2 are linearly independent.
    """

    __slots__ = ('c2', 'c1', 'c0')

    def __init__(self, c2=0, c1=0, c0=0):
        self.c2 = Fraction(c2)
        self.c1 = Fraction(c1)
        self.c0 = Fraction(c0)

    @classmethod
    def x(cls) -> 'RingElem':
        return cls(0, 1, 0)

    @classmethod
    def one(cls) -> 'RingElem':
        return cls(0, 0, 1)

    @classmethod
    def zero(cls) -> 'RingElem':
        return cls()

    @classmethod
    def from_poly_coefficients(cls, coefficients: Iterable) -> 'RingElem':
        """Reduce an arbitrary polynomial (lowest degree first) with x^k = x^(k-2) + x^(k-3)."""
        coeffs = [Fraction(c) for c in coefficients]
        for k in range(len(coeffs) - 1, 2, -1):
            top = coeffs[k]
            if top:
                coeffs[k - 2] += top
                coeffs[k - 3] += top
        coeffs += [Fraction(0)] * (3 - len(coeffs))
        return cls(coeffs[2], coeffs[1], coeffs[0])

    def components(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.c2, self.c1, self.c0

    def component(self, j: int) -> Fraction:
        if j == 2:
            return self.c2
        if j == 1:
            return self.c1
        if j == 0:
            return self.c0
        raise ValueError(f'component index must be 0, 1 or 2, got {j}')

    def poly_coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.c0, self.c1, self.c2

    @staticmethod
    def _coerce(other):
        if isinstance(other, RingElem):
            return other
        if isinstance(other, (int, Fraction)):
            return RingElem(0, 0, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.c2 + other.c2, self.c1 + other.c1, self.c0 + other.c0)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(-self.c2, -self.c1, -self.c0)

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
        a, b = self.poly_coefficients(), other.poly_coefficients()
        raw = [Fraction(0)] * 5
        for i in range(3):
            for j in range(3):
                raw[i + j] += a[i] * b[j]
        return RingElem.from_poly_coefficients(raw)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError('negative powers need ring inversion')
        result, base = RingElem.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return bool(self.c2 or self.c1 or self.c0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.components() == other.components()

    def __hash__(self):
        return hash(self.components())

    def __repr__(self):
        return f'<RingElem {self.c2}*x^2 + {self.c1}*x + {self.c0}>'

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {'c2': str(self.c2), 'c1': str(self.c1), 'c0': str(self.c0)}


@dataclass(frozen=True)
class SetTableEntry:
    """Integer row (a, b, c, d, e, f) with a*x^(m+c) + b*x^(m+d) = f*x^(m+e) for every m."""

    set_id: int
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def perturbed(self, **changes) -> 'SetTableEntry':
        return replace(self, **changes)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {
            'set_id': self.set_id,
            'a': self.a, 'b': self.b, 'c': self.c,
            'd': self.d, 'e': self.e, 'f': self.f,
        }


SET_TABLE = (
    SetTableEntry(1, 1, -1, 1, -1, -2, 1),
    SetTableEntry(2, 1, -1, 1, -2, -1, 1),
    SetTableEntry(3, 1, 1, -1, -2, 1, 1),
    SetTableEntry(4, 1, 1, 2, -2, 3, 1),
    SetTableEntry(5, 1, -1, 3, 2, -2, 1),
    SetTableEntry(6, 1, -1, 3, -2, 2, 1),
    SetTableEntry(7, 2, -1, -1, 1, -6, 1),
    SetTableEntry(8, 2, -1, -1, -6, 1, 1),
    SetTableEntry(9, 1, 1, 1, -6, -1, 2),
    SetTableEntry(10, 2, 1, 2, -2, 5, 1),
    SetTableEntry(11, 1, -1, 5, -2, 2, 2),
    SetTableEntry(12, 1, -2, 5, 2, -2, 1),
    SetTableEntry(13, 1, -1, 7, -7, 2, 4),
    SetTableEntry(14, 1, -4, 7, 2, -7, 1),
    SetTableEntry(15, 1, 4, -7, 2, 7, 1),
)


def set_entry(set_id: int) -> SetTableEntry:
    """Look up a set-table row by its 1-based id."""
    if not 1 <= set_id <= len(SET_TABLE):
        raise KeyError(f'no set-table row {set_id}')
    return SET_TABLE[set_id - 1]
