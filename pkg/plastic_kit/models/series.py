"""
Generating Function Models
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple


class PowerSeries:
    """Truncated Maclaurin series; coefficient k is the y^k term."""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients: Iterable):
        self.coefficients: Tuple[Fraction, ...] = tuple(Fraction(c) for c in coefficients)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def truncate(self, order: int) -> 'PowerSeries':
        return PowerSeries(self.coefficients[:order + 1])

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return list(self.coefficients) == list(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f'<PowerSeries order={self.order}>'


@dataclass(frozen=True)
class EgfCheckpoint:
    """One numeric comparison of the exponential generating function."""

    p: int
    q: int
    y: float
    truncation: int
    kind: str
    series_value: complex
    determinant_value: complex
    residual: float
    tail_bound: float

    @property
    def within(self) -> bool:
        return self.residual <= max(self.tail_bound, 0.0) + 1e-12


@dataclass(frozen=True)
class CubicRoots:
    """Numeric roots of x^3 - x - 1: the plastic number and a conjugate pair."""

    alpha: float
    beta: complex
    gamma: complex

    def as_tuple(self) -> tuple:
        return complex(self.alpha), self.beta, self.gamma
