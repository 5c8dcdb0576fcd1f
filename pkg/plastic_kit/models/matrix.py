"""
3x3 Matrix Model
"""
from typing import Callable, Iterable, Sequence


class Mat3:
    """3x3 matrix over any scalar supporting +, - and * (Fraction, int, Poly, complex)."""

    __slots__ = ('rows',)

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError('Mat3 needs exactly 9 entries in 3 rows')
        self.rows = rows

    @classmethod
    def identity(cls) -> 'Mat3':
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def map(self, fn: Callable) -> 'Mat3':
        return Mat3(tuple(fn(v) for v in row) for row in self.rows)

    def scale_row(self, index: int, factor) -> 'Mat3':
        return Mat3(
            tuple(v * factor for v in row) if i == index else row
            for i, row in enumerate(self.rows)
        )

    def apply(self, vector: Sequence) -> tuple:
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.rows)

    def __matmul__(self, other: 'Mat3') -> 'Mat3':
        columns = tuple(zip(*other.rows))
        return Mat3(
            tuple(sum(a * b for a, b in zip(row, column)) for column in columns)
            for row in self.rows
        )

    def det(self):
        return det3(self)

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f'<Mat3 {self.rows}>'


def det3(m: Mat3):
    """Cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
