"""
Parameter Grid Model
"""
import itertools
import math
import re
from typing import Dict, Iterator, Tuple

from plastic_kit.errors import CapExceeded, EmptyRange, GridSyntaxError

DEFAULT_POINT_CAP = 10 ** 6

_NAME = re.compile(r'\s*([A-Za-z_][A-Za-z0-9_]*)\s*=')
_INT = re.compile(r'\s*([+-]?\d+)')
_SPACE = re.compile(r'\s*')


class ParamGrid:
    """
    Named integer ranges; points are their Cartesian product.

    Points come out in lexicographic order of (sorted names, ascending values).
    """

    __slots__ = ('ranges',)

    def __init__(self, ranges: Dict[str, Tuple[int, ...]]):
        self.ranges = {name: tuple(values) for name, values in ranges.items()}

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(sorted(self.ranges))

    @property
    def count(self) -> int:
        return math.prod(len(set(values)) for values in self.ranges.values())

    def points(self) -> Iterator[Dict[str, int]]:
        names = self.names
        axes = [sorted(set(self.ranges[name])) for name in names]
        for combo in itertools.product(*axes):
            yield dict(zip(names, combo))

    def merge(self, other: 'ParamGrid') -> 'ParamGrid':
        """Names in other replace those in self."""
        return ParamGrid({**self.ranges, **other.ranges})

    def format(self) -> str:
        clauses = []
        for name, values in self.ranges.items():
            lo, hi = values[0], values[-1]
            if len(values) > 1 and values == tuple(range(lo, hi + 1)):
                clauses.append(f'{name}={lo}..{hi}')
            else:
                clauses.append(f'{name}=' + ','.join(str(v) for v in values))
        return ';'.join(clauses)

    def __eq__(self, other):
        if not isinstance(other, ParamGrid):
            return NotImplemented
        return self.ranges == other.ranges

    def __repr__(self):
        return f'<ParamGrid {self.format()} ({self.count} points)>'


def _integer(spec: str, pos: int) -> Tuple[int, int]:
    match = _INT.match(spec, pos)
    if not match:
        raise GridSyntaxError('expected an integer', _SPACE.match(spec, pos).end())
    return int(match.group(1)), match.end()


def parse_grid(spec: str, cap: int = DEFAULT_POINT_CAP) -> ParamGrid:
    """
    Parse 'name=lo..hi' and 'name=v1,v2,...' clauses joined by ';'.

    Raises:
        GridSyntaxError: with the offset of the offending character
        EmptyRange: lo > hi
        CapExceeded: more than cap points
    """
    if not spec or not spec.strip():
        raise GridSyntaxError('empty grid specification', 0)

    ranges = {}
    pos = 0
    while True:
        match = _NAME.match(spec, pos)
        if not match:
            raise GridSyntaxError('expected parameter name followed by "="', _SPACE.match(spec, pos).end())
        name = match.group(1)
        if name in ranges:
            raise GridSyntaxError(f"parameter '{name}' given twice", match.start(1))
        pos = match.end()

        lo, pos = _integer(spec, pos)
        if spec.startswith('..', pos):
            hi, pos = _integer(spec, pos + 2)
            if lo > hi:
                raise EmptyRange(f'{name}={lo}..{hi} is empty', name=name)
            values = tuple(range(lo, hi + 1))
        else:
            values = [lo]
            while spec.startswith(',', pos):
                value, pos = _integer(spec, pos + 1)
                values.append(value)
            values = tuple(values)
        ranges[name] = values

        pos = _SPACE.match(spec, pos).end()
        if pos == len(spec):
            break
        if spec[pos] != ';':
            raise GridSyntaxError('expected ";" or end of grid', pos)
        pos += 1

    grid = ParamGrid(ranges)
    if grid.count > cap:
        raise CapExceeded(f'grid has {grid.count} points, cap is {cap}', count=grid.count, cap=cap)
    return grid
