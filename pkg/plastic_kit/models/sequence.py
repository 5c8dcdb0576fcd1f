"""
Sequence Models
"""
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class ZeroSet:
    """Indices p in the window [lo, hi] where P_p = 0."""

    indices: Tuple[int, ...]
    lo: int
    hi: int

    def __contains__(self, index: int) -> bool:
        return index in self.indices
