"""
Sequence Service - Padovan and Perrin Numbers
"""
import logging
import threading
from types import MappingProxyType

from plastic_kit.errors import EmptyRange, ParityViolation
from plastic_kit.models.matrix import Mat3
from plastic_kit.models.sequence import ZeroSet

logger = logging.getLogger(__name__)

# Advances (a_n, a_{n+1}, a_{n+2}) one step; the inverse steps back
COMPANION = Mat3(((0, 1, 0), (0, 0, 1), (1, 1, 0)))
COMPANION_INVERSE = Mat3(((-1, 0, 1), (1, 0, 0), (0, 1, 0)))


class SeqEngine:
    """
    Bidirectional memoized generator of P_n and Q_n.

    The memo grows as a contiguous window per sequence. Readers never
    lock; writers extend under a lock and publish each entry whole.
    """

    SEEDS = {
        'P': (1, 1, 1),
        'Q': (3, 0, 2),
    }

    def __init__(self):
        self._memo = {kind: dict(enumerate(seeds)) for kind, seeds in self.SEEDS.items()}
        self._bounds = {kind: (0, 2) for kind in self.SEEDS}
        self._lock = threading.Lock()

    @property
    def memo_p(self):
        return MappingProxyType(self._memo['P'])

    @property
    def memo_q(self):
        return MappingProxyType(self._memo['Q'])

    def term(self, kind: str, n: int) -> int:
        memo = self._memo[kind]
        value = memo.get(n)
        if value is None:
            with self._lock:
                self._extend(kind, n)
            value = memo[n]
        return value

    def _extend(self, kind: str, n: int):
        memo = self._memo[kind]
        lo, hi = self._bounds[kind]
        while hi < n:
            hi += 1
            memo[hi] = memo[hi - 2] + memo[hi - 3]
        while lo > n:
            lo -= 1
            memo[lo] = memo[lo + 3] - memo[lo + 1]
        self._bounds[kind] = (lo, hi)

    def padovan(self, n: int) -> int:
        return self.term('P', n)

    def perrin(self, n: int) -> int:
        return self.term('Q', n)

    # Cache-free route, independent of the memo

    @staticmethod
    def _matrix_power(matrix: Mat3, exponent: int) -> Mat3:
        result, base = Mat3.identity(), matrix
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    @classmethod
    def fast_term(cls, kind: str, n: int) -> int:
        step = COMPANION if n >= 0 else COMPANION_INVERSE
        return cls._matrix_power(step, abs(n)).apply(cls.SEEDS[kind])[0]

    @classmethod
    def padovan_fast(cls, n: int) -> int:
        return cls.fast_term('P', n)

    @classmethod
    def perrin_fast(cls, n: int) -> int:
        return cls.fast_term('Q', n)

    # Closed forms

    def perrin_from_padovan(self, n: int, variant: str = 'shift4') -> int:
        P = self.padovan
        if variant == 'shift4':
            return 2 * P(n - 4) + 3 * P(n - 5)
        if variant == 'shift2':
            return 2 * P(n - 2) + P(n - 5)
        raise ValueError(f"unknown variant '{variant}', expected shift4 or shift2")

    def padovan_negative_closed(self, n: int) -> int:
        P = self.padovan
        return P(n - 7) ** 2 - P(n - 6) * P(n - 8)

    def perrin_negative_closed(self, n: int) -> int:
        Q = self.perrin
        difference = Q(n) ** 2 - Q(2 * n)
        if difference % 2:
            raise ParityViolation(f'Q_n^2 - Q_2n is odd at n = {n}', n=n, difference=str(difference))
        return difference // 2

    def padovan_zeros(self, lo: int, hi: int) -> ZeroSet:
        if lo > hi:
            raise EmptyRange(f'empty window {lo}..{hi}')
        indices = tuple(p for p in range(lo, hi + 1) if self.padovan(p) == 0)
        logger.debug('Padovan zeros in [%d, %d]: %s', lo, hi, indices)
        return ZeroSet(indices=indices, lo=lo, hi=hi)
