"""
Numeric Service - Determinants, Series Expansion and Roots
"""
import logging
import math
from functools import lru_cache

from plastic_kit.errors import ZeroConstantTerm
from plastic_kit.models.matrix import Mat3, det3
from plastic_kit.models.poly import RatFun
from plastic_kit.models.series import CubicRoots, PowerSeries

logger = logging.getLogger(__name__)


class NumericService:
    """Exact scalar foundations plus the double-precision roots of x^3 - x - 1."""

    NEWTON_START = 1.5
    NEWTON_TOLERANCE = 1e-15
    NEWTON_MAX_ITERATIONS = 100

    @staticmethod
    def det3(m: Mat3):
        return det3(m)

    @staticmethod
    def series_expand(f: RatFun, order: int) -> PowerSeries:
        """
        Maclaurin coefficients c_0..c_order of numer/denom.

        Runs the linear recurrence the denominator induces:
        c_k = (n_k - sum_{i>=1} d_i c_{k-i}) / d_0.
        """
        if order < 0:
            raise ValueError('order must be non-negative')
        d0 = f.denom[0]
        if d0 == 0:
            raise ZeroConstantTerm('denominator vanishes at y = 0')

        tail = f.denom.coefficients[1:]
        coefficients = []
        for k in range(order + 1):
            acc = f.numer[k]
            for i, d in enumerate(tail[:k], start=1):
                if d:
                    acc -= d * coefficients[k - i]
            coefficients.append(acc / d0)
        return PowerSeries(coefficients)

    @staticmethod
    def cubic_roots() -> CubicRoots:
        return _cubic_roots()

    @staticmethod
    def vandermonde(roots: CubicRoots = None) -> complex:
        """Determinant of the rows (r^2, r, 1) over alpha, beta, gamma."""
        roots = roots or _cubic_roots()
        return det3(Mat3((r * r, r, 1) for r in roots.as_tuple()))


@lru_cache(maxsize=None)
def _cubic_roots() -> CubicRoots:
    x = NumericService.NEWTON_START
    for iteration in range(NumericService.NEWTON_MAX_ITERATIONS):
        step = (x ** 3 - x - 1) / (3 * x * x - 1)
        x -= step
        if abs(step) < NumericService.NEWTON_TOLERANCE:
            break
    logger.debug('Newton converged to %r after %d iterations', x, iteration + 1)

    # x^3 - x - 1 = (x - alpha)(x^2 + alpha*x + alpha^2 - 1)
    imaginary = math.sqrt(3 * x * x - 4) / 2
    beta = complex(-x / 2, imaginary)
    return CubicRoots(alpha=x, beta=beta, gamma=beta.conjugate())
