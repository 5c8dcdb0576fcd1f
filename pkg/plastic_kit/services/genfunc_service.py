"""
Generating Function Service
"""
import cmath
import logging
import math

from plastic_kit import extensions
from plastic_kit.errors import DegenerateParameters, InadmissibleParams
from plastic_kit.models.matrix import Mat3, det3
from plastic_kit.models.poly import Poly, RatFun
from plastic_kit.models.series import EgfCheckpoint, PowerSeries
from plastic_kit.services.numeric_service import NumericService

logger = logging.getLogger(__name__)

Y = Poly.monomial(1, 1)
KINDS = ('P', 'Q')


def _sequence(kind: str):
    if kind not in KINDS:
        raise ValueError(f"unknown sequence '{kind}', expected P or Q")
    engine = extensions.engine
    return engine.padovan if kind == 'P' else engine.perrin


class GenFuncService:
    """Ordinary generating functions as exact rational functions, exponential ones numerically."""

    EGF_MAX_Y = 2
    EGF_COEFFICIENT_BOUND = 3  # |P_n|, |Q_n| <= 3 * alpha^|n|

    @staticmethod
    def ogf(p: int, q: int, kind: str = 'P') -> RatFun:
        """
        sum_{j>=0} S_{pj+q} y^j as numerator / denominator, both 3x3 determinants
        of matrices whose entries are linear in y.

        Raises:
            DegenerateParameters: p = 0, or the denominator is the zero polynomial
        """
        S = _sequence(kind)
        if p == 0:
            raise DegenerateParameters('p = 0 gives a constant sequence with no rational closed form', p=p)
        P = extensions.engine.padovan

        def entry(offset):
            return -P(p + offset) * Y

        numerator = Mat3((
            (Poly.constant(S(q)), entry(-3), entry(-4)),
            (Poly.constant(S(q + 1)), 1 + entry(-2), entry(-3)),
            (Poly.constant(S(q - 1)), entry(-4), 1 + entry(-5)),
        ))
        denominator = Mat3((
            (1 + entry(-2), entry(-3), entry(-4)),
            (entry(-1), 1 + entry(-2), entry(-3)),
            (entry(-3), entry(-4), 1 + entry(-5)),
        ))

        denom = det3(denominator)
        if denom.is_zero():
            raise DegenerateParameters(f'denominator vanishes identically at p = {p}', p=p)
        logger.debug('ogf(%d, %d, %s) denominator %r', p, q, kind, denom)
        return RatFun(det3(numerator), denom)

    @staticmethod
    def ogf_series(p: int, q: int, kind: str = 'P', order: int = 9) -> PowerSeries:
        return NumericService.series_expand(GenFuncService.ogf(p, q, kind), order)

    @staticmethod
    def egf_check(p: int, q: int, y: float, truncation: int, kind: str = 'P') -> EgfCheckpoint:
        """
        Compare sum_{j<=T} S_{pj+q} y^j / j! with the root determinant form
        (-i/sqrt(23)) det[w(r), r, 1] over the three roots.

        Raises:
            InadmissibleParams: truncation < 1 or |y| > 2
        """
        S = _sequence(kind)
        if truncation < 1:
            raise InadmissibleParams('truncation must be >= 1', truncation=truncation)
        if abs(y) > GenFuncService.EGF_MAX_Y:
            raise InadmissibleParams(f'|y| must be <= {GenFuncService.EGF_MAX_Y}', y=y)

        series_value = 0.0
        scale = 1.0  # y^j / j!
        for j in range(truncation + 1):
            if j:
                scale *= y / j
            series_value += float(S(p * j + q)) * scale

        if kind == 'P':
            def weight(r):
                return r ** (q + 4) * cmath.exp(r ** p * y)
        else:
            def weight(r):
                return (2 * r ** (q + 2) + r ** (q - 1)) * cmath.exp(r ** p * y)

        roots = NumericService.cubic_roots().as_tuple()
        determinant_value = -1j / math.sqrt(23) * det3(Mat3((weight(r), r, 1) for r in roots))

        residual = abs(complex(series_value) - determinant_value)
        checkpoint = EgfCheckpoint(
            p=p, q=q, y=y, truncation=truncation, kind=kind,
            series_value=complex(series_value),
            determinant_value=determinant_value,
            residual=residual,
            tail_bound=GenFuncService.tail_bound(p, q, y, truncation),
        )
        logger.debug('egf %s p=%d q=%d y=%r T=%d residual %.3e', kind, p, q, y, truncation, residual)
        return checkpoint

    @staticmethod
    def tail_bound(p: int, q: int, y: float, truncation: int) -> float:
        """Bound on sum_{j>T} |S_{pj+q}| |y|^j / j!."""
        alpha = NumericService.cubic_roots().alpha
        reach = abs(y) * alpha ** abs(p)
        head = GenFuncService.EGF_COEFFICIENT_BOUND * alpha ** abs(q) * math.exp(reach)
        # reach^(T+1)/(T+1)! without overflowing the factorial
        term = 1.0
        for k in range(1, truncation + 2):
            term *= reach / k
        return head * term
