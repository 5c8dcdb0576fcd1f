"""
Closed-form kernels shared by the catalog's right-hand sides.
"""
from fractions import Fraction
from math import comb

from plastic_kit.errors import InadmissibleParams
from plastic_kit.extensions import engine
from plastic_kit.models.matrix import Mat3
from plastic_kit.services.numeric_service import NumericService

P = engine.padovan
Q = engine.perrin


def sign(k: int) -> int:
    """(-1)^k for any integer k."""
    return -1 if k & 1 else 1


def power(base, exponent: int) -> Fraction:
    return Fraction(base) ** exponent


def waring_weight(n: int, j: int) -> Fraction:
    """n/(n-j) * C(n-j, j), for 0 <= 2j <= n and n >= 1."""
    return Fraction(n, n - j) * comb(n - j, j)


def ratio(numerator: Mat3, denominator: Mat3) -> Fraction:
    """det(numerator) / det(denominator) over exact rationals."""
    den = NumericService.det3(denominator.map(Fraction))
    if den == 0:
        raise InadmissibleParams('denominator determinant vanishes')
    return NumericService.det3(numerator.map(Fraction)) / den


def progression_denominator(p: int) -> Mat3:
    return Mat3((
        (P(p - 2) - 1, P(p - 3), P(p - 4)),
        (P(p - 1), P(p - 2) - 1, P(p - 3)),
        (P(p - 3), P(p - 4), P(p - 5) - 1),
    ))


def progression_numerator(S, p: int, top: int, bottom: int) -> Mat3:
    """First column from S at the shifted ends of the progression, the rest from P."""
    return Mat3((
        (S(top) - S(bottom), P(p - 3), P(p - 4)),
        (S(top + 1) - S(bottom + 1), P(p - 2) - 1, P(p - 3)),
        (S(top - 1) - S(bottom - 1), P(p - 4), P(p - 5) - 1),
    ))


def progression_sum(S, p: int, q: int, n: int) -> Fraction:
    """sum_{j=0}^{n} S_{pj+q} in closed form."""
    return ratio(progression_numerator(S, p, p * n + p + q, q), progression_denominator(p))


def gamma_ratio(r: int, s: int, t: int) -> Fraction:
    """Squared-root component of ((a^r - b^r)/(a^s - b^s)) * c^t as a ratio of determinants."""
    u, v = P(s - 4), P(s - 3)
    denominator = Mat3(((-v, u, 0), (u, -v, u), (u, 0, -v)))
    numerator = Mat3((
        (P(t - 3) * P(r - 4) - P(t - 4) * P(r - 3), u, 0),
        (P(t - 2) * P(r - 4) - P(t - 3) * P(r - 3), -v, u),
        (P(t - 4) * P(r - 4) - P(t - 5) * P(r - 3), 0, -v),
    ))
    return ratio(numerator, denominator)
