"""
Ring Service - Component Calculus in Q[x]/(x^3 - x - 1)
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from plastic_kit import extensions
from plastic_kit.errors import DegenerateDenominator, NotInvertible
from plastic_kit.models.matrix import Mat3, det3
from plastic_kit.models.poly import Poly
from plastic_kit.models.ring import RingElem, SetTableEntry

logger = logging.getLogger(__name__)

X = RingElem.x()
ONE = RingElem.one()
MODULUS = Poly((-1, -1, 0, 1))  # x^3 - x - 1


class RingService:
    """Arithmetic in the plastic ring and symmetric functions of the root pair over the third root."""

    @staticmethod
    def ring_mul(u: RingElem, v: RingElem) -> RingElem:
        return u * v

    @staticmethod
    def multiplication_matrix(v: RingElem) -> Mat3:
        """Matrix of u -> u*v on the (x^2, x, 1) coordinates."""
        d, e, f = v.components()
        return Mat3((
            (d + f, e, d),
            (d + e, d + f, e),
            (e, d, f),
        ))

    @staticmethod
    def _norm_determinant(v: RingElem) -> Fraction:
        if not v:
            raise NotInvertible('zero has no inverse in the plastic ring')
        den = det3(RingService.multiplication_matrix(v))
        if den == 0:
            logger.warning('Vanishing determinant for nonzero element %r', v)
            raise NotInvertible('vanishing determinant for a nonzero element', element=v.to_dict())
        return den

    @staticmethod
    def ring_inv(u: RingElem) -> RingElem:
        """Inverse by the closed form in (d, e, f) = (c2, c1, c0)."""
        den = RingService._norm_determinant(u)
        d, e, f = u.components()
        return RingElem(
            (e * e - d * d - f * d) / den,
            (d * d - e * f) / den,
            (d * d + 2 * f * d + f * f - e * d - e * e) / den,
        )

    @staticmethod
    def ring_inv_euclid(u: RingElem) -> RingElem:
        """Inverse by the extended Euclidean algorithm against x^3 - x - 1."""
        if not u:
            raise NotInvertible('zero has no inverse in the plastic ring')
        r0, r1 = MODULUS, Poly(u.poly_coefficients())
        s0, s1 = Poly(), Poly((1,))
        while not r1.is_zero():
            quotient, remainder = r0.divmod(r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, s0 - quotient * s1
        # r0 is the (constant) gcd
        inverse = s0 * (1 / r0[0])
        return RingElem.from_poly_coefficients(inverse.coefficients)

    @staticmethod
    def ring_div(u: RingElem, v: RingElem) -> RingElem:
        return u * RingService.ring_inv(v)

    @staticmethod
    def quotient_by_determinants(u: RingElem, v: RingElem) -> RingElem:
        """u / v component by component, Cramer's rule on the multiplication matrix of v."""
        den = RingService._norm_determinant(v)
        a, b, c = u.components()
        d, e, f = v.components()
        return RingElem(
            det3(Mat3(((a, e, d), (b, d + f, e), (c, d, f)))) / den,
            det3(Mat3(((d + f, a, d), (d + e, b, e), (e, c, f)))) / den,
            det3(Mat3(((d + f, e, a), (d + e, d + f, b), (e, d, c)))) / den,
        )

    @staticmethod
    def inverse_linear(e, f) -> RingElem:
        """1 / (e*x + f), closed form."""
        e, f = Fraction(e), Fraction(f)
        den = e ** 3 - e * e * f + f ** 3
        if den == 0:
            raise NotInvertible('e*x + f is zero')
        return RingElem(e * e / den, -e * f / den, (f * f - e * e) / den)

    @staticmethod
    def inverse_quadratic(d, e) -> RingElem:
        """1 / (d*x^2 + e*x), closed form."""
        d, e = Fraction(d), Fraction(e)
        den = e ** 3 + d ** 3 - e * d * d
        if den == 0:
            raise NotInvertible('d*x^2 + e*x is zero')
        return RingElem((e * e - d * d) / den, d * d / den, (d * d - e * d - e * e) / den)

    @staticmethod
    @lru_cache(maxsize=None)
    def alpha_pow(n: int) -> RingElem:
        if n >= 0:
            return X ** n
        return RingService.ring_inv(RingService.alpha_pow(-n))

    @staticmethod
    def perrin_combo(n: int) -> RingElem:
        return 2 * RingService.alpha_pow(n + 2) + RingService.alpha_pow(n - 1)

    @staticmethod
    def component_product(f: RingElem, g: RingElem, j: int) -> Fraction:
        """Component j of f*g from the composition rules alone."""
        f2, f1, f0 = f.components()
        g2, g1, g0 = g.components()
        if j == 2:
            return f0 * g2 + f2 * g0 + f1 * g1 + f2 * g2
        if j == 1:
            return f0 * g1 + f1 * g0 + f2 * g1 + f1 * g2 + f2 * g2
        if j == 0:
            return f0 * g0 + f1 * g2 + f2 * g1
        raise ValueError(f'component index must be 0, 1 or 2, got {j}')

    @staticmethod
    def set_table_check(entry: SetTableEntry, m: int) -> bool:
        power = RingService.alpha_pow
        lhs = entry.a * power(m + entry.c) + entry.b * power(m + entry.d)
        return lhs == entry.f * power(m + entry.e)

    # Symmetric functions of the pair, written over the third root x

    @staticmethod
    def vieta() -> Tuple[RingElem, RingElem]:
        """(e1, e2) = (alpha + beta, alpha * beta) = (-x, 1/x)."""
        return -X, RingService.ring_inv(X)

    @staticmethod
    def _newton(first: RingElem, second: RingElem, r: int) -> RingElem:
        e1, e2 = RingService.vieta()
        lo, hi = first, second  # (t_k, t_{k+1}) at k = 0
        if r >= 0:
            for _ in range(r):
                lo, hi = hi, e1 * hi - e2 * lo
            return lo
        # t_{k-1} = (e1*t_k - t_{k+1}) / e2, and 1/e2 = x
        for _ in range(-r):
            lo, hi = (e1 * lo - hi) * X, lo
        return lo

    @staticmethod
    @lru_cache(maxsize=None)
    def pair_power_sum(r: int) -> RingElem:
        return RingService._newton(RingElem(0, 0, 2), -X, r)

    @staticmethod
    @lru_cache(maxsize=None)
    def pair_diff_quot(r: int) -> RingElem:
        return RingService._newton(RingElem.zero(), ONE, r)

    @staticmethod
    def gamma_component_pair(r: int, t: int) -> Fraction:
        return RingService.ring_mul(RingService.pair_power_sum(r), RingService.alpha_pow(t)).c2

    @staticmethod
    def gamma_component_ratio(r: int, s: int, t: int) -> Fraction:
        if s == 0:
            raise DegenerateDenominator('s = 0 makes the denominator vanish', s=s)
        ratio = RingService.ring_div(RingService.pair_diff_quot(r), RingService.pair_diff_quot(s))
        return RingService.ring_mul(ratio, RingService.alpha_pow(t)).c2

    # Identity suites, each a map name -> (lhs, rhs)

    @staticmethod
    def lemma_identities() -> Dict[str, Tuple[RingElem, RingElem]]:
        inv = RingService.ring_inv
        return {
            'alpha-plus-one': (X + 1, X ** 3),
            'alpha-minus-one': (X - 1, inv(X ** 4)),
            'alpha-squared-minus-one': (X ** 2 - 1, inv(X)),
            'alpha-fourth-plus-one': (X ** 4 + 1, X ** 5),
            'alpha-seventh-plus-one': (X ** 7 + 1, 2 * X ** 5),
            'alpha-seventh-minus-one': (X ** 7 - 1, 2 * X ** 4),
            'alpha-fourteenth-minus-one': (X ** 14 - 1, 4 * X ** 9),
        }

    @staticmethod
    def symmetric_identities() -> Dict[str, Tuple[RingElem, RingElem]]:
        inv = RingService.ring_inv
        e1, e2 = RingService.vieta()
        s2 = RingService.pair_power_sum(2)
        d2 = RingService.pair_diff_quot(2)
        inv_x = inv(X)
        return {
            'pair-square-sum': (s2, 2 - X ** 2),
            'pair-square-sum-alt': (s2, X ** 2 - 2 * inv_x),
            'pair-difference-squared': (e1 * e1 - 4 * e2, 1 - 3 * inv_x),
            'pair-difference-squared-alt': (1 - 3 * inv_x, 4 - 3 * X ** 2),
            'pair-mixed-cubic': (e2 * e1, RingElem(0, 0, -1)),
            'pair-square-difference-squared': (d2 * d2 * (e1 * e1 - 4 * e2), X ** 2 - 3 * X),
            'pair-ratio-sum': (s2 * inv(e2), X - 1),
            'pair-ratio-sum-alt': (s2 * inv(e2), inv_x ** 4),
            'pair-inverse-square-sum': (s2 * inv(e2 * e2), inv_x ** 3),
        }

    @staticmethod
    def power_identities(n: int) -> Dict[str, Tuple[RingElem, RingElem]]:
        P, Q = extensions.engine.padovan, extensions.engine.perrin
        d_n = RingService.pair_diff_quot(n)
        a, b = P(n - 4), P(n - 3)
        return {
            'alpha-power': (RingService.alpha_pow(n), RingElem(P(n - 4), P(n - 3), P(n - 5))),
            'perrin-combo': (RingService.perrin_combo(n), RingElem(Q(n), Q(n + 1), Q(n - 1))),
            'power-sum': (RingService.pair_power_sum(n), RingElem(-P(n - 4), -P(n - 3), 2 * P(n - 2))),
            'power-sum-perrin': (RingService.pair_power_sum(n), Q(n) - RingService.alpha_pow(n)),
            'diff-quotient': (RingService.pair_diff_quot(n), RingElem(0, -P(n - 4), P(n - 3))),
            'squared-difference': (
                d_n * d_n * (4 - 3 * X ** 2),
                RingElem(a * a - 3 * b * b, -(3 * a * a + 2 * a * b), 4 * b * b + 6 * a * b),
            ),
        }

    @staticmethod
    def lemma_checks() -> Dict[str, bool]:
        """Named verdicts for the fixed ring identities."""
        pairs = {**RingService.lemma_identities(), **RingService.symmetric_identities()}
        return {name: lhs == rhs for name, (lhs, rhs) in pairs.items()}
