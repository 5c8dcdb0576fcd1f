"""
Double binomial identities: products of Padovan powers and the double Waring sums.
"""
from math import comb

from plastic_kit.extensions import engine
from plastic_kit.models.identity import INTEGER, POSITIVE
from plastic_kit.models.matrix import Mat3
from plastic_kit.services.identities.base import Correction, register
from plastic_kit.services.identities.kernels import gamma_ratio, ratio, sign, waring_weight

P = engine.padovan
Q = engine.perrin

FAMILY = 'double-binomial'
PRODUCT_GRID = 'm=-4..4;n=1..6;p=-4..4;q=-4..4'
PRODUCT_SMALL = 'm=-2..2;n=1..3;p=-2..2;q=-1..1'
WARING_GRID = 'n=1..8;p=-5..5;q=-6..6'
WARING_SMALL = 'n=1..4;p=-2..2;q=-2..2'


def _power_product(base, S, offset, n):
    """sum_{j<=n} sum_{k<=j} C(n,j) C(j,k) P_{base-4}^k P_{base-3}^(j-k) P_{base-5}^(n-j) S_{offset+k+j}."""
    u, v, w = P(base - 4), P(base - 3), P(base - 5)
    return sum(
        comb(n, j) * comb(j, k) * u ** k * v ** (j - k) * w ** (n - j) * S(offset + k + j)
        for j in range(n + 1)
        for k in range(j + 1)
    )


PRODUCT_FORMS = (
    ('p', P, 'P'), ('m', P, 'P'), ('p', Q, 'Q'), ('m', Q, 'Q'),
)

for _number, (_base, _S, _kind) in enumerate(PRODUCT_FORMS, start=1):
    _other = 'm' if _base == 'p' else 'p'
    register(
        f'double-binom-product-{_number}', f'Double binomial {_kind} sum {_number}',
        ('double binomial theorem',
         f'sum_j sum_k C(n,j) C(j,k) P_{{{_base}-4}}^k P_{{{_base}-3}}^{{j-k}} P_{{{_base}-5}}^{{n-j}} '
         f'{_kind}_{{{_other}n+q+k+j}} = {_kind}_{{(m+p)n+q}}'),
        [('m', INTEGER), ('p', INTEGER), ('q', INTEGER), ('n', POSITIVE)],
        lhs=lambda m, p, q, n, base=_base, S=_S: (
            _power_product(p, S, m * n + q, n) if base == 'p' else _power_product(m, S, p * n + q, n)
        ),
        rhs=lambda m, p, q, n, S=_S: S((m + p) * n + q),
        grid=PRODUCT_GRID, small_grid=PRODUCT_SMALL, family=FAMILY,
    )


def _double_waring(n, weight, term):
    """sum_{j<=n/2} sum_{k<=n-2j} (-1)^(j+k) weight(n, j) C(n-2j, k) term(j, k)."""
    return sum(
        sign(j + k) * weight(n, j) * comb(n - 2 * j, k) * term(j, k)
        for j in range(n // 2 + 1)
        for k in range(n - 2 * j + 1)
    )


def _dual_weight(n, j):
    return comb(n - j, j)


def _dbw1_lhs(p, q, n):
    return _double_waring(n, waring_weight, lambda j, k: Q(p) ** (n - 2 * j - k) * P(q - p * j + p * k))


def _dbw2_lhs(p, q, n):
    return _double_waring(n, _dual_weight, lambda j, k: Q(p) ** (n - 2 * j - k) * P(q - p * j + p * k))


def _square_terms(p, q, n, lead, j_step):
    return lambda j, k: Q(2 * p) ** k * P(q + lead * p * n - j_step * p * j - 2 * p * k)


def _dbw3_lhs(p, q, n):
    return _double_waring(n, waring_weight, _square_terms(p, q, n, 3, 6))


def _dbw4_lhs(p, q, n):
    return _double_waring(n, _dual_weight, _square_terms(p, q, n, 3, 6))


def _dbw4_printed(p, q, n):
    u, t = P(2 * p - 4), P(2 * p - 3)
    r, rm = 2 * p * n + 2 * p - 3, 2 * p * n + 2 * p - 4
    numerator = Mat3((
        (P(p * n + q) * P(r) - P(p * n + q + 1) * P(rm), u, 0),
        (P(p * n + q + 1) * P(r) - P(p * n + q + 2) * P(rm), t, u),
        (P(p * n + q - 1) * P(r) - P(p * n + q) * P(rm), 0, t),
    ))
    denominator = Mat3(((t, u, 0), (u, t, u), (u, 0, t)))
    return sign(n) * ratio(numerator, denominator)


def _dbw5_printed_lhs(p, q, n):
    return _double_waring(n, waring_weight, _square_terms(p, q, n, 4, 8))


def _dbw5_fixed_lhs(p, q, n):
    return _double_waring(n, waring_weight, _square_terms(p, q, n, 4, 6))


def _dbw6_printed_lhs(p, q, n):
    return _double_waring(n, _dual_weight, _square_terms(p, q, n, 4, 8))


def _dbw6_fixed_lhs(p, q, n):
    return _double_waring(n, _dual_weight, _square_terms(p, q, n, 4, 6))


def _dbw6_printed(p, q, n):
    u, t = P(2 * p - 4), P(2 * p - 3)
    r, rm = 2 * p * n + 2 * p - 3, 2 * p * n + 2 * p - 4
    numerator = Mat3((
        (P(2 * p * n + q + 1) * P(rm) - P(2 * p * n + q) * P(r), u, 0),
        (P(2 * p * n + q + 2) * P(rm) - P(2 * p * n + q + 1) * P(r), t, u),
        (P(2 * p * n + q) * P(rm) - P(p * n + q - 1) * P(r), 0, t),
    ))
    denominator = Mat3(((-t, u, 0), (u, -t, u), (u, 0, -t)))
    return sign(n) * ratio(numerator, denominator)


def _dbw6_fixed(p, q, n):
    return sign(n) * gamma_ratio(2 * p * n + 2 * p, 2 * p, 2 * p * n + q + 4)


SIGNED_COLUMNS = 'negate the first column and the P_{2p-3} entries'
FIXED_ROW = 'row three reads P_{2pn+q-1} and the P_{2p-3} entries carry a minus sign'
J_STEP = 'j coefficient -6p in place of -8p'
PARAMS = [('p', INTEGER), ('q', INTEGER), ('n', POSITIVE)]
ANCHOR = 'double Waring theorem'

register(
    'double-binom-waring-1', 'Double Waring sum with Perrin powers',
    (ANCHOR, 'sum (-1)^{j+k} n/(n-j) C(n-j,j) C(n-2j,k) Q_p^{n-2j-k} P_{q-pj+pk} = Q_{pn} P_q - P_{pn+q}'),
    PARAMS,
    lhs=_dbw1_lhs,
    rhs=lambda p, q, n: Q(p * n) * P(q) - P(p * n + q),
    grid=WARING_GRID, small_grid=WARING_SMALL, family=FAMILY,
)

register(
    'double-binom-waring-2', 'Dual double Waring sum with Perrin powers',
    (ANCHOR, 'sum (-1)^{j+k} C(n-j,j) C(n-2j,k) Q_p^{n-2j-k} P_{q-pj+pk} = component ratio at (pn+p, p, q+4)'),
    PARAMS,
    lhs=_dbw2_lhs,
    rhs=lambda p, q, n: gamma_ratio(p * n + p, p, q + 4),
    grid=WARING_GRID, small_grid=WARING_SMALL, family=FAMILY,
)

register(
    'double-binom-waring-3', 'Double Waring sum over squared ratios',
    (ANCHOR, 'sum (-1)^{j+k} n/(n-j) C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+3pn-6pj-2pk} = (-1)^n (Q_{2pn} P_{pn+q} - P_{3pn+q})'),
    PARAMS,
    lhs=_dbw3_lhs,
    rhs=lambda p, q, n: sign(n) * (Q(2 * p * n) * P(p * n + q) - P(3 * p * n + q)),
    grid=WARING_GRID, small_grid=WARING_SMALL, family=FAMILY,
)

register(
    'double-binom-waring-4', 'Dual double Waring sum over squared ratios',
    (ANCHOR, 'sum (-1)^{j+k} C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+3pn-6pj-2pk} = (-1)^n det(...)/det(P_{2p-3}, P_{2p-4}, ...)'),
    PARAMS,
    lhs=_dbw4_lhs,
    rhs=_dbw4_printed,
    errata_watch=True,
    corrections=[Correction(
        SIGNED_COLUMNS,
        rhs=lambda p, q, n: sign(n) * gamma_ratio(2 * p * n + 2 * p, 2 * p, p * n + q + 4),
    )],
    grid=WARING_GRID, small_grid=WARING_SMALL, family=FAMILY,
)

register(
    'double-binom-waring-5', 'Double Waring sum over inverse squares',
    (ANCHOR, 'sum (-1)^{j+k} n/(n-j) C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+4pn-8pj-2pk} = (-1)^n (Q_{2pn} P_{2pn+q} - P_{4pn+q})'),
    PARAMS,
    lhs=_dbw5_printed_lhs,
    rhs=lambda p, q, n: sign(n) * (Q(2 * p * n) * P(2 * p * n + q) - P(4 * p * n + q)),
    errata_watch=True,
    corrections=[Correction(J_STEP, lhs=_dbw5_fixed_lhs)],
    grid=WARING_GRID, small_grid=WARING_SMALL, family=FAMILY,
)

register(
    'double-binom-waring-6', 'Dual double Waring sum over inverse squares',
    (ANCHOR, 'sum (-1)^{j+k} C(n-j,j) C(n-2j,k) Q_{2p}^k P_{q+4pn-8pj-2pk} = (-1)^n det(..., P_{pn+q-1} ...)/det(-P_{2p-3}, ...)'),
    PARAMS,
    lhs=_dbw6_printed_lhs,
    rhs=_dbw6_printed,
    errata_watch=True,
    corrections=[
        Correction(J_STEP, lhs=_dbw6_fixed_lhs),
        Correction(FIXED_ROW, rhs=_dbw6_fixed),
        Correction(f'{J_STEP}; {FIXED_ROW}', lhs=_dbw6_fixed_lhs, rhs=_dbw6_fixed),
    ],
    grid=WARING_GRID, small_grid=WARING_SMALL, family=FAMILY,
)
