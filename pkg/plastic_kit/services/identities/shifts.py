"""
Index identities: negative indices, shifts, the zero corollaries and the addition formula.
"""
from plastic_kit.extensions import engine
from plastic_kit.models.identity import INTEGER, ZERO_INDEX
from plastic_kit.models.matrix import Mat3
from plastic_kit.services.numeric_service import NumericService
from plastic_kit.services.identities.base import register

P = engine.padovan
Q = engine.perrin

FAMILY = 'index'
ONE_AXIS = 'n=-15..15'
ONE_AXIS_SMALL = 'n=-6..6'
TWO_AXES = 'n=-15..15;p=-15..15'
TWO_AXES_SMALL = 'n=-5..5;p=-5..5'
ZEROS = 'lam=-17,-8,-4,-3,-1;n=-15..15'
ZEROS_SMALL = 'lam=-17,-8,-4,-3,-1;n=-4..4'

register(
    'neg-index-P', 'Padovan numbers at negative indices',
    ('negative-index theorem', 'P_{-n} = P_{n-7}^2 - P_{n-6} P_{n-8}'),
    [('n', INTEGER)],
    lhs=lambda n: P(-n),
    rhs=lambda n: engine.padovan_negative_closed(n),
    grid=ONE_AXIS, small_grid=ONE_AXIS_SMALL, family=FAMILY,
)

register(
    'neg-index-Q', 'Perrin numbers at negative indices',
    ('negative-index theorem', '2Q_{-n} = Q_n^2 - Q_{2n}'),
    [('n', INTEGER)],
    lhs=lambda n: 2 * Q(-n),
    rhs=lambda n: Q(n) ** 2 - Q(2 * n),
    grid=ONE_AXIS, small_grid=ONE_AXIS_SMALL, family=FAMILY,
)

register(
    'shift-theorem-1', 'Perrin-weighted shift',
    ('shift theorem', 'Q_{-n} P_p - P_{p-n} = Q_n P_{p+n} - P_{p+2n}'),
    [('p', INTEGER), ('n', INTEGER)],
    lhs=lambda p, n: Q(-n) * P(p) - P(p - n),
    rhs=lambda p, n: Q(n) * P(p + n) - P(p + 2 * n),
    grid=TWO_AXES, small_grid=TWO_AXES_SMALL, family=FAMILY,
)

register(
    'shift-theorem-2', 'Padovan cross-product shift',
    ('shift theorem', 'P_p P_{-n-3} - P_{p+1} P_{-n-4} = P_{p+n+1} P_{n-4} - P_{p+n} P_{n-3}'),
    [('p', INTEGER), ('n', INTEGER)],
    lhs=lambda p, n: P(p) * P(-n - 3) - P(p + 1) * P(-n - 4),
    rhs=lambda p, n: P(p + n + 1) * P(n - 4) - P(p + n) * P(n - 3),
    grid=TWO_AXES, small_grid=TWO_AXES_SMALL, family=FAMILY,
)

register(
    'lambda-corollary-1', 'Negative index through a Padovan zero',
    ('zero corollary, lam in {p: P_p = 0}', 'P_{-n} = P_{2n+3lam} - Q_{n+lam} P_{n+2lam}'),
    [('lam', ZERO_INDEX), ('n', INTEGER)],
    lhs=lambda lam, n: P(-n),
    rhs=lambda lam, n: P(2 * n + 3 * lam) - Q(n + lam) * P(n + 2 * lam),
    grid=ZEROS, small_grid=ZEROS_SMALL, family=FAMILY,
)

register(
    'lambda-corollary-2', 'Perrin negative index through a Padovan zero',
    ('zero corollary, lam in {p: P_p = 0}', 'P_{n+lam} Q_{-n} = P_{2n+lam} Q_n - P_{3n+lam}'),
    [('lam', ZERO_INDEX), ('n', INTEGER)],
    lhs=lambda lam, n: P(n + lam) * Q(-n),
    rhs=lambda lam, n: P(2 * n + lam) * Q(n) - P(3 * n + lam),
    grid=ZEROS, small_grid=ZEROS_SMALL, family=FAMILY,
)

register(
    'lambda-corollary-3', 'Perrin negative index from products',
    ('zero corollary', 'Q_{-n} = Q_n P_n - Q_{n-1} P_{n-2} - P_{2n-2}'),
    [('n', INTEGER)],
    lhs=lambda n: Q(-n),
    rhs=lambda n: Q(n) * P(n) - Q(n - 1) * P(n - 2) - P(2 * n - 2),
    grid=ONE_AXIS, small_grid=ONE_AXIS_SMALL, family=FAMILY,
)

register(
    'lambda-corollary-4', 'Shifted negative index through a Padovan zero',
    ('zero corollary, lam in {p: P_p = 0}', 'P_{lam+1} P_{-n} = P_{lam+n-4} P_{n-7} - P_{lam+n-3} P_{n-8}'),
    [('lam', ZERO_INDEX), ('n', INTEGER)],
    lhs=lambda lam, n: P(lam + 1) * P(-n),
    rhs=lambda lam, n: P(lam + n - 4) * P(n - 7) - P(lam + n - 3) * P(n - 8),
    grid=ZEROS, small_grid=ZEROS_SMALL, family=FAMILY,
)

register(
    'lambda-corollary-5', 'Back-shifted negative index through a Padovan zero',
    ('zero corollary, lam in {p: P_p = 0}', 'P_{lam-1} P_{-n} = P_{lam+n-3} P_{n-7} - P_{lam+n-4} P_{n-6}'),
    [('lam', ZERO_INDEX), ('n', INTEGER)],
    lhs=lambda lam, n: P(lam - 1) * P(-n),
    rhs=lambda lam, n: P(lam + n - 3) * P(n - 7) - P(lam + n - 4) * P(n - 6),
    grid=ZEROS, small_grid=ZEROS_SMALL, family=FAMILY,
)

register(
    'addition-formula', 'Padovan addition formula',
    ('addition theorem', 'P_{m+n} = P_m P_{n-5} + P_{m+1} P_{n-3} + P_{m+2} P_{n-4}'),
    [('m', INTEGER), ('n', INTEGER)],
    lhs=lambda m, n: P(m + n),
    rhs=lambda m, n: P(m) * P(n - 5) + P(m + 1) * P(n - 3) + P(m + 2) * P(n - 4),
    grid='m=-15..15;n=-15..15', small_grid='m=-5..5;n=-5..5', family=FAMILY,
)

register(
    'perrin-via-padovan-1', 'Perrin from Padovan, four-step shift',
    ('power decomposition', 'Q_n = 2P_{n-4} + 3P_{n-5}'),
    [('n', INTEGER)],
    lhs=lambda n: Q(n),
    rhs=lambda n: engine.perrin_from_padovan(n, 'shift4'),
    grid=ONE_AXIS, small_grid=ONE_AXIS_SMALL, family=FAMILY,
)

register(
    'perrin-via-padovan-2', 'Perrin from Padovan, two-step shift',
    ('power decomposition', 'Q_n = 2P_{n-2} + P_{n-5}'),
    [('n', INTEGER)],
    lhs=lambda n: Q(n),
    rhs=lambda n: engine.perrin_from_padovan(n, 'shift2'),
    grid=ONE_AXIS, small_grid=ONE_AXIS_SMALL, family=FAMILY,
)

register(
    'padovan-unimodular-det', 'Unimodular Padovan determinant',
    ('negative-index proof', '|P_{n-2} P_{n-3} P_{n-4}; P_{n-1} P_{n-2} P_{n-3}; P_{n-3} P_{n-4} P_{n-5}| = 1'),
    [('n', INTEGER)],
    lhs=lambda n: NumericService.det3(Mat3((
        (P(n - 2), P(n - 3), P(n - 4)),
        (P(n - 1), P(n - 2), P(n - 3)),
        (P(n - 3), P(n - 4), P(n - 5)),
    ))),
    rhs=lambda n: 1,
    grid='n=-50..50', small_grid=ONE_AXIS_SMALL, family=FAMILY,
)
