"""
Summation identities: arithmetic progressions, weighted sums and product sums.
"""
from plastic_kit.extensions import engine
from plastic_kit.models.identity import INTEGER, NON_NEGATIVE, SET_ID
from plastic_kit.models.ring import set_entry
from plastic_kit.services.identities.base import Correction, register
from plastic_kit.services.identities.kernels import (
    gamma_ratio,
    progression_denominator,
    progression_numerator,
    progression_sum,
    ratio,
)

P = engine.padovan
Q = engine.perrin

FAMILY = 'summation'
SEQUENCES = (('P', P), ('Q', Q))


def _nonzero_p(p, **_):
    if p == 0:
        return 'p = 0 degenerates denominator'
    return None


def _register_progressions(kind, S):
    register(
        f'ap-sum-{kind}', f'{kind} sum with subscripts in arithmetic progression',
        ('arithmetic progression sums', f'sum_{{j=0}}^n {kind}_{{pj+q}} = ratio of determinants in {kind}_{{pn+p+q}}, {kind}_q and P_{{p-1..p-5}}'),
        [('p', INTEGER), ('q', INTEGER), ('n', NON_NEGATIVE)],
        lhs=lambda p, q, n: sum(S(p * j + q) for j in range(n + 1)),
        rhs=lambda p, q, n: progression_sum(S, p, q, n),
        admissible=_nonzero_p,
        grid='n=0..20;p=-8..8;q=-8..8', small_grid='n=0..4;p=-3..3;q=-2..2', family=FAMILY,
    )

    register(
        f'ap-sum-{kind}-special', f'{kind} sum over consecutive subscripts',
        ('arithmetic progression sums, p = 1', f'sum_{{j=0}}^n {kind}_{{j+q}} = {kind}_{{n+q+5}} - {kind}_{{q+4}}'),
        [('q', INTEGER), ('n', NON_NEGATIVE)],
        lhs=lambda q, n: sum(S(j + q) for j in range(n + 1)),
        rhs=lambda q, n: S(n + q + 5) - S(q + 4),
        grid='n=0..20;q=-15..15', small_grid='n=0..5;q=-4..4', family=FAMILY,
    )


def _register_weighted(kind, S):
    def index(row, m, r, j):
        return m + row.d + (m + row.c) * r - 4 + (row.e - row.c) * j

    def printed(s, m, r, n):
        row = set_entry(s)
        total = sum(row.a ** (n - j) * S(index(row, m, r, j)) for j in range(n + 1))
        return row.b * row.f ** (n + 1) * total

    def weight_inside(s, m, r, n):
        row = set_entry(s)
        return row.b * sum(row.a ** (n - j) * row.f ** j * S(index(row, m, r, j)) for j in range(n + 1))

    def closed(s, m, r, n):
        row = set_entry(s)
        return (row.f ** (n + 1) * S((m + row.c) * r + (row.e - row.c) * n + m + row.e - 4)
                - row.a ** (n + 1) * S((m + row.c) * (r + 1) - 4))

    register(
        f'weighted-sum-{kind}', f'Set-table weighted {kind} sum',
        ('weighted sums over the set table',
         f'b f^{{n+1}} sum_{{j=0}}^n a^{{n-j}} {kind}_{{m+d+(m+c)r-4+(e-c)j}} = '
         f'f^{{n+1}} {kind}_{{(m+c)r+(e-c)n+m+e-4}} - a^{{n+1}} {kind}_{{(m+c)(r+1)-4}}'),
        [('s', SET_ID), ('m', INTEGER), ('r', INTEGER), ('n', NON_NEGATIVE)],
        lhs=printed,
        rhs=closed,
        errata_watch=True,
        corrections=[Correction('weight f^j inside the sum in place of f^(n+1) in front', lhs=weight_inside)],
        grid='m=-8..8;n=0..10;r=-4..4;s=1..15', small_grid='m=-2..2;n=0..3;r=-1..1;s=1..15',
        family=FAMILY,
    )

    register(
        f'weighted-sum-{kind}-diag', f'Set-table weighted {kind} sum with r = n',
        ('weighted sums over the set table, r = n',
         f'b f^{{n+1}} sum_{{j=0}}^n a^{{n-j}} {kind}_{{m+d+(m+c)n-4+(e-c)j}} = '
         f'f^{{n+1}} {kind}_{{(m+e)(n+1)-4}} - a^{{n+1}} {kind}_{{(m+c)(n+1)-4}}'),
        [('s', SET_ID), ('m', INTEGER), ('n', NON_NEGATIVE)],
        lhs=lambda s, m, n: printed(s, m, n, n),
        rhs=lambda s, m, n: (set_entry(s).f ** (n + 1) * S((m + set_entry(s).e) * (n + 1) - 4)
                             - set_entry(s).a ** (n + 1) * S((m + set_entry(s).c) * (n + 1) - 4)),
        errata_watch=True,
        corrections=[Correction('weight f^j inside the sum in place of f^(n+1) in front',
                                lhs=lambda s, m, n: weight_inside(s, m, n, n))],
        grid='m=-10..10;n=0..12;s=1..15', small_grid='m=-3..3;n=0..4;s=1..15',
        family=FAMILY,
    )

    explicit = {
        1: (lambda m, r, n: sum(S(m + (m + 1) * r - 5 - 3 * j) for j in range(n + 1)),
            lambda m, r, n: S((m + 1) * (r + 1) - 4) - S((m + 1) * r - 3 * n + m - 6),
            f'sum_{{j=0}}^n {kind}_{{m+(m+1)r-5-3j}} = {kind}_{{(m+1)(r+1)-4}} - {kind}_{{(m+1)r-3n+m-6}}'),
        7: (lambda m, r, n: sum(2 ** (n - j) * S(m + (m - 1) * r - 3 - 5 * j) for j in range(n + 1)),
            lambda m, r, n: 2 ** (n + 1) * S((m - 1) * (r + 1) - 4) - S((m - 1) * r - 5 * n + m - 10),
            f'sum_{{j=0}}^n 2^{{n-j}} {kind}_{{m+(m-1)r-3-5j}} = 2^{{n+1}} {kind}_{{(m-1)(r+1)-4}} - {kind}_{{(m-1)r-5n+m-10}}'),
        10: (lambda m, r, n: sum(2 ** (n - j) * S(m + (m + 2) * r - 6 + 3 * j) for j in range(n + 1)),
             lambda m, r, n: S((m + 2) * r + 3 * n + m + 1) - 2 ** (n + 1) * S((m + 2) * (r + 1) - 4),
             f'sum_{{j=0}}^n 2^{{n-j}} {kind}_{{m+(m+2)r-6+3j}} = {kind}_{{(m+2)r+3n+m+1}} - 2^{{n+1}} {kind}_{{(m+2)(r+1)-4}}'),
    }
    for set_id, (lhs, rhs, statement) in explicit.items():
        register(
            f'weighted-sum-{kind}-set{set_id}', f'Weighted {kind} sum, set {set_id}',
            (f'weighted sums, set {set_id}', statement),
            [('m', INTEGER), ('r', INTEGER), ('n', NON_NEGATIVE)],
            lhs=lhs, rhs=rhs,
            grid='m=-8..8;n=0..12;r=-6..6', small_grid='m=-3..3;n=0..4;r=-2..2', family=FAMILY,
        )


for _kind, _S in SEQUENCES:
    _register_progressions(_kind, _S)
    _register_weighted(_kind, _S)


register(
    'product-sum', 'Sum of Padovan-Perrin products',
    ('product sums',
     'sum_{j=0}^n P_{q-pj} Q_{p(n-2j)} = progression ratio with step 3p + 2 * component ratio at (pn+p, p, q+4)'),
    [('p', INTEGER), ('q', INTEGER), ('n', NON_NEGATIVE)],
    lhs=lambda p, q, n: sum(P(q - p * j) * Q(p * (n - 2 * j)) for j in range(n + 1)),
    rhs=lambda p, q, n: (
        ratio(progression_numerator(P, 3 * p, p * n + 3 * p + q, q - 2 * p * n), progression_denominator(3 * p))
        + 2 * gamma_ratio(p * n + p, p, q + 4)
    ),
    admissible=_nonzero_p,
    grid='n=0..12;p=-6..6;q=-8..8', small_grid='n=0..4;p=-2..2;q=-2..2', family=FAMILY,
)

register(
    'product-sum-special', 'Sum of Padovan-Perrin products, unit step',
    ('product sums, p = 1',
     'sum_{j=0}^n P_{q-j} Q_{n-2j} = P_{n+q+2} - P_{q-2n-1} - 2(P_{q+1} P_{n-3} - P_q P_{n-2})'),
    [('q', INTEGER), ('n', NON_NEGATIVE)],
    lhs=lambda q, n: sum(P(q - j) * Q(n - 2 * j) for j in range(n + 1)),
    rhs=lambda q, n: P(n + q + 2) - P(q - 2 * n - 1) - 2 * (P(q + 1) * P(n - 3) - P(q) * P(n - 2)),
    grid='n=0..20;q=-15..15', small_grid='n=0..5;q=-4..4', family=FAMILY,
)
