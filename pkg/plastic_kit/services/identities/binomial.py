"""
Binomial identities over the set table.
"""
from math import comb

from plastic_kit.extensions import engine
from plastic_kit.models.identity import INTEGER, NON_NEGATIVE, SET_ID
from plastic_kit.models.ring import set_entry
from plastic_kit.services.identities.base import register
from plastic_kit.services.identities.kernels import sign

P = engine.padovan
Q = engine.perrin

FAMILY = 'binomial'
SET_GRID = 'm=-10..10;n=0..12;p=-4..4;s=1..15'
SET_SMALL = 'm=-2..2;n=0..4;p=-1..1;s=1..15'
EXPLICIT_GRID = 'm=-10..10;n=0..12;p=-8..8'
EXPLICIT_SMALL = 'm=-3..3;n=0..5;p=-2..2'

# set id -> (j weight, index at j, right side); the lower summation bound reads j = 0
EXPLICIT_FORMS = {
    1: (lambda j: sign(j), lambda m, p, n, j: (m - 1) * n + p + 2 * j,
        lambda S, m, p, n: sign(n) * S((m - 2) * n + p),
        'sum_{j=0}^n (-1)^j C(n,j) {S}_{(m-1)n+p+2j} = (-1)^n {S}_{(m-2)n+p}'),
    4: (lambda j: 1, lambda m, p, n, j: (m - 2) * n + p + 4 * j,
        lambda S, m, p, n: S((m + 3) * n + p),
        'sum_{j=0}^n C(n,j) {S}_{(m-2)n+p+4j} = {S}_{(m+3)n+p}'),
    7: (lambda j: sign(j) * 2 ** j, lambda m, p, n, j: (m + 1) * n + p - 2 * j,
        lambda S, m, p, n: sign(n) * S((m - 6) * n + p),
        'sum_{j=0}^n (-1)^j C(n,j) 2^j {S}_{(m+1)n+p-2j} = (-1)^n {S}_{(m-6)n+p}'),
    10: (lambda j: 2 ** j, lambda m, p, n, j: (m - 2) * n + p + 4 * j,
         lambda S, m, p, n: S((m + 5) * n + p),
         'sum_{j=0}^n 2^j C(n,j) {S}_{(m-2)n+p+4j} = {S}_{(m+5)n+p}'),
    13: (lambda j: sign(j), lambda m, p, n, j: (m - 7) * n + p + 14 * j,
         lambda S, m, p, n: sign(n) * 4 ** n * S((m + 2) * n + p),
         'sum_{j=0}^n (-1)^j C(n,j) {S}_{(m-7)n+p+14j} = (-1)^n 4^n {S}_{(m+2)n+p}'),
}


def _register(kind, S):
    def lhs(s, m, p, n):
        row = set_entry(s)
        return sum(
            comb(n, j) * row.a ** j * row.b ** (n - j) * S((m + row.d) * n + p + (row.c - row.d) * j)
            for j in range(n + 1)
        )

    register(
        f'binom-set-{kind}', f'Binomial {kind} sum over the set table',
        ('binomial theorem over the set table, n >= 0',
         f'sum_{{j=0}}^n C(n,j) a^j b^{{n-j}} {kind}_{{(m+d)n+p+(c-d)j}} = f^n {kind}_{{(m+e)n+p}}'),
        [('s', SET_ID), ('m', INTEGER), ('p', INTEGER), ('n', NON_NEGATIVE)],
        lhs=lhs,
        rhs=lambda s, m, p, n: set_entry(s).f ** n * S((m + set_entry(s).e) * n + p),
        grid=SET_GRID, small_grid=SET_SMALL, family=FAMILY,
    )

    for set_id, (weight, index, closed, statement) in EXPLICIT_FORMS.items():
        register(
            f'binom-set{set_id}-{kind}', f'Binomial {kind} sum, set {set_id}',
            (f'binomial theorem, set {set_id}', statement.replace('{S}', kind)),
            [('m', INTEGER), ('p', INTEGER), ('n', NON_NEGATIVE)],
            lhs=lambda m, p, n, weight=weight, index=index: sum(
                weight(j) * comb(n, j) * S(index(m, p, n, j)) for j in range(n + 1)
            ),
            rhs=lambda m, p, n, closed=closed: closed(S, m, p, n),
            grid=EXPLICIT_GRID, small_grid=EXPLICIT_SMALL, family=FAMILY,
        )


for _kind, _S in (('P', P), ('Q', Q)):
    _register(_kind, _S)
