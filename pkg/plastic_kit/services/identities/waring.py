"""
Waring-type identities: sums over j <= n/2 with n/(n-j) C(n-j, j) weights.
"""
from math import comb

from plastic_kit.extensions import engine
from plastic_kit.models.identity import INTEGER, NON_NEGATIVE, POSITIVE, SET_ID
from plastic_kit.models.ring import set_entry
from plastic_kit.services.identities.base import register
from plastic_kit.services.identities.kernels import sign, waring_weight

P = engine.padovan
Q = engine.perrin

FAMILY = 'waring'


def _half(n):
    return range(n // 2 + 1)


# (weight kind, index at j, right side, domain of n, statement)
BASIC_FORMS = (
    ('waring', lambda p, n, j: p + n - 3 * j,
     lambda p, n: sign(n) * (Q(n) * P(p) - P(n + p)), POSITIVE,
     'sum (-1)^j n/(n-j) C(n-j,j) P_{p+n-3j} = (-1)^n (Q_n P_p - P_{n+p})'),
    ('dual', lambda p, n, j: p + n - 3 * j,
     lambda p, n: sign(n - 1) * (P(p + 1) * P(n - 3) - P(p) * P(n - 2)), NON_NEGATIVE,
     'sum (-1)^j C(n-j,j) P_{p+n-3j} = (-1)^{n-1} (P_{p+1} P_{n-3} - P_p P_{n-2})'),
    ('waring', lambda p, n, j: p - 4 * n + 8 * j,
     lambda p, n: P(p + n) * Q(2 * n) - P(p + 3 * n), POSITIVE,
     'sum (-1)^j n/(n-j) C(n-j,j) P_{p-4n+8j} = P_{p+n} Q_{2n} - P_{p+3n}'),
    ('dual', lambda p, n, j: p - 4 * n + 8 * j,
     lambda p, n: P(p + n) * P(2 * n - 2) - P(p + n - 1) * P(2 * n - 1), NON_NEGATIVE,
     'sum (-1)^j C(n-j,j) P_{p-4n+8j} = P_{p+n} P_{2n-2} - P_{p+n-1} P_{2n-1}'),
    ('waring', lambda p, n, j: p - 3 * n + 8 * j,
     lambda p, n: P(2 * n + p) * Q(2 * n) - P(p + 4 * n), POSITIVE,
     'sum (-1)^j n/(n-j) C(n-j,j) P_{p-3n+8j} = P_{2n+p} Q_{2n} - P_{p+4n}'),
    ('dual', lambda p, n, j: p - 3 * n + 8 * j,
     lambda p, n: P(2 * n + p) * P(2 * n - 2) - P(2 * n + p - 1) * P(2 * n - 1), NON_NEGATIVE,
     'sum (-1)^j C(n-j,j) P_{p-3n+8j} = P_{2n+p} P_{2n-2} - P_{2n+p-1} P_{2n-1}'),
)

# set id -> (weight at (n, j) besides n/(n-j) C(n-j,j), index, right side)
EXPLICIT_FORMS = {
    1: (lambda n, j: 1, lambda m, p, n, j: (m - 2) * n + p + 4 * j,
        lambda S, m, p, n: S((m + 1) * n + p) + sign(n) * S((m - 1) * n + p),
        '{S}_{(m-2)n+p+4j} -> {S}_{(m+1)n+p} + (-1)^n {S}_{(m-1)n+p}'),
    4: (lambda n, j: sign(j), lambda m, p, n, j: (m + 3) * n + p - 6 * j,
        lambda S, m, p, n: S((m + 2) * n + p) + S((m - 2) * n + p),
        '(-1)^j {S}_{(m+3)n+p-6j} -> {S}_{(m+2)n+p} + {S}_{(m-2)n+p}'),
    7: (lambda n, j: 2 ** j, lambda m, p, n, j: (m - 6) * n + p + 12 * j,
        lambda S, m, p, n: 2 ** n * S((m - 1) * n + p) + sign(n) * S((m + 1) * n + p),
        '2^j {S}_{(m-6)n+p+12j} -> 2^n {S}_{(m-1)n+p} + (-1)^n {S}_{(m+1)n+p}'),
    10: (lambda n, j: sign(j) * 2 ** j, lambda m, p, n, j: (m + 5) * n + p - 10 * j,
         lambda S, m, p, n: 2 ** n * S((m + 2) * n + p) + S((m - 2) * n + p),
         '(-1)^j 2^j {S}_{(m+5)n+p-10j} -> 2^n {S}_{(m+2)n+p} + {S}_{(m-2)n+p}'),
    13: (lambda n, j: 2 ** (2 * n - 4 * j), lambda m, p, n, j: (m + 2) * n + p - 4 * j,
         lambda S, m, p, n: S((m + 7) * n + p) + sign(n) * S((m - 7) * n + p),
         '2^{2n-4j} {S}_{(m+2)n+p-4j} -> {S}_{(m+7)n+p} + (-1)^n {S}_{(m-7)n+p}'),
}


def _register_basic():
    for number, (weight_kind, index, closed, n_domain, statement) in enumerate(BASIC_FORMS, start=1):
        if weight_kind == 'waring':
            weight = waring_weight
        else:
            weight = lambda n, j: comb(n - j, j)
        register(
            f'waring-basic-{number}', f'Waring-type Padovan sum {number}',
            ('Waring-type sums', statement),
            [('p', INTEGER), ('n', n_domain)],
            lhs=lambda p, n, weight=weight, index=index: sum(
                sign(j) * weight(n, j) * P(index(p, n, j)) for j in _half(n)
            ),
            rhs=closed,
            grid=f'n={1 if n_domain == POSITIVE else 0}..20;p=-15..15',
            small_grid=f'n={1 if n_domain == POSITIVE else 0}..6;p=-4..4',
            family=FAMILY,
        )


def _register_sets(kind, S):
    def lhs(s, m, p, n):
        row = set_entry(s)
        return sum(
            sign(j) * waring_weight(n, j) * row.a ** j * row.b ** j * row.f ** (n - 2 * j)
            * S((m + row.e) * n + p + (row.c - 2 * row.e + row.d) * j)
            for j in _half(n)
        )

    def rhs(s, m, p, n):
        row = set_entry(s)
        return row.a ** n * S((m + row.c) * n + p) + row.b ** n * S((m + row.d) * n + p)

    register(
        f'waring-set-{kind}', f'Waring {kind} sum over the set table',
        ('Waring theorem over the set table, n >= 1',
         f'sum (-1)^j n/(n-j) C(n-j,j) a^j b^j f^{{n-2j}} {kind}_{{(m+e)n+p+(c-2e+d)j}} = '
         f'a^n {kind}_{{(m+c)n+p}} + b^n {kind}_{{(m+d)n+p}}'),
        [('s', SET_ID), ('m', INTEGER), ('p', INTEGER), ('n', POSITIVE)],
        lhs=lhs, rhs=rhs,
        grid='m=-10..10;n=1..12;p=-4..4;s=1..15', small_grid='m=-2..2;n=1..4;p=-1..1;s=1..15',
        family=FAMILY,
    )

    for set_id, (weight, index, closed, statement) in EXPLICIT_FORMS.items():
        register(
            f'waring-set{set_id}-{kind}', f'Waring {kind} sum, set {set_id}',
            (f'Waring theorem, set {set_id}',
             'sum n/(n-j) C(n-j,j) ' + statement.replace('{S}', kind).replace(' -> ', ' = ')),
            [('m', INTEGER), ('p', INTEGER), ('n', POSITIVE)],
            lhs=lambda m, p, n, weight=weight, index=index: sum(
                weight(n, j) * waring_weight(n, j) * S(index(m, p, n, j)) for j in _half(n)
            ),
            rhs=lambda m, p, n, closed=closed: closed(S, m, p, n),
            grid='m=-10..10;n=1..12;p=-8..8', small_grid='m=-3..3;n=1..5;p=-2..2', family=FAMILY,
        )


_register_basic()
for _kind, _S in (('P', P), ('Q', Q)):
    _register_sets(_kind, _S)
