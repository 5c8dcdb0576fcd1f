"""
Component identities: the ring computes the left side, sequence closed forms the right.
"""
from plastic_kit.extensions import engine
from plastic_kit.models.identity import COMPONENT, INTEGER
from plastic_kit.services.identities.base import register
from plastic_kit.services.identities.kernels import gamma_ratio
from plastic_kit.services.ring_service import RingService

P = engine.padovan
Q = engine.perrin

FAMILY = 'component'
COMPONENT_GRID = 'j=0..2;n=-30..30'
COMPONENT_SMALL = 'j=0..2;n=-6..6'


def _nonzero_s(r, s, t):
    if s == 0:
        return 's = 0 degenerates denominator'
    return None


register(
    'gamma-component-lemma-1', 'Squared component of a pair power sum times a power',
    ('component lemma', '((a^r + b^r) c^t)_{c^2} = Q_r P_{t-4} - P_{r+t-4}'),
    [('r', INTEGER), ('t', INTEGER)],
    lhs=lambda r, t: RingService.gamma_component_pair(r, t),
    rhs=lambda r, t: Q(r) * P(t - 4) - P(r + t - 4),
    grid='r=-15..15;t=-15..15', small_grid='r=-4..4;t=-4..4', family=FAMILY,
)

register(
    'gamma-component-lemma-2', 'Squared component of a difference quotient ratio times a power',
    ('component lemma',
     '(((a^r - b^r)/(a^s - b^s)) c^t)_{c^2} = ratio of determinants in P_{r-3}, P_{r-4}, P_{s-3}, P_{s-4}, P_{t-2..t-5}'),
    [('r', INTEGER), ('s', INTEGER), ('t', INTEGER)],
    lhs=lambda r, s, t: RingService.gamma_component_ratio(r, s, t),
    rhs=gamma_ratio,
    admissible=_nonzero_s,
    grid='r=-8..8;s=-8..8;t=-8..8', small_grid='r=-3..3;s=-3..3;t=-3..3', family=FAMILY,
)

register(
    'alpha-power-components', 'Powers of a root in Padovan components',
    ('power lemma', 'x^n = x^2 P_{n-4} + x P_{n-3} + P_{n-5}'),
    [('j', COMPONENT), ('n', INTEGER)],
    lhs=lambda j, n: RingService.alpha_pow(n).component(j),
    rhs=lambda j, n: (P(n - 5), P(n - 3), P(n - 4))[j],
    grid=COMPONENT_GRID, small_grid=COMPONENT_SMALL, family=FAMILY,
)

register(
    'perrin-combo-components', 'Perrin numbers as components of 2x^(n+2) + x^(n-1)',
    ('power lemma', '2x^{n+2} + x^{n-1} = x^2 Q_n + x Q_{n+1} + Q_{n-1}'),
    [('j', COMPONENT), ('n', INTEGER)],
    lhs=lambda j, n: RingService.perrin_combo(n).component(j),
    rhs=lambda j, n: (Q(n - 1), Q(n + 1), Q(n))[j],
    grid=COMPONENT_GRID, small_grid=COMPONENT_SMALL, family=FAMILY,
)

register(
    'power-sum-components', 'Pair power sum over the third root',
    ('symmetric functions', 'a^n + b^n = -c^2 P_{n-4} - c P_{n-3} + 2P_{n-2}'),
    [('j', COMPONENT), ('n', INTEGER)],
    lhs=lambda j, n: RingService.pair_power_sum(n).component(j),
    rhs=lambda j, n: (2 * P(n - 2), -P(n - 3), -P(n - 4))[j],
    grid=COMPONENT_GRID, small_grid=COMPONENT_SMALL, family=FAMILY,
)

register(
    'diff-quotient-components', 'Pair difference quotient over the third root',
    ('symmetric functions', '(a^n - b^n)/(a - b) = -c P_{n-4} + P_{n-3}'),
    [('j', COMPONENT), ('n', INTEGER)],
    lhs=lambda j, n: RingService.pair_diff_quot(n).component(j),
    rhs=lambda j, n: (P(n - 3), -P(n - 4), 0)[j],
    grid=COMPONENT_GRID, small_grid=COMPONENT_SMALL, family=FAMILY,
)
