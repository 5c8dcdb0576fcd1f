"""
Generic algebra identities in rational indeterminates x, y.

Integer grids exercise them like any other entry; IdentityService.evaluate_generic
takes arbitrary rationals.
"""
from fractions import Fraction
from math import comb

from plastic_kit.models.identity import INTEGER, NON_NEGATIVE, POSITIVE, RATIONAL, GenericAlgebraIdentity
from plastic_kit.services.identities.base import register
from plastic_kit.services.identities.kernels import sign, waring_weight

FAMILY = 'algebra'
XY = [('x', RATIONAL), ('y', RATIONAL)]
XY_GRID = 'n=0..8;x=-3..3;y=-3..3'
XY_SMALL = 'n=0..3;x=-2..2;y=-2..2'
XY_POSITIVE_GRID = 'n=1..8;x=-3..3;y=-3..3'
XY_POSITIVE_SMALL = 'n=1..3;x=-2..2;y=-2..2'
XYR_GRID = 'n=0..6;r=-3..3;x=-3..3;y=-3..3'
XYR_SMALL = 'n=0..2;r=-1..1;x=-2..2;y=-2..2'


def _f(value) -> Fraction:
    return Fraction(value)


def _requires(**conditions):
    """Admissibility from named predicates; the first false one is reported."""
    def check(**params):
        for message, predicate in conditions.items():
            if not predicate(**params):
                return message.replace('_', ' ')
        return None
    return check


def _algebra(identity_id, title, statement, params, lhs, rhs, grid, small_grid, admissible=None,
             variables=('x', 'y')):
    register(
        identity_id, title, ('algebra lemma', statement), params,
        lhs=lhs, rhs=rhs, admissible=admissible,
        grid=grid, small_grid=small_grid, family=FAMILY,
        descriptor_class=GenericAlgebraIdentity, variables=variables,
    )


_algebra(
    'algebra-geometric', 'Geometric sum',
    'sum_{j=0}^n x^j = (x^{n+1} - 1)/(x - 1)',
    [('x', RATIONAL), ('n', NON_NEGATIVE)],
    lhs=lambda x, n: sum(_f(x) ** j for j in range(n + 1)),
    rhs=lambda x, n: (_f(x) ** (n + 1) - 1) / (_f(x) - 1),
    admissible=_requires(x_must_differ_from_1=lambda x, n: x != 1),
    grid='n=0..12;x=-5..5', small_grid='n=0..4;x=-2..2',
    variables=('x',),
)

_algebra(
    'algebra-weighted-geometric', 'Weighted geometric sum',
    '(x - y) sum_{j=0}^n y^{r-j} x^j = y^{r-n} x^{n+1} - y^{r+1}',
    XY + [('r', INTEGER), ('n', NON_NEGATIVE)],
    lhs=lambda x, y, r, n: (_f(x) - y) * sum(_f(y) ** (r - j) * _f(x) ** j for j in range(n + 1)),
    rhs=lambda x, y, r, n: _f(y) ** (r - n) * _f(x) ** (n + 1) - _f(y) ** (r + 1),
    admissible=_requires(y_must_be_nonzero=lambda x, y, r, n: y != 0),
    grid=XYR_GRID, small_grid=XYR_SMALL,
)

_algebra(
    'algebra-weighted-shifted', 'Weighted geometric sum in x + y',
    'x sum_{j=0}^n y^{r-j} (x + y)^j = y^{r-n} (x + y)^{n+1} - y^{r+1}',
    XY + [('r', INTEGER), ('n', NON_NEGATIVE)],
    lhs=lambda x, y, r, n: _f(x) * sum(_f(y) ** (r - j) * (_f(x) + y) ** j for j in range(n + 1)),
    rhs=lambda x, y, r, n: _f(y) ** (r - n) * (_f(x) + y) ** (n + 1) - _f(y) ** (r + 1),
    admissible=_requires(y_must_be_nonzero=lambda x, y, r, n: y != 0),
    grid=XYR_GRID, small_grid=XYR_SMALL,
)

_algebra(
    'algebra-weighted-swapped', 'Weighted geometric sum with x and y interchanged',
    '(x - y) sum_{j=0}^n x^{r-j} y^j = x^{r+1} - x^{r-n} y^{n+1}',
    XY + [('r', INTEGER), ('n', NON_NEGATIVE)],
    lhs=lambda x, y, r, n: (_f(x) - y) * sum(_f(x) ** (r - j) * _f(y) ** j for j in range(n + 1)),
    rhs=lambda x, y, r, n: _f(x) ** (r + 1) - _f(x) ** (r - n) * _f(y) ** (n + 1),
    admissible=_requires(x_must_be_nonzero=lambda x, y, r, n: x != 0),
    grid=XYR_GRID, small_grid=XYR_SMALL,
)

_algebra(
    'algebra-symmetric-product', 'Symmetric product sum',
    '1/2 sum_{j=0}^n (xy)^j (x^{n-2j} + y^{n-2j}) = (x^{n+1} - y^{n+1})/(x - y)',
    XY + [('n', NON_NEGATIVE)],
    lhs=lambda x, y, n: sum(
        (_f(x) * y) ** j * (_f(x) ** (n - 2 * j) + _f(y) ** (n - 2 * j)) for j in range(n + 1)
    ) / 2,
    rhs=lambda x, y, n: (_f(x) ** (n + 1) - _f(y) ** (n + 1)) / (_f(x) - y),
    admissible=_requires(
        x_must_differ_from_y=lambda x, y, n: x != y,
        x_and_y_must_be_nonzero=lambda x, y, n: x != 0 and y != 0,
    ),
    grid=XY_GRID, small_grid=XY_SMALL,
)

_algebra(
    'algebra-binomial', 'Binomial formula',
    'sum_{j=0}^n C(n,j) x^j y^{n-j} = (x + y)^n',
    XY + [('n', NON_NEGATIVE)],
    lhs=lambda x, y, n: sum(comb(n, j) * _f(x) ** j * _f(y) ** (n - j) for j in range(n + 1)),
    rhs=lambda x, y, n: (_f(x) + y) ** n,
    grid=XY_GRID, small_grid=XY_SMALL,
)

_algebra(
    'algebra-binomial-shifted', 'Binomial formula in x + y',
    'sum_{j=0}^n (-1)^j C(n,j) (x + y)^j y^{n-j} = (-1)^n x^n',
    XY + [('n', NON_NEGATIVE)],
    lhs=lambda x, y, n: sum(sign(j) * comb(n, j) * (_f(x) + y) ** j * _f(y) ** (n - j) for j in range(n + 1)),
    rhs=lambda x, y, n: sign(n) * _f(x) ** n,
    grid=XY_GRID, small_grid=XY_SMALL,
)

_algebra(
    'algebra-binomial-reflected', 'Binomial formula against x + y',
    'sum_{j=0}^n (-1)^j C(n,j) x^j (x + y)^{n-j} = y^n',
    XY + [('n', NON_NEGATIVE)],
    lhs=lambda x, y, n: sum(sign(j) * comb(n, j) * _f(x) ** j * (_f(x) + y) ** (n - j) for j in range(n + 1)),
    rhs=lambda x, y, n: _f(y) ** n,
    grid=XY_GRID, small_grid=XY_SMALL,
)

# j = 0 terms carry a factor j and are dropped

_algebra(
    'algebra-binomial-derivative', 'Derivative of the binomial formula',
    'sum_{j=0}^n C(n,j) j x^{j-1} y^{n-j} = n (x + y)^{n-1}',
    XY + [('n', POSITIVE)],
    lhs=lambda x, y, n: sum(comb(n, j) * j * _f(x) ** (j - 1) * _f(y) ** (n - j) for j in range(1, n + 1)),
    rhs=lambda x, y, n: n * (_f(x) + y) ** (n - 1),
    grid=XY_POSITIVE_GRID, small_grid=XY_POSITIVE_SMALL,
)

_algebra(
    'algebra-binomial-derivative-shifted', 'Derivative of the binomial formula in x + y',
    'sum_{j=0}^n (-1)^j C(n,j) j (x + y)^{j-1} y^{n-j} = (-1)^n n x^{n-1}',
    XY + [('n', POSITIVE)],
    lhs=lambda x, y, n: sum(
        sign(j) * comb(n, j) * j * (_f(x) + y) ** (j - 1) * _f(y) ** (n - j) for j in range(1, n + 1)
    ),
    rhs=lambda x, y, n: sign(n) * n * _f(x) ** (n - 1),
    grid=XY_POSITIVE_GRID, small_grid=XY_POSITIVE_SMALL,
)

_algebra(
    'algebra-binomial-derivative-reflected', 'Derivative of the binomial formula against x + y',
    'sum_{j=1}^n (-1)^{j-1} C(n,j) x^{j-1} j (x + y)^{n-j} = n y^{n-1}',
    XY + [('n', POSITIVE)],
    lhs=lambda x, y, n: sum(
        sign(j - 1) * comb(n, j) * _f(x) ** (j - 1) * j * (_f(x) + y) ** (n - j) for j in range(1, n + 1)
    ),
    rhs=lambda x, y, n: n * _f(y) ** (n - 1),
    grid=XY_POSITIVE_GRID, small_grid=XY_POSITIVE_SMALL,
)

_algebra(
    'algebra-first-moment', 'First binomial moment',
    'sum_{j=0}^n C(n,j) j x^j y^{n-j} = n x (x + y)^{n-1}',
    XY + [('n', POSITIVE)],
    lhs=lambda x, y, n: sum(comb(n, j) * j * _f(x) ** j * _f(y) ** (n - j) for j in range(n + 1)),
    rhs=lambda x, y, n: n * _f(x) * (_f(x) + y) ** (n - 1),
    grid=XY_POSITIVE_GRID, small_grid=XY_POSITIVE_SMALL,
)

_algebra(
    'algebra-waring', "Waring's formula",
    'sum_{j<=n/2} (-1)^j n/(n-j) C(n-j,j) (xy)^j (x + y)^{n-2j} = x^n + y^n',
    XY + [('n', POSITIVE)],
    lhs=lambda x, y, n: sum(
        sign(j) * waring_weight(n, j) * (_f(x) * y) ** j * (_f(x) + y) ** (n - 2 * j) for j in range(n // 2 + 1)
    ),
    rhs=lambda x, y, n: _f(x) ** n + _f(y) ** n,
    grid=XY_POSITIVE_GRID, small_grid=XY_POSITIVE_SMALL,
)

_algebra(
    'algebra-waring-dual', "Dual of Waring's formula",
    'sum_{j<=n/2} (-1)^j C(n-j,j) (xy)^j (x + y)^{n-2j} = (x^{n+1} - y^{n+1})/(x - y)',
    XY + [('n', NON_NEGATIVE)],
    lhs=lambda x, y, n: sum(
        sign(j) * comb(n - j, j) * (_f(x) * y) ** j * (_f(x) + y) ** (n - 2 * j) for j in range(n // 2 + 1)
    ),
    rhs=lambda x, y, n: (_f(x) ** (n + 1) - _f(y) ** (n + 1)) / (_f(x) - y),
    admissible=_requires(x_must_differ_from_y=lambda x, y, n: x != y),
    grid=XY_GRID, small_grid=XY_SMALL,
)
