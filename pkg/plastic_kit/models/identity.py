"""
Identity Catalog Models
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

# Parameter domains
INTEGER = 'integer'
NON_NEGATIVE = 'integer >= 0'
POSITIVE = 'integer >= 1'
SET_ID = 'set 1..15'
ZERO_INDEX = 'zero of P'
COMPONENT = 'component 0..2'
RATIONAL = 'rational'

PADOVAN_ZEROS = (-17, -8, -4, -3, -1)


def domain_violation(domain: str, value) -> Optional[str]:
    """Return a message when value lies outside domain, else None."""
    if domain in (INTEGER, RATIONAL):
        return None
    if domain == NON_NEGATIVE and value < 0:
        return 'must be >= 0'
    if domain == POSITIVE and value < 1:
        return 'must be >= 1'
    if domain == SET_ID and not 1 <= value <= 15:
        return 'must name a set-table row 1..15'
    if domain == ZERO_INDEX and value not in PADOVAN_ZEROS:
        return f'must be one of {PADOVAN_ZEROS}'
    if domain == COMPONENT and value not in (0, 1, 2):
        return 'must be 0, 1 or 2'
    return None


@dataclass(frozen=True)
class Anchor:
    """Where a statement comes from and how it reads."""

    source: str
    statement: str

    def to_dict(self) -> dict:
        return {'source': self.source, 'statement': self.statement}


@dataclass(frozen=True)
class Correction:
    """Candidate repair of a suspect statement; replaces one or both sides."""

    label: str
    lhs: Optional[Callable] = None
    rhs: Optional[Callable] = None


@dataclass(frozen=True)
class IdentityDescriptor:
    """Catalog entry binding an exact LHS evaluator to an exact RHS closed form."""

    id: str
    title: str
    anchor: Anchor
    params: Tuple[Tuple[str, str], ...]
    lhs: Callable
    rhs: Callable
    grid: str
    small_grid: str
    family: str
    admissible: Optional[Callable] = None
    errata_watch: bool = False
    corrections: Tuple[Correction, ...] = ()

    @property
    def param_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.params)

    def violation(self, params: Dict[str, int]) -> Optional[str]:
        """First violated constraint at params, or None."""
        names = set(self.param_names)
        if set(params) != names:
            return f'expected parameters {sorted(names)}, got {sorted(params)}'
        for name, domain in self.params:
            problem = domain_violation(domain, params[name])
            if problem:
                return f'{name} = {params[name]} {problem}'
        if self.admissible is not None:
            return self.admissible(**params)
        return None

    def summary(self) -> dict:
        return {
            'id': self.id,
            'title': self.title,
            'family': self.family,
            'anchor': self.anchor.to_dict(),
            'params': [{'name': n, 'domain': d} for n, d in self.params],
            'default_grid': self.grid,
            'errata_watch': self.errata_watch,
            'corrections': [c.label for c in self.corrections],
        }


@dataclass(frozen=True)
class GenericAlgebraIdentity(IdentityDescriptor):
    """Identity in rational indeterminates x, y and integer exponents."""

    variables: Tuple[str, ...] = ('x', 'y')


@dataclass
class CheckResult:
    """Outcome at one parameter point; passed iff lhs == rhs exactly."""

    id: str
    params: Dict[str, object]
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    passed: bool
    error: Optional[str] = None

    @classmethod
    def compare(cls, identity_id: str, params: dict, lhs, rhs) -> 'CheckResult':
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(identity_id, dict(params), lhs, rhs, lhs == rhs)

    def __repr__(self):
        verdict = 'pass' if self.passed else 'FAIL'
        return f'<CheckResult {self.id} {self.params} {verdict}>'
