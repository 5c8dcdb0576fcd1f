"""
Identity Service - Catalog Evaluation
"""
from fractions import Fraction
from typing import Dict, List

from plastic_kit.errors import InadmissibleParams, UnknownIdentity
from plastic_kit.models.identity import CheckResult, Correction, GenericAlgebraIdentity, IdentityDescriptor
from plastic_kit.services.identities.base import catalog

# Importing a family module registers its entries
from plastic_kit.services.identities import (  # noqa: F401
    algebra,
    binomial,
    components,
    double_binomial,
    shifts,
    summations,
    waring,
)


class IdentityService:
    """Dispatch over the catalog; every check is exact."""

    @staticmethod
    def get(identity_id: str) -> IdentityDescriptor:
        return catalog.get(identity_id)

    @staticmethod
    def _admit(descriptor: IdentityDescriptor, params: Dict[str, object]):
        problem = descriptor.violation(params)
        if problem:
            raise InadmissibleParams(
                f'{descriptor.id}: {problem}', id=descriptor.id, reason=problem,
            )

    @staticmethod
    def evaluate(identity_id: str, params: Dict[str, object]) -> CheckResult:
        """
        Evaluate both sides of a catalog identity at one point.

        Raises:
            UnknownIdentity: id not in the catalog
            InadmissibleParams: point outside the declared domain
        """
        descriptor = catalog.get(identity_id)
        IdentityService._admit(descriptor, params)
        rhs = descriptor.rhs(**params)
        lhs = descriptor.lhs(**params)
        return CheckResult.compare(descriptor.id, params, lhs, rhs)

    @staticmethod
    def evaluate_correction(descriptor: IdentityDescriptor, correction: Correction,
                            params: Dict[str, object]) -> CheckResult:
        """Evaluate a correction candidate; sides it leaves alone come from the printed form."""
        IdentityService._admit(descriptor, params)
        rhs = (correction.rhs or descriptor.rhs)(**params)
        lhs = (correction.lhs or descriptor.lhs)(**params)
        return CheckResult.compare(descriptor.id, params, lhs, rhs)

    @staticmethod
    def evaluate_generic(identity_id: str, x, y=None, exponents: Dict[str, int] = None) -> CheckResult:
        """Evaluate an algebra identity at rational x, y and integer exponents."""
        descriptor = catalog.get(identity_id)
        if not isinstance(descriptor, GenericAlgebraIdentity):
            raise UnknownIdentity(f"'{identity_id}' is not an algebra identity", id=identity_id)

        values = {'x': Fraction(x), 'y': None if y is None else Fraction(y)}
        params = {name: values[name] for name in descriptor.variables}
        if any(value is None for value in params.values()):
            raise InadmissibleParams(f'{identity_id}: y is required', id=identity_id)
        params.update(exponents or {})
        return IdentityService.evaluate(identity_id, params)

    @staticmethod
    def catalog_list() -> List[dict]:
        return [descriptor.summary() for descriptor in catalog]


__all__ = ['IdentityService', 'catalog']
