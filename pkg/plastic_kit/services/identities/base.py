"""
Identity Registry
"""
import fnmatch
import logging
from typing import Dict, Iterator, List

from plastic_kit.errors import NoMatch, UnknownIdentity
from plastic_kit.models.identity import Anchor, Correction, IdentityDescriptor

logger = logging.getLogger(__name__)


class IdentityRegistry:
    """Catalog of identities keyed by stable id, iterated in id order."""

    def __init__(self):
        self._entries: Dict[str, IdentityDescriptor] = {}

    def add(self, descriptor: IdentityDescriptor) -> IdentityDescriptor:
        if descriptor.id in self._entries:
            raise ValueError(f"identity '{descriptor.id}' registered twice")
        self._entries[descriptor.id] = descriptor
        logger.debug('Registered %s (%s)', descriptor.id, descriptor.family)
        return descriptor

    def get(self, identity_id: str) -> IdentityDescriptor:
        try:
            return self._entries[identity_id]
        except KeyError:
            raise UnknownIdentity(f"unknown identity '{identity_id}'", id=identity_id) from None

    def match(self, pattern: str) -> List[IdentityDescriptor]:
        matched = [d for d in self if fnmatch.fnmatchcase(d.id, pattern)]
        if not matched:
            raise NoMatch(f"no identity matches '{pattern}'", pattern=pattern)
        return matched

    def __iter__(self) -> Iterator[IdentityDescriptor]:
        return iter(sorted(self._entries.values(), key=lambda d: d.id))

    def __len__(self):
        return len(self._entries)

    def __contains__(self, identity_id):
        return identity_id in self._entries


catalog = IdentityRegistry()


def register(identity_id, title, anchor, params, lhs, rhs, *, grid, small_grid, family,
             admissible=None, errata_watch=False, corrections=(), descriptor_class=IdentityDescriptor,
             **extra):
    """Build a descriptor and add it to the shared catalog."""
    if isinstance(anchor, tuple):
        anchor = Anchor(*anchor)
    return catalog.add(descriptor_class(
        id=identity_id,
        title=title,
        anchor=anchor,
        params=tuple(params),
        lhs=lhs,
        rhs=rhs,
        grid=grid,
        small_grid=small_grid,
        family=family,
        admissible=admissible,
        errata_watch=errata_watch,
        corrections=tuple(corrections),
        **extra,
    ))


__all__ = ['IdentityRegistry', 'catalog', 'register', 'Anchor', 'Correction']
