"""
Error Types
"""


class PlasticKitError(Exception):
    """Base error; carries a message and an optional payload for reports."""

    exit_code = 2

    def __init__(self, message: str, **payload):
        super().__init__(message)
        self.message = message
        self.payload = payload

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {'error': self.message, 'type': type(self).__name__, **self.payload}


class ZeroConstantTerm(PlasticKitError):
    """Series expansion of a rational function whose denominator vanishes at 0."""


class NotInvertible(PlasticKitError):
    """Inverse of a zero element (or of an element with vanishing norm)."""


class DegenerateDenominator(PlasticKitError):
    """A quotient whose denominator is the zero element or the zero polynomial."""


class DegenerateParameters(PlasticKitError):
    """Parameters for which a generating function has no well-defined form."""


class ParityViolation(PlasticKitError):
    """An integer that must be even by theorem turned out odd."""


class UnknownIdentity(PlasticKitError):
    """Catalog lookup for an id that is not registered."""


class InadmissibleParams(PlasticKitError):
    """A parameter point outside an identity's declared domain."""


class GridSyntaxError(PlasticKitError):
    """Malformed grid specification."""

    def __init__(self, message: str, offset: int):
        super().__init__(f'{message} (at offset {offset})', offset=offset)
        self.offset = offset


class EmptyRange(PlasticKitError):
    """Grid interval with lo > hi."""


class CapExceeded(PlasticKitError):
    """Grid whose point count is above the configured cap."""


class GridParamError(PlasticKitError):
    """Grid names a parameter the target identity does not take."""


class NoMatch(PlasticKitError):
    """Identity filter that matches nothing in the catalog."""


class ConfigError(PlasticKitError):
    """Unreadable or malformed configuration file."""
