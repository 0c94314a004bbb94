"""Exception types shared across the package."""


class PdpolyError(Exception):
    """Base class for every error raised by this package."""


class InvalidVertex(PdpolyError):
    """A vertex index is outside the graph's vertex range."""


class SelfLoop(PdpolyError):
    """An edge joins a vertex to itself; only simple graphs are supported."""


class FormatError(PdpolyError):
    """Malformed graph6 or edge-list input."""


class ArityError(PdpolyError):
    """A composition operation received the wrong number of pieces."""


class FamilyDomainError(PdpolyError):
    """A named-family parameter is below the family's minimum order."""


class NotDivisible(PdpolyError):
    """Exact polynomial division was requested but the remainder is nonzero."""


class TooLarge(PdpolyError):
    """The instance exceeds an enumeration or counting cap."""


class TooShort(PdpolyError):
    """A binary string is too short to normalize."""


class NotConnectedForm(PdpolyError):
    """A threshold string ends in a 0-block where a 1-block is required."""


class HypothesisNotMet(PdpolyError):
    """A formula's structural hypothesis fails for the given input."""


class NumericFailure(PdpolyError):
    """The iterative root finder did not converge within its iteration cap."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class DomainError(PdpolyError):
    """A numeric argument is outside the operation's domain."""


class IngestError(PdpolyError):
    """A catalog file yielded no usable graphs."""


class IncompleteCatalog(PdpolyError):
    """A catalog-level check needs orders that are missing from the input."""
