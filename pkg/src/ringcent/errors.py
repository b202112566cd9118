"""Exception types shared across the package."""


class RingError(Exception):
    """Base class for all ringcent errors."""


class ValidationError(RingError):
    """A table failed one of the ring axioms."""


class BadIdentityConvention(ValidationError):
    """Element 0 is not the additive identity."""


class NonAbelianAddition(ValidationError):
    """Addition table is not a commutative group operation."""


class NoAdditiveInverse(ValidationError):
    """Some element has no additive inverse."""


class NotAssociative(ValidationError):
    """Multiplication is not associative."""


class NotDistributive(ValidationError):
    """A distributive law fails."""


class IndexOutOfRange(RingError):
    """An element index is outside 0..order-1."""


class NotAdditiveSubgroup(RingError):
    """A subset is not closed under the additive group operation."""


class NotPrime(RingError):
    """A parameter that must be prime is not."""


class NotOddPrime(RingError):
    """A parameter that must be an odd prime is not."""


class TooLarge(RingError):
    """A requested object exceeds the supported size budget."""


class UnknownSuite(RingError):
    """No verification suite with the given id exists."""


class EmptyUniverse(RingError):
    """A verification run was asked to check an empty set of rings."""


class PartialUniverse(RingError):
    """Enumeration hit its time budget before covering the search space."""
