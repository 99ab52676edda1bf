"""Exception types raised by the library."""


class RingMismatchError(TypeError):
    """Two series over different coefficient rings were combined."""


class SingularSeriesError(ZeroDivisionError):
    """A series with a non-invertible constant term was inverted."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class TruncationError(IndexError):
    """A coefficient beyond the truncation order was requested."""


class EnumerationLimitError(ValueError):
    """An enumeration was requested above the configured size cap."""
