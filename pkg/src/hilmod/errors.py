"""Exception hierarchy."""


class HilmodError(Exception):
    """Base class for library errors."""


class ResourceLimitError(HilmodError, ValueError):
    """A level or sequence index exceeds the configured cap."""


class PartitionError(HilmodError, ValueError):
    """A cell sequence is not a valid dyadic partition of [0, 1)."""


class OverlapError(PartitionError):
    pass


class GapError(PartitionError):
    pass


class UnsortedError(PartitionError):
    pass


class BackendMismatchError(HilmodError, TypeError):
    """Operands belong to different algebra backends."""


class DomainError(HilmodError, ValueError):
    """A point lies outside [0, 1) or an argument is out of its range."""


class FormatError(HilmodError, ValueError):
    """Malformed serialized input."""


class VerificationError(HilmodError, AssertionError):
    """A closed-form contract was violated by a computed value."""
