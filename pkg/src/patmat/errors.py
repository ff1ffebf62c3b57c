"""Exception hierarchy shared by the library and the command line front end."""


class PatmatError(Exception):
    """Base class for every error raised by patmat."""


class MatrixFormatError(PatmatError, ValueError):
    """Malformed matrix text, pattern word or path file."""


class DomainError(PatmatError, ValueError):
    """Arguments outside the domain where an operation is defined."""


class PreconditionError(DomainError):
    """An input violates a stated precondition (e.g. it already contains the pattern)."""


class StructuralError(PatmatError, RuntimeError):
    """A construction got stuck where the theory says it cannot.

    ``position`` is the 1-based cell where the procedure could not continue.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ResourceCapError(PatmatError, RuntimeError):
    """An exhaustive search was asked to run beyond its hard size cap."""
