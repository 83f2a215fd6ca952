"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the documented domain of an operation."""


class CapacityError(DomainError):
    """A size limit was exceeded (vertex cap, enumeration cap)."""


class PreconditionError(DomainError):
    """A theorem hypothesis required by an operation does not hold.

    ``vertex`` names the offending vertex when one exists (e.g. an
    isolated vertex violating a minimum-degree hypothesis).
    """

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset
