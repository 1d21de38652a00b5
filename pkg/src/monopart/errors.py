"""Exception hierarchy shared by all modules."""


class MonopartError(Exception):
    """Base class for library errors."""


class PreconditionError(MonopartError, ValueError):
    """A documented precondition of an operation does not hold."""


class SizeError(MonopartError, ValueError):
    """Input is above the size cap of an exact (exponential) routine."""


class FormatError(MonopartError, ValueError):
    """A text file does not follow its format. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StuckError(MonopartError):
    """Greedy extension found no admissible image for a vertex."""

    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"no admissible image for vertex {vertex}")


class CoverFailure(MonopartError):
    """Cylinder cover could not embed one of its pieces.

    ``partial`` holds the pieces that were embedded before the failure.
    """

    def __init__(self, message, partial=()):
        self.partial = list(partial)
        super().__init__(message)


class BudgetError(MonopartError):
    """A piece or search budget ran out; ``partial`` carries what was built."""

    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)
