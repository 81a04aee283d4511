"""Exception hierarchy."""


class PubsentError(Exception):
    """Base class for all library errors."""


class ValidationError(PubsentError, ValueError):
    """A value violates a type invariant or an operation precondition."""


class DimensionError(ValidationError):
    """Vectors that must share a category count do not."""


class UnsupportedDimensionError(DimensionError):
    """The operation is only defined for a specific number of categories."""


class InputError(ValidationError):
    """Malformed or invalid input data.

    ``line`` is the 1-based line number of the offending row when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyInputError(InputError):
    pass


class SummaryUnavailableError(PubsentError):
    """No finite measure values were available to summarize."""
