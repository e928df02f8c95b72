"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Vector/matrix/hyperplane dimensions do not agree."""


class InputError(ValueError):
    """Invalid user-supplied parameters (CLI exit code 2)."""


class NotSimpleError(ValueError):
    """An operation requiring a simple arrangement received a non-simple one."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedDimensionError(ValueError):
    """Operation is only defined for specific dimensions (d = 2 or 3)."""


class InternalConsistencyError(RuntimeError):
    """An enumeration invariant failed; signals a bug or bad input."""


class GenerationError(RuntimeError):
    """Random arrangement generation exhausted its retry budget."""
