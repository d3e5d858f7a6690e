"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """An argument is outside the range the library supports."""


class ShapeError(ValueError):
    """Vector or matrix dimensions do not agree."""


class InfeasibleError(RuntimeError):
    """A requested computation exceeds a documented size guard."""

    def __init__(self, message, guard=None):
        super().__init__(message)
        self.guard = guard


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (a result contradicts a known identity)."""
