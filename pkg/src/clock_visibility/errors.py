"""Exception types shared across the package."""


class StructuralError(ValueError):
    """A matrix or state vector violates a structural requirement
    (wrong shape, non-Hermitian, non-finite entries, broken norm)."""


class ValidationError(ValueError):
    """User-supplied parameters are out of range, missing, or bound twice."""


class ConvergenceError(RuntimeError):
    """An adaptive truncation cannot reach the requested accuracy."""
