"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid input parameters (non-prime characteristic, out-of-range twist...)."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""
