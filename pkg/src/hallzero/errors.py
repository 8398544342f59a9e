"""Exception types shared across the package."""


class CapExceededError(ValueError):
    """A requested computation exceeds the configured enumeration caps."""


class InfeasibleError(CapExceededError):
    """Not enough sample primes are available to reconstruct a polynomial."""


class InterpolationError(RuntimeError):
    """Internal consistency failure while reconstructing a polynomial.

    Raised when a fitted polynomial has a non-integer coefficient or fails
    validation at a held-out prime.  A wrong polynomial is never returned.
    """
