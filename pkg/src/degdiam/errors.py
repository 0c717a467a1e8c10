"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class ReconstructionUnavailable(LookupError):
    """Raised when a diagram family has no validated reconstruction data."""
