"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A precondition or domain invariant was violated."""


class CapacityError(ValidationError):
    """An enumeration-based operation was asked to exceed its configured cap."""
