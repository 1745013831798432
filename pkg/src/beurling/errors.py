"""Exception types shared across the package."""


class InvalidSystemError(ValueError):
    """A prime-system description violates its variant's constraints."""


class CapacityError(RuntimeError):
    """Enumeration would exceed the configured integer limit."""


class DomainError(ValueError):
    """An analytic operation was requested outside its region of validity."""
