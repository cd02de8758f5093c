"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation (size mismatch, bad precondition)."""


class PoleError(ZeroDivisionError):
    """A rational weight or operator symbol hit a pole."""


class ResourceError(RuntimeError):
    """Enumeration would exceed the configured size limit."""
