"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InvariantViolation(RuntimeError):
    """An identity that must hold exactly was found to fail."""


class PrecisionExhausted(RuntimeError):
    """A q-adic computation needed more precision than the configured cap."""
