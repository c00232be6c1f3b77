"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition or invariant."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to produce a trustworthy result."""


class InconsistentDataError(NumericalError):
    """Spectral data are mutually inconsistent: no Herglotz function fits them."""
