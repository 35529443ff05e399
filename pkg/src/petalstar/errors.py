"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ComputationError(RuntimeError):
    """A numerical procedure failed to produce a certified answer."""


class BracketError(ComputationError):
    """A root bracket does not contain a sign change."""
