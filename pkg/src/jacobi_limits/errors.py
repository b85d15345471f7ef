"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the exact domain of an operation.

    Raised for vanishing denominator factors, degenerate scalings and
    parameters for which an exact rational answer does not exist.
    """


class ConsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagree."""
