"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A parameter lies outside the domain where the construction is defined."""


class NumericFailure(ArithmeticError):
    """A numerical step failed (non-finite value, zero pivot, lost positivity)."""


class ConsistencyError(RuntimeError):
    """Two objects that must agree (e.g. a basis and an index) do not."""
