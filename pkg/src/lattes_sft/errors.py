"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition of an operation was violated."""


class ParseError(ValueError):
    """A text form could not be parsed."""


class BudgetExceededError(DomainError):
    """An enumeration exceeded its configured budget."""
