"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class InvertibilityError(ArithmeticError):
    """A truncated series with zero constant term has no multiplicative inverse."""


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional.

    Raised when a generating-function coefficient times k! is not a whole
    number, which can only mean the series arithmetic itself is wrong.
    """


class SingularSystemError(ArithmeticError):
    """A linear system has no unique solution."""


class SummandVerificationError(ArithmeticError):
    """A candidate summand polynomial failed against the recurrence it was derived from."""

    def __init__(self, n: int, lhs, rhs):
        self.n = n
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"summand verification failed at n={n}: {lhs} != {rhs}")
