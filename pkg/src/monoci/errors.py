"""Exception types shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class ConvergenceError(ArithmeticError):
    """An iterative method hit its cap without meeting the tolerance.

    ``bracket`` holds the last known enclosing interval, when one exists.
    """

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class StructuralError(ArithmeticError):
    """A sign pattern required by the theory was not observed."""


class AttainableRangeError(DomainError):
    """Target value lies outside the range attained over the parameter domain."""

    def __init__(self, message, attainable):
        super().__init__(message)
        self.attainable = attainable
