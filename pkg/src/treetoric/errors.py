"""Exception types shared across the package."""


class TreeError(ValueError):
    """Malformed or invariant-violating tree document."""


class GraphError(ValueError):
    """Graph does not satisfy the preconditions of an operation."""


class SingularMatrixError(ArithmeticError):
    """Exact determinant is zero where an invertible matrix is required."""


class SamplingError(RuntimeError):
    """No invertible sample found within the retry budget."""


class NotApplicableError(RuntimeError):
    """Tree falls outside the classes with a known toric description.

    Carries the classification report so callers can surface the reason.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
