"""Exception types shared across the solver modules."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of the requested quantity
    (r <= 0, negative square-root discriminant, nonpositive Gamma argument)."""


class PoleError(ValueError):
    """A terminating hypergeometric series hit a pole of a Pochhammer ratio
    (the denominator parameter is a nonpositive integer reached before the
    series terminates)."""


class InvalidBranchError(ValueError):
    """Superpotential constants cannot be formed on the required branch."""


class SingularCouplingError(ZeroDivisionError):
    """The first-order relation linking the two spinor components divides by
    M + E - C (spin) or M - E + C (pseudospin), which vanishes here."""


class NoEigenvalueError(RuntimeError):
    """The shooting solver could not bracket an eigenvalue with the requested
    node count inside its search window."""


class NotConvergedError(RuntimeError):
    """An iterative solve exhausted its iteration budget.

    Carries diagnostic state so callers can report how the iteration ended.
    """

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = history if history is not None else []
