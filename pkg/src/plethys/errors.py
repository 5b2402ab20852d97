"""Exception hierarchy.

The CLI maps these onto exit codes: input/domain/contract problems exit 2,
numerical non-convergence exits 3, broken invariants exit 4.
"""


class PlethysError(Exception):
    """Base class for all errors raised by this package."""


class ContractError(PlethysError, ValueError):
    """Caller broke an operation's precondition (order or backend mismatch, ...)."""


class BackendError(ContractError):
    """A value cannot be represented in, or converted to, the requested backend."""


class DomainError(PlethysError, ValueError):
    """Mathematically undefined input, e.g. log of a series with constant term != 1."""


class InputError(PlethysError, ValueError):
    """Malformed or insufficient user input."""


class IntegralityError(PlethysError, ArithmeticError):
    """A value that must be an integer is not."""


class ConvergenceError(PlethysError, ArithmeticError):
    """Iterative root solve did not meet its acceptance test.

    ``best`` holds the last iterate and ``residuals`` the matching |P(z)|.
    """

    def __init__(self, message, best=None, residuals=None):
        super().__init__(message)
        self.best = best
        self.residuals = residuals
