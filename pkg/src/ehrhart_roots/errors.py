"""Exception hierarchy.

Each class carries the CLI exit code it maps to, so the command layer can
translate any library failure without a lookup table.
"""


class EhrhartError(Exception):
    exit_code = 1


class InvalidSimplexError(EhrhartError, ValueError):
    """Vertices do not span a full-dimensional integral simplex."""


class ArgumentError(EhrhartError, ValueError):
    """Parameters outside the admissible range of a construction."""


class BudgetExceededError(EhrhartError):
    """An enumeration would exceed its configured point/node budget."""

    exit_code = 2

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class NonConvergenceError(EhrhartError):
    """Root iteration did not reach the residual tolerance.

    ``roots`` and ``residuals`` hold the best iterate so a caller can retry
    at a higher working precision.
    """

    exit_code = 3

    def __init__(self, message, roots=(), residuals=()):
        super().__init__(message)
        self.roots = tuple(roots)
        self.residuals = tuple(residuals)


class CertificationError(EhrhartError):
    """Bisection could not settle a Routh verdict after bounded retries."""

    exit_code = 3


class IdentityMismatchError(EhrhartError, AssertionError):
    """An exact polynomial identity failed; indicates an implementation bug."""

    exit_code = 4

    def __init__(self, message, lhs=None, rhs=None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs
