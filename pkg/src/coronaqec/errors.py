"""Exception types raised by the library."""


class CoronaQecError(Exception):
    """Base class for all errors raised by coronaqec."""


class ParameterError(CoronaQecError, ValueError):
    """Invalid generator, parser, or configuration parameters."""


class PreconditionError(CoronaQecError, ValueError):
    """An operation was called on inputs outside its domain."""


class DisconnectedGraphError(PreconditionError):
    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: vertex {v} unreachable from {u}")
        self.pair = (u, v)


class DomainError(CoronaQecError, ValueError):
    """A requested eigenvalue is not in the spectrum."""


class NumericalError(CoronaQecError, ArithmeticError):
    def __init__(self, message, residual=None):
        if residual is not None:
            message = f"{message} (worst residual {residual:.3e})"
        super().__init__(message)
        self.residual = residual


class SingularShiftError(NumericalError):
    """The shifted matrix A + (2 + lam) I is singular to within tolerance."""


class PoleError(NumericalError):
    pass


class FormulaInapplicableError(CoronaQecError):
    """No admissible real root exists for the inverse of psi."""
