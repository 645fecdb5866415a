"""Exception hierarchy shared across the package."""


class EvoansatzError(Exception):
    """Base class for all package errors."""


class CapacityError(EvoansatzError):
    """Requested system size exceeds what the dense simulator supports."""


class StructuralError(EvoansatzError):
    """Malformed circuit, state, or operator (bad indices, dimension mismatch)."""


class ContractError(EvoansatzError):
    """Caller violated a documented precondition."""


class ConvergenceError(EvoansatzError):
    """Iterative solver failed to converge; carries the best estimate."""

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class ParseError(EvoansatzError):
    """Invalid input file."""
