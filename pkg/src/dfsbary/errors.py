"""Exception types raised by the library."""


class DfsError(Exception):
    """Base class for all library errors."""


class SizeError(DfsError, ValueError):
    """Array or grid dimensions are invalid or inconsistent."""


class DegeneracyError(DfsError, ValueError):
    """Interpolation nodes coincide, so barycentric weights do not exist."""


class DomainError(DfsError, ValueError):
    """An evaluation point lies outside the domain of the interpolant."""


class NumericalError(DfsError, ArithmeticError):
    """An iterative computation failed to converge."""


class DivergenceError(NumericalError):
    """A time-stepping run produced non-finite values."""

    def __init__(self, step, message=None):
        self.step = step
        super().__init__(message or f"non-finite tracer values at step {step}")
