from __future__ import annotations
import math

class ClockforgeError(Exception):
    """ Base class of all errors raised by this package """
    pass

class ConfigError(ClockforgeError, ValueError):
    """ Invalid configuration, either through the config module or the command
        line """
    pass

class ValidationError(ClockforgeError, ValueError):
    """ An input violates the invariants or preconditions of an operation """
    pass

class HypothesisError(ValidationError):
    """ A structural hypothesis of a construction does not hold. The name of the
        hypothesis is kept so callers can report it """

    def __init__(self, hypothesis: str, message: str):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis

class ReducibleClockError(ValidationError):
    """ A tridiagonal clock splits into two blocks at the given cut, i.e. the
        transition amplitude between cut and cut + 1 vanishes """

    def __init__(self, cut: int, message: str = ""):
        super().__init__(message or f"Clock is reducible at cut {cut}")
        self.cut = cut

class NumericalError(ClockforgeError, RuntimeError):
    """ A numerical routine did not reach the requested accuracy. Contains the
        residual that was achieved """

    def __init__(self, message: str, residual: float = math.inf):
        super().__init__(f"{message} (achieved residual {residual:.3e})")
        self.residual = residual

class ClaimVerificationError(ClockforgeError, AssertionError):
    """ A verified claim did not hold on the computed instances """
    pass
