from typing import Any


class LSpaceKnotsError(Exception):
    """Base class of every error raised by lspace_knots"""


class ImproperlyConfigured(LSpaceKnotsError, ValueError):
    """Exception for wrong configuration"""


class ZeroPolynomial(LSpaceKnotsError, ValueError):
    """Raised when an operation is undefined on the zero polynomial"""


class NotDivisible(LSpaceKnotsError, ArithmeticError):
    """Exact division left a nonzero remainder"""


class InvalidParameters(LSpaceKnotsError, ValueError):
    """A knot expression node breaks its parameter rules"""

    def __init__(self, node: Any, reason: str) -> None:
        self.node = node
        self.reason = reason
        super().__init__(f"invalid knot expression {node}: {reason}")


class OutsideP(LSpaceKnotsError, ValueError):
    """Knot is not known to satisfy g(K) = tau(K)"""


class NotLSpaceKnot(LSpaceKnotsError, ValueError):
    """Operation only defined for L-space knots"""


class NotLSpaceForm(LSpaceKnotsError, ValueError):
    """Polynomial does not have the shape of an L-space knot's Alexander polynomial"""


class NotAComplex(LSpaceKnotsError, ValueError):
    """Boundary map does not square to zero"""


class NonPositiveSlope(LSpaceKnotsError, ValueError):
    """Rank formula used with a surgery slope a/b where a < 1"""


class InvalidSlope(LSpaceKnotsError, ValueError):
    """Slope is not a reduced fraction with positive denominator"""


class NotACable(LSpaceKnotsError, TypeError):
    """Operation needs a cable expression"""


class ParseError(LSpaceKnotsError, ValueError):
    """Text could not be parsed, position is the 0-based offset of the failure"""

    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownCommand(LSpaceKnotsError, KeyError):
    """No command registered under the given name"""
