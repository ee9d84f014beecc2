"""
Engine exceptions
"""


class CGAVermaError(Exception):
    """Base exception for engine errors"""
    pass


class ScalarFieldError(CGAVermaError):
    """Raised for failures of exact arithmetic in Q(theta, d, r)"""
    pass


class DivisionByZeroError(ScalarFieldError, ZeroDivisionError):
    """Raised when dividing by the zero scalar"""
    pass


class EvaluationError(ScalarFieldError):
    """Raised when a scalar has a pole at the requested specialization point"""
    pass


class ScalarParseError(ScalarFieldError, ValueError):
    """Raised when a rational or scalar string cannot be parsed"""
    pass


class ParameterError(CGAVermaError, ValueError):
    """Raised when an operation's precondition on its parameters fails (e.g. theta = 0)"""
    pass


class VerificationError(CGAVermaError):
    """Raised when a theorem check fails and the caller asked to fail hard"""
    pass
