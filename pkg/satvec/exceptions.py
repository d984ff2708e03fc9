from typing import List, Optional


class IllegalArgumentException(Exception):
    """
    Passed an illegal or inappropriate argument.
    """


class SatvecException(Exception):
    """Base class of every error raised by satvec."""


class SignatureError(SatvecException):
    """The signature declaration is invalid."""


class UnrepresentableGraphError(SatvecException):
    """The graph cannot be encoded with this signature or constraint system."""

    def __init__(self, message: str, violations: Optional[List] = None):
        super().__init__(message)
        self.violations = violations if violations is not None else []


class PlaceholderPoolExhausted(UnrepresentableGraphError):
    """No free placeholder is left in the pool a concrete label should bind to."""


class MatchError(SatvecException):
    """No generated constraint matches a node.

    For a valid graph this means the symbol or arity was absent at generation time.
    """


class SystemMismatchError(SatvecException):
    """A vector or file does not belong to the constraint system it is used with."""


class DecodingError(SatvecException):
    """Base class of the errors raised while decoding a vector."""


class UnsatisfiableError(DecodingError):
    """The formula has no (remaining) model."""


class DecodingTimeout(DecodingError):
    """The time budget expired before a verified graph was found."""


class CycleBudgetExceeded(DecodingError):
    """The implication graph holds more simple cycles than the configured cap."""


class InvalidReconstruction(DecodingError):
    """A model assembled to an invalid graph."""

    def __init__(self, message: str, violations: Optional[List] = None):
        super().__init__(message)
        self.violations = violations if violations is not None else []


class SolverUnavailableError(SatvecException):
    """The configured SAT solver backend cannot be used."""


class ClauseSyntaxError(SatvecException):
    """A clause could not be parsed."""

    def __init__(self, message: str, column: int = 0):
        super().__init__(message)
        self.column = column
