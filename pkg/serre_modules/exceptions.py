"""
Exceptions raised by the serre_modules engine.

The command layer maps these families to exit codes and the HTTP layer maps
them to status codes; see ``pipeline.exit_code_for``.
"""


class SerreError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(SerreError, ValueError):
    """A scalar, index or shape argument is outside its documented range."""


class CapExceeded(InvalidParameter):
    """A configured length cap was exceeded."""


class DimensionMismatch(InvalidParameter):
    """Operands live in different ambient spaces, or use different q."""


class NotAWeightModule(SerreError):
    """The K-spectrum of a representation is not a signed q-string."""


class WrongType(SerreError):
    """The representation does not have type (1, 1)."""


class PreconditionError(SerreError):
    """A hypothesis of the requested construction does not hold."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class SemisimplicityViolation(PreconditionError):
    """An eigenspace sum falls short of the whole space."""


class UnsupportedInput(SerreError):
    """The input needs arithmetic outside the rationals."""


class TheoremViolation(SerreError):
    """An identity that always holds on valid input failed to hold."""


class ConsistencyFailure(TheoremViolation):
    """The criterion and the Burnside oracle disagree."""
