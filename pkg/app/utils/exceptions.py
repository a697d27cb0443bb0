"""
Library Exceptions
"""
from typing import Optional


class HingeLibError(Exception):
    """Base class for every error raised by the library"""


class ValidationError(HingeLibError, ValueError):
    """Input does not satisfy an operation's preconditions"""


class ParseError(ValidationError):
    """Malformed JSON or CLI syntax"""


class DimensionMismatchError(ValidationError):
    """Ambient dimensions of the operands disagree"""


class SingularMatrixError(ValidationError):
    """An invertible matrix was required"""


class ScaleLimitError(ValidationError):
    """A representation would exceed the configured ambient cap"""


class HingeAxiomError(ValidationError):
    """A hinge axiom failed; `axiom` names the condition, `index` the term j (1-based)"""

    def __init__(self, axiom: str, message: str, index: Optional[int] = None):
        self.axiom = axiom
        self.index = index
        where = f" at j={index}" if index is not None else ""
        super().__init__(f"axiom {axiom} violated{where}: {message}")


class PrecisionExhaustedError(HingeLibError):
    """Jet precision too small; `required` is a precision that suffices"""

    def __init__(self, required: int, message: str = ''):
        self.required = required
        super().__init__(message or f"jet precision exhausted, rerun with precision >= {required}")


class InternalInvariantError(HingeLibError, AssertionError):
    """An internal cross-check failed. Indicates a bug, not a user error."""
