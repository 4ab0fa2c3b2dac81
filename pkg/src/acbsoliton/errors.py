"""Exception hierarchy shared by every module of the package."""


class AcbError(Exception):
    """Base class for all errors raised by acbsoliton."""


class StructuralError(AcbError):
    """Inputs have incompatible shapes, parameter sets, or a singular metric."""


class EvaluationError(AcbError, ArithmeticError):
    """A numeric substitution hit a vanishing denominator or a missing parameter."""


class DomainError(AcbError, ValueError):
    """An operation was called outside the range where it is defined."""


class DocumentError(AcbError):
    """A manifold document could not be parsed or failed validation."""

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)
