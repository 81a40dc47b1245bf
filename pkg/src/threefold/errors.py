"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible shapes or scalar systems."""


class RankDeficientError(ValueError):
    """Input vectors are linearly dependent where independence is required."""


class PreconditionError(ValueError):
    """A documented precondition on the input does not hold."""


class UnsupportedError(NotImplementedError):
    """The operation is deliberately not defined for this input."""


class DegenerateFormError(ValueError):
    """A bilinear form required to be nondegenerate is (numerically) singular."""


class InternalInconsistencyError(AssertionError):
    """Two independent computation routes disagree; indicates a bug, not bad input."""


class ParseError(ValueError):
    """A representation file is not valid JSON or misses required fields."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """A parsed representation file fails group-table or homomorphism validation."""
