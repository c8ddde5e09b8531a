from typing import Optional


class IsodimError(Exception):
    """Base exception for isodim errors."""
    exit_code = 1


class FieldMismatchError(IsodimError):
    """Operands belong to different fields."""
    pass


class FieldDivisionError(IsodimError, ZeroDivisionError):
    """Division by the zero element of a field."""
    pass


class DimensionMismatchError(IsodimError):
    """Shapes or vector lengths are incompatible."""
    pass


class ParseError(IsodimError):
    """Malformed scalar, vector or matrix text."""
    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MatrixFileError(ParseError):
    """Matrix file could not be read."""
    pass


class MembershipError(IsodimError):
    """A vector is not a member of the space it must belong to."""
    pass


class NotSubspaceError(MembershipError):
    """A space is not contained in the space it must belong to."""
    pass


class PreconditionError(IsodimError):
    """A procedure was called outside its precondition."""
    pass


class NotInjectiveError(PreconditionError):
    pass


class NotSurjectiveError(PreconditionError):
    pass


class AlreadyInImageError(PreconditionError):
    pass


class NotInvertibleError(PreconditionError):
    pass


class DimensionOrderError(PreconditionError):
    """No map of the requested kind exists between spaces of these dimensions."""

    def __init__(self, message: str, source_dim: int, target_dim: int):
        super().__init__(message)
        self.source_dim = source_dim
        self.target_dim = target_dim


class UnsupportedFieldError(IsodimError):
    pass


class BudgetExceededError(IsodimError):
    """Enumeration would visit more points than the budget allows."""

    def __init__(self, message: str, points: int, max_points: int):
        super().__init__(message)
        self.points = points
        self.max_points = max_points


class OracleInconsistencyError(IsodimError):
    """The brute-force oracle observed something impossible."""
    pass
