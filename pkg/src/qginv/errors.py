"""Exception types shared across the package."""


class QginvError(Exception):
    """Base class for every error raised by qginv."""


class ShapeError(QginvError, ValueError):
    """Operand dimensions or indices do not fit the operation."""


class DivisionByZero(QginvError, ZeroDivisionError):
    pass


class SizeCapExceeded(QginvError):
    """A row/column determinant was requested above the configured order cap."""


class NotHermitian(QginvError, ValueError):
    pass


class InternalInconsistency(QginvError):
    """Two routes that must agree exactly did not. Always an implementation bug."""


class IndexTooLarge(QginvError, ValueError):
    """The matrix index exceeds what the requested inverse allows (e.g. Ind A >= 2 for A^#)."""


class MethodDisagreement(QginvError):
    """Determinantal and composition routes produced different matrices."""


class RankZero(QginvError, ValueError):
    pass


class ParseError(QginvError, ValueError):
    """Malformed matrix text. ``position`` locates the offending element when known."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
