"""Exception hierarchy shared across the package."""


class EviboxError(Exception):
    """Base class for all library errors."""


class InvalidInputError(EviboxError, ValueError):
    """An argument violates a documented precondition or type invariant."""


class DegenerateDataError(EviboxError, ValueError):
    """The data makes the requested statistic undefined.

    Raised for constant columns in min-max fitting, empty ground-truth
    sets in AP evaluation, and constant series in rank correlation.
    """


class NumericError(EviboxError, ArithmeticError):
    """A computation produced a non-finite value or diverged."""


class ParseError(EviboxError, ValueError):
    """A text record could not be parsed.

    Attributes:
        column: zero-based index of the offending field, or None when the
            problem is structural (wrong field count, empty line).
    """

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column
