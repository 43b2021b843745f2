"""Exception classes for the permlab package."""

from typing import Optional


class PermlabError(Exception):
    """Base class for every error raised by permlab."""


class MatrixShapeError(PermlabError, ValueError):
    """Raised when a matrix is empty, ragged, or has more columns than rows."""


class ScalarDomainError(PermlabError, TypeError):
    """Raised when an entry does not belong to the matrix's scalar domain."""


class IndexRangeError(PermlabError, IndexError):
    """Raised when a row or column index lies outside the matrix."""


class PreconditionError(PermlabError, ValueError):
    """Raised when an operation's documented precondition does not hold."""


class BudgetExceededError(PermlabError):
    """Raised when a computation would exceed its configured term budget."""

    def __init__(self, what: str, terms: int, budget: int) -> None:
        self.what = what
        self.terms = terms
        self.budget = budget
        super().__init__(f"{what} needs {terms} terms, budget is {budget}")


class MatrixFileError(PermlabError, ValueError):
    """Raised when a matrix file cannot be parsed.

    ``row`` and ``col`` locate the offending entry when known.
    """

    def __init__(
        self, message: str, *, row: Optional[int] = None, col: Optional[int] = None
    ) -> None:
        self.row = row
        self.col = col
        where = ""
        if row is not None and col is not None:
            where = f" (entry row {row}, column {col})"
        elif row is not None:
            where = f" (row {row})"
        super().__init__(f"{message}{where}")


class ConfigError(PermlabError, ValueError):
    """Raised when a configuration value is present but invalid."""


class SelfCheckError(PermlabError):
    """Raised when a built-in consistency check of a matrix family fails."""
