"""Exception types shared across the package."""

from __future__ import annotations


class TbiError(Exception):
    """Base class for all errors raised by this package."""


class EmptyTerm(TbiError, ValueError):
    """Raised when a raw string normalizes to nothing."""


class EmptyVocabulary(TbiError, ValueError):
    """Raised when an index or statistic is requested for zero terms."""


class NotInVocabulary(TbiError, KeyError):
    """Raised by super-term lookup for a term that was never indexed."""

    def __init__(self, term: str) -> None:
        super().__init__(term)
        self.term = term

    def __str__(self) -> str:
        return f"term not in vocabulary: {self.term!r}"


class IndexFrozen(TbiError, RuntimeError):
    """Raised when building into an index whose bucket table was discarded."""


class InvalidSpec(TbiError, ValueError):
    """Raised for a degenerate synthetic-vocabulary specification."""


class ResultMismatch(TbiError, AssertionError):
    """Raised when two systems disagree on a result set."""

    def __init__(self, message: str, query: str | None = None) -> None:
        super().__init__(message)
        self.query = query
