"""Term indexing for fast super-term and nested-term retrieval."""

from .counter import ComparisonCounter
from .errors import (
    EmptyTerm,
    EmptyVocabulary,
    IndexFrozen,
    InvalidSpec,
    NotInVocabulary,
    ResultMismatch,
    TbiError,
)
from .index import TbiIndex, build_index, discard_buckets, nested_terms_of, super_terms_of
from .terms import Term, TermMetrics, is_nested_in, metrics, normalize, proper_ngrams

__version__ = "0.1.0"

__all__ = [
    "ComparisonCounter",
    "EmptyTerm",
    "EmptyVocabulary",
    "IndexFrozen",
    "InvalidSpec",
    "NotInVocabulary",
    "ResultMismatch",
    "TbiError",
    "TbiIndex",
    "Term",
    "TermMetrics",
    "build_index",
    "discard_buckets",
    "is_nested_in",
    "metrics",
    "nested_terms_of",
    "normalize",
    "proper_ngrams",
    "super_terms_of",
]
