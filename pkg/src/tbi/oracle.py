"""Brute-force ground truth for the nesting relation.

Shares nothing with the indexes except :func:`tbi.terms.is_nested_in`.
Quadratic in vocabulary size; meant for test-scale inputs.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import EmptyVocabulary
from .terms import TermLike, as_term, is_nested_in


@dataclass
class OracleTable:
    supers: dict[str, set[str]] = field(default_factory=dict)
    nesteds: dict[str, set[str]] = field(default_factory=dict)

    def relation_count(self) -> int:
        return sum(len(s) for s in self.supers.values())


def _distinct(vocabulary: Iterable[TermLike]):
    seen: dict[str, object] = {}
    for raw in vocabulary:
        term = as_term(raw)
        seen.setdefault(term.text, term)
    return list(seen.values())


def oracle_build(vocabulary: Iterable[TermLike]) -> OracleTable:
    """Test every ordered pair of distinct terms for nesting."""
    terms = _distinct(vocabulary)
    if not terms:
        raise EmptyVocabulary("oracle needs at least one term")
    supers = {a.text: {b.text for b in terms if is_nested_in(a, b)} for a in terms}
    nesteds: dict[str, set[str]] = {t.text: set() for t in terms}
    for a, sups in supers.items():
        for b in sups:
            nesteds[b].add(a)
    table = OracleTable(supers=supers, nesteds=nesteds)
    return table


def oracle_nested_query(vocabulary: Iterable[TermLike], query: TermLike) -> set[str]:
    """Vocabulary terms properly nested in ``query``, by linear scan."""
    q = as_term(query)
    return {t.text for t in map(as_term, vocabulary) if is_nested_in(t, q)}


def oracle_super_query(vocabulary: Iterable[TermLike], query: TermLike) -> set[str]:
    """Vocabulary terms that properly contain ``query``, by linear scan."""
    q = as_term(query)
    return {t.text for t in map(as_term, vocabulary) if is_nested_in(q, t)}
