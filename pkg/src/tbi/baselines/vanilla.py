"""Vanilla hash-table indexing: test every ordered term pair."""

from __future__ import annotations

from collections.abc import Iterable

from ..counter import ComparisonCounter, ensure_counter
from ..errors import EmptyVocabulary
from ..terms import TermLike, as_term


class VanillaHashIndex:
    """Term -> set of super terms, filled by an all-pairs scan.

    Indexing is quadratic in the vocabulary size. The pair test is the
    same token-aligned containment check the bucket index uses, so build
    times are directly comparable.
    """

    def __init__(self) -> None:
        self.super_terms: dict[str, set[str]] = {}

    @property
    def term_count(self) -> int:
        return len(self.super_terms)

    def relation_count(self) -> int:
        return sum(len(s) for s in self.super_terms.values())


def vanilla_build(
    vocabulary: Iterable[TermLike], counter: ComparisonCounter | None = None
) -> VanillaHashIndex:
    """Build the table; ``counter`` receives one event per pair tested."""
    texts = list(dict.fromkeys(as_term(t).text for t in vocabulary))
    if not texts:
        raise EmptyVocabulary("cannot index an empty vocabulary")
    counter = ensure_counter(counter)
    padded = [f" {t} " for t in texts]
    index = VanillaHashIndex()
    table = index.super_terms
    for needle in padded:
        supers = table[needle[1:-1]] = set()
        for hay in padded:
            if needle in hay and hay is not needle:
                supers.add(hay[1:-1])
        counter.add(len(padded) - 1)
    return index
