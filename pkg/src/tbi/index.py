"""Terminological Bucket Indexing: the hybrid two-table term store.

The store keeps two maps:

* ``super_terms`` -- every indexed term mapped to the set of indexed terms
  that properly contain it. Super-term retrieval is a single probe here.
* ``buckets`` -- a four-level map ``tot_nsp_char -> tot_tok -> len ->
  lt_len -> terms`` used only while building. For each new term (taken in
  ascending length order) only buckets with strictly smaller non-space
  character count, token count and length, and a largest-token length no
  greater than the new term's, can hold its nested terms, so only those
  are scanned.

Terms are stored by their normalized text.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Iterator

from .counter import ComparisonCounter, ensure_counter
from .errors import EmptyVocabulary, IndexFrozen, NotInVocabulary
from .terms import TermLike, as_term, proper_ngram_texts

BUCKET_LEVELS = ("tot_nsp_char", "tot_tok", "len", "lt_len")

BucketTable = dict[int, dict[int, dict[int, dict[int, list[str]]]]]
CandidateHook = Callable[[str, str, tuple[int, int, int, int]], None]


class TbiIndex:
    """Hybrid term store supporting super- and nested-term retrieval.

    Attributes:
        super_terms: term text -> set of texts of its super terms.
        buckets: the build-time bucket table, or ``None`` once discarded.
            Leaves hold space-padded term texts.
    """

    def __init__(self) -> None:
        self.super_terms: dict[str, set[str]] = {}
        self.buckets: BucketTable | None = {}
        self._max_len = 0

    @property
    def term_count(self) -> int:
        return len(self.super_terms)

    @property
    def frozen(self) -> bool:
        return self.buckets is None

    def __contains__(self, term: TermLike) -> bool:
        return as_term(term).text in self.super_terms

    def __len__(self) -> int:
        return len(self.super_terms)

    def build(
        self,
        vocabulary: Iterable[TermLike],
        counter: ComparisonCounter | None = None,
        *,
        relax: Iterable[str] = (),
        on_candidate: CandidateHook | None = None,
    ) -> TbiIndex:
        """Index ``vocabulary`` and fill the super-term table.

        May be called again on a non-frozen index provided no new term is
        shorter than the longest term already indexed; otherwise an
        earlier term could be a super term of a later one.

        Args:
            vocabulary: terms or raw strings; duplicates are skipped.
            counter: receives one event per candidate nesting check.
            relax: names from ``BUCKET_LEVELS`` whose pruning inequality is
                disabled (every key at that level is scanned). Used to test
                that pruning is sound.
            on_candidate: called as ``hook(new_text, candidate_text, key)``
                for every candidate examined.
        """
        if self.buckets is None:
            raise IndexFrozen("bucket table was discarded; the index is read-only")
        terms = [as_term(t) for t in vocabulary]
        if not terms:
            raise EmptyVocabulary("cannot index an empty vocabulary")
        unknown = set(relax) - set(BUCKET_LEVELS)
        if unknown:
            raise ValueError(f"unknown bucket level(s): {sorted(unknown)}")

        ordered = sorted(terms, key=lambda t: len(t.text))
        if len(ordered[0].text) < self._max_len:
            raise ValueError(
                "incremental build requires new terms no shorter than indexed ones"
            )

        counter = ensure_counter(counter)
        relaxed = set(relax)
        super_terms = self.super_terms
        buckets = self.buckets

        for term in ordered:
            text = term.text
            if text in super_terms:
                continue
            length = len(text)
            tot_tok = len(term.tokens)
            lt_len = max(map(len, term.tokens))
            tot_nsp_char = length - tot_tok + 1
            super_terms[text] = set()
            padded = f" {text} "

            # insert_term_in_bucket: one leaf per term, chained k1 -> k4
            (
                buckets.setdefault(tot_nsp_char, {})
                .setdefault(tot_tok, {})
                .setdefault(length, {})
                .setdefault(lt_len, [])
                .append(padded)
            )

            # update_nested_terms
            lim1 = math.inf if "tot_nsp_char" in relaxed else tot_nsp_char
            lim2 = math.inf if "tot_tok" in relaxed else tot_tok
            lim3 = math.inf if "len" in relaxed else length
            lim4 = math.inf if "lt_len" in relaxed else lt_len
            for k1, bucket_k1 in buckets.items():
                if k1 >= lim1:
                    continue
                for k2, bucket_k2 in bucket_k1.items():
                    if k2 >= lim2:
                        continue
                    for k3, bucket_k3 in bucket_k2.items():
                        if k3 >= lim3:
                            continue
                        for k4, candidates in bucket_k3.items():
                            if k4 > lim4:
                                continue
                            counter.add(len(candidates))
                            if on_candidate is not None:
                                key = (k1, k2, k3, k4)
                                for cand in candidates:
                                    on_candidate(text, cand[1:-1], key)
                            for cand in candidates:
                                if cand in padded and cand != padded:
                                    super_terms[cand[1:-1]].add(text)
            self._max_len = length
        return self

    def discard_buckets(self) -> TbiIndex:
        """Release the bucket table; retrieval keeps working, building does not."""
        self.buckets = None
        return self

    def super_terms_of(
        self, query: TermLike, counter: ComparisonCounter | None = None
    ) -> set[str]:
        """Super terms of an indexed term: exactly one table probe."""
        text = as_term(query).text
        ensure_counter(counter).add(1)
        try:
            return set(self.super_terms[text])
        except KeyError:
            raise NotInVocabulary(text) from None

    def nested_terms_of(
        self, query: TermLike, counter: ComparisonCounter | None = None
    ) -> set[str]:
        """Indexed terms properly nested in ``query``.

        Every distinct proper n-gram of the query is probed once against
        the super-term table. The query itself need not be indexed.
        """
        candidates = proper_ngram_texts(as_term(query).tokens)
        ensure_counter(counter).add(len(candidates))
        keys = self.super_terms
        return {c for c in candidates if c in keys}

    def relations(self) -> Iterator[tuple[str, str]]:
        """Yield every ``(nested, super)`` pair."""
        for nested, supers in self.super_terms.items():
            for sup in supers:
                yield nested, sup

    def relation_count(self) -> int:
        return sum(len(s) for s in self.super_terms.values())

    def bucket_terms(self, key: tuple[int, int, int, int]) -> list[str]:
        """Texts stored in the leaf addressed by ``(k1, k2, k3, k4)``."""
        if self.buckets is None:
            raise IndexFrozen("bucket table was discarded")
        k1, k2, k3, k4 = key
        try:
            leaf = self.buckets[k1][k2][k3][k4]
        except KeyError:
            return []
        return [p[1:-1] for p in leaf]

    def iter_buckets(self) -> Iterator[tuple[tuple[int, int, int, int], list[str]]]:
        if self.buckets is None:
            raise IndexFrozen("bucket table was discarded")
        for k1, b1 in self.buckets.items():
            for k2, b2 in b1.items():
                for k3, b3 in b2.items():
                    for k4, leaf in b3.items():
                        yield (k1, k2, k3, k4), [p[1:-1] for p in leaf]

    @classmethod
    def from_super_terms(cls, table: dict[str, Iterable[str]]) -> TbiIndex:
        """Rebuild a read-only index from a stored super-term table."""
        index = cls()
        index.super_terms = {k: set(v) for k, v in table.items()}
        index.buckets = None
        return index


def build_index(
    vocabulary: Iterable[TermLike],
    counter: ComparisonCounter | None = None,
    **kwargs,
) -> TbiIndex:
    return TbiIndex().build(vocabulary, counter, **kwargs)


def super_terms_of(
    index: TbiIndex, query: TermLike, counter: ComparisonCounter | None = None
) -> set[str]:
    return index.super_terms_of(query, counter)


def nested_terms_of(
    index: TbiIndex, query: TermLike, counter: ComparisonCounter | None = None
) -> set[str]:
    return index.nested_terms_of(query, counter)


def discard_buckets(index: TbiIndex) -> TbiIndex:
    return index.discard_buckets()


__all__ = [
    "BUCKET_LEVELS",
    "TbiIndex",
    "build_index",
    "discard_buckets",
    "nested_terms_of",
    "super_terms_of",
]
