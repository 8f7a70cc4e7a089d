"""Vocabulary files, corpus statistics and a synthetic vocabulary generator.

Vocabulary files are UTF-8, one raw term per line, LF or CRLF line
endings; lines starting with ``#`` are comments.
"""

from __future__ import annotations

import logging
import random
import string
from collections.abc import Iterable
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .errors import EmptyTerm, EmptyVocabulary, InvalidSpec
from .terms import Term, TermLike, as_term, normalize

log = logging.getLogger(__name__)


@dataclass
class LoadedVocabulary:
    terms: list[Term]
    skipped: int = 0
    duplicates: int = 0
    invalid_encoding: int = 0

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


def load_vocabulary(path: str | Path, *, strict_encoding: bool = False) -> LoadedVocabulary:
    """Read, normalize and deduplicate a vocabulary file.

    Blank or whitespace-only lines are skipped and counted. The first
    occurrence of a duplicate is kept. Lines that are not valid UTF-8 are
    skipped and counted unless ``strict_encoding`` is set, in which case
    the ``UnicodeDecodeError`` propagates.
    """
    data = Path(path).read_bytes()
    out = LoadedVocabulary(terms=[])
    seen: set[str] = set()
    for lineno, raw in enumerate(data.splitlines(), 1):
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError:
            if strict_encoding:
                raise
            log.warning("%s:%d: invalid UTF-8, line skipped", path, lineno)
            out.invalid_encoding += 1
            out.skipped += 1
            continue
        if lineno == 1:
            line = line.removeprefix("\ufeff")
        if line.startswith("#"):
            continue
        try:
            term = normalize(line)
        except EmptyTerm:
            out.skipped += 1
            continue
        if term.text in seen:
            out.duplicates += 1
            continue
        seen.add(term.text)
        out.terms.append(term)
    return out


def write_vocabulary(terms: Iterable[TermLike], path: str | Path) -> None:
    """Write one normalized term per line (LF, UTF-8)."""
    lines = [as_term(t).text + "\n" for t in terms]
    Path(path).write_text("".join(lines), encoding="utf-8")


@dataclass(frozen=True)
class CorpusStats:
    total_unique_terms: int
    avg_tokens_per_term: float
    avg_chars_per_term: float

    def to_dict(self) -> dict:
        return asdict(self)


def compute_stats(vocabulary: Iterable[TermLike]) -> CorpusStats:
    """Averages over unique normalized terms; characters include spaces."""
    unique = {as_term(t).text: as_term(t) for t in vocabulary}
    if not unique:
        raise EmptyVocabulary("no terms to summarize")
    n = len(unique)
    return CorpusStats(
        total_unique_terms=n,
        avg_tokens_per_term=sum(len(t.tokens) for t in unique.values()) / n,
        avg_chars_per_term=sum(len(t.text) for t in unique.values()) / n,
    )


@dataclass(frozen=True)
class SynthSpec:
    """Parameters of a synthetic vocabulary.

    Token counts are drawn from ``tokens_per_term`` (inclusive range) with
    probability proportional to ``1/k``, which gives the short-heavy shape
    of noun-phrase vocabularies. Token lengths are uniform over
    ``token_length``. With probability ``reuse_rate`` a multi-token term
    is grown from an earlier, shorter term by adding random tokens on
    either side, so nesting chains such as ``states`` / ``united states``
    / ``united states army`` occur.

    Terms are generated one at a time from a single RNG stream, so a
    vocabulary of ``n`` terms is a prefix of the one with ``n + k`` terms
    under the same parameters.
    """

    term_count: int
    token_pool_size: int = 50_000
    tokens_per_term: tuple[int, int] = (1, 5)
    token_length: tuple[int, int] = (3, 10)
    reuse_rate: float = 0.3
    seed: int = 0
    alphabet: str = field(default=string.ascii_lowercase, repr=False)

    def validate(self) -> None:
        lo, hi = self.tokens_per_term
        tlo, thi = self.token_length
        if self.term_count < 1:
            raise InvalidSpec("term_count must be positive")
        if self.token_pool_size < 1:
            raise InvalidSpec("token_pool_size must be positive")
        if not 1 <= lo <= hi:
            raise InvalidSpec(f"bad tokens_per_term range {self.tokens_per_term}")
        if not 1 <= tlo <= thi:
            raise InvalidSpec(f"bad token_length range {self.token_length}")
        if not 0.0 <= self.reuse_rate <= 1.0:
            raise InvalidSpec("reuse_rate must lie in [0, 1]")
        if not self.alphabet or any(c.isspace() for c in self.alphabet):
            raise InvalidSpec("alphabet must be non-empty and contain no whitespace")
        capacity = sum(len(self.alphabet) ** n for n in range(tlo, thi + 1))
        if capacity < self.token_pool_size:
            raise InvalidSpec("token_length range too narrow for token_pool_size")

    def token_count_weights(self) -> list[float]:
        lo, hi = self.tokens_per_term
        return [1.0 / k for k in range(lo, hi + 1)]

    @property
    def expected_tokens_per_term(self) -> float:
        lo, hi = self.tokens_per_term
        w = self.token_count_weights()
        return sum(k * wk for k, wk in zip(range(lo, hi + 1), w)) / sum(w)

    @property
    def expected_chars_per_term(self) -> float:
        tlo, thi = self.token_length
        tokens = self.expected_tokens_per_term
        return tokens * (tlo + thi) / 2 + tokens - 1


def brown_like_spec(term_count: int, seed: int = 0, **overrides) -> SynthSpec:
    """A spec shaped like the Brown noun-phrase vocabulary (~2.2 tokens, ~15 chars)."""
    return SynthSpec(term_count=term_count, seed=seed, **overrides)


def _token_pool(spec: SynthSpec, rng: random.Random) -> list[str]:
    lo, hi = spec.token_length
    pool: dict[str, None] = {}
    while len(pool) < spec.token_pool_size:
        n = rng.randint(lo, hi)
        pool.setdefault("".join(rng.choices(spec.alphabet, k=n)), None)
    return list(pool)


def generate_vocabulary(spec: SynthSpec) -> list[Term]:
    """Deterministic synthetic vocabulary of ``spec.term_count`` unique terms."""
    spec.validate()
    rng = random.Random(spec.seed)
    pool = _token_pool(spec, rng)
    lo, hi = spec.tokens_per_term
    counts = list(range(lo, hi + 1))
    weights = spec.token_count_weights()
    by_size: dict[int, list[tuple[str, ...]]] = {}
    seen: set[str] = set()
    terms: list[Term] = []
    budget = 50 * spec.term_count + 1000
    while len(terms) < spec.term_count:
        budget -= 1
        if budget < 0:
            raise InvalidSpec("vocabulary space too small for term_count unique terms")
        k = rng.choices(counts, weights)[0]
        shorter = [n for n in by_size if n < k]
        if shorter and k > 1 and rng.random() < spec.reuse_rate:
            base = list(rng.choice(by_size[rng.choice(shorter)]))
            while len(base) < k:
                tok = rng.choice(pool)
                if rng.random() < 0.5:
                    base.insert(0, tok)
                else:
                    base.append(tok)
            tokens = tuple(base)
        else:
            tokens = tuple(rng.choice(pool) for _ in range(k))
        text = " ".join(tokens)
        if text in seen:
            continue
        seen.add(text)
        by_size.setdefault(k, []).append(tokens)
        terms.append(Term(text, tokens))
    return terms
