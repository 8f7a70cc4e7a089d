"""Terms, bucket-key metrics, token-level nesting and n-gram candidates.

A term is a whitespace-normalized string whose tokens are separated by
exactly one space. Nesting is *token level*: ``"google"`` is nested in
``"google llc"`` but ``"oogle"`` is not. All lengths count Unicode code
points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import EmptyTerm


@dataclass(frozen=True, slots=True)
class Term:
    """A normalized vocabulary entry.

    Build instances with :func:`normalize` or :meth:`Term.parse`; the
    constructor only validates.
    """

    text: str
    tokens: tuple[str, ...]
    # text wrapped in single spaces; a substring match of one padded text in
    # another is exactly a token-aligned match
    padded: str = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.tokens or " ".join(self.tokens) != self.text:
            raise ValueError(f"tokens do not reproduce text: {self.text!r}")
        if any(not tok or " " in tok for tok in self.tokens):
            raise ValueError(f"malformed token in {self.text!r}")
        object.__setattr__(self, "padded", f" {self.text} ")

    @classmethod
    def parse(cls, raw: str) -> Term:
        return normalize(raw)

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text


TermLike = Union[Term, str]


@dataclass(frozen=True, slots=True)
class TermMetrics:
    """The four bucket keys of a term.

    ``tot_nsp_char`` is level 1 of the bucket table, then ``tot_tok``,
    ``len`` and ``lt_len``.
    """

    len: int
    tot_tok: int
    lt_len: int
    tot_nsp_char: int

    @property
    def bucket_key(self) -> tuple[int, int, int, int]:
        return (self.tot_nsp_char, self.tot_tok, self.len, self.lt_len)


def normalize(raw: str) -> Term:
    """Strip, collapse internal whitespace runs and split into tokens.

    Case is preserved. Raises :class:`EmptyTerm` when nothing but
    whitespace is left.
    """
    tokens = tuple(raw.split())
    if not tokens:
        raise EmptyTerm(f"no term in {raw!r}")
    return Term(" ".join(tokens), tokens)


def as_term(value: TermLike) -> Term:
    return value if isinstance(value, Term) else normalize(value)


def metrics(term: TermLike) -> TermMetrics:
    term = as_term(term)
    length = len(term.text)
    tot_tok = len(term.tokens)
    return TermMetrics(
        len=length,
        tot_tok=tot_tok,
        lt_len=max(len(tok) for tok in term.tokens),
        tot_nsp_char=length - tot_tok + 1,
    )


def is_nested_in(candidate: TermLike, container: TermLike) -> bool:
    """True iff ``candidate`` is a proper contiguous token run of ``container``.

    Tokens never contain spaces, so a match of the space-padded candidate
    inside the space-padded container can only begin and end on token
    boundaries.
    """
    if type(candidate) is not Term:
        candidate = as_term(candidate)
    if type(container) is not Term:
        container = as_term(container)
    return candidate.padded in container.padded and candidate.text != container.text


def proper_ngrams(term: TermLike) -> set[Term]:
    """Every contiguous token run of length 1..m-1, deduplicated."""
    tokens = as_term(term).tokens
    m = len(tokens)
    out: set[Term] = set()
    for n in range(1, m):
        for i in range(m - n + 1):
            window = tokens[i : i + n]
            out.add(Term(" ".join(window), window))
    return out


def proper_ngram_texts(tokens: tuple[str, ...]) -> set[str]:
    """String-only variant of :func:`proper_ngrams` for hot paths."""
    m = len(tokens)
    return {" ".join(tokens[i : i + n]) for n in range(1, m) for i in range(m - n + 1)}
