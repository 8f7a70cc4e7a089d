"""Character-level Aho-Corasick automaton over vocabulary term texts.

Nested retrieval streams the query through the automaton and keeps the
matches that sit on token boundaries. Super retrieval searches the goto
trie depth-first for terminals whose text contains the query on token
boundaries, pruning subtrees too shallow to complete a match.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from ..counter import ComparisonCounter, ensure_counter
from ..errors import EmptyVocabulary
from ..terms import TermLike, as_term
from ._kmp import advance, failure_table

ROOT = 0


class AcAutomaton:
    """Goto/failure/output automaton with states numbered from the root (0).

    Attributes:
        goto: per-state map from character to next state.
        fail: per-state failure link (longest proper suffix that is a state).
        output: per-state list of vocabulary terms ending there, including
            those inherited through the failure chain.
        terminal: per-state term text if a vocabulary term ends exactly there.
        depth: per-state character depth in the goto trie.
        max_subtree_depth: per-state longest character path to a terminal
            below it (0 for a leaf).
    """

    def __init__(self, vocabulary: Iterable[TermLike]) -> None:
        self.goto: list[dict[str, int]] = [{}]
        self.terminal: list[str | None] = [None]
        self.depth: list[int] = [0]
        self.term_count = 0
        for raw in vocabulary:
            self._add(as_term(raw).text)
        if self.term_count == 0:
            raise EmptyVocabulary("cannot build an automaton from an empty vocabulary")
        self.fail: list[int] = [ROOT] * len(self.goto)
        self.output: list[list[str]] = [
            [t] if t is not None else [] for t in self.terminal
        ]
        self.max_subtree_depth: list[int] = [0] * len(self.goto)
        self._link()

    def __len__(self) -> int:
        return len(self.goto)

    def _add(self, text: str) -> None:
        state = ROOT
        for ch in text:
            nxt = self.goto[state].get(ch)
            if nxt is None:
                nxt = len(self.goto)
                self.goto.append({})
                self.terminal.append(None)
                self.depth.append(self.depth[state] + 1)
                self.goto[state][ch] = nxt
            state = nxt
        if self.terminal[state] is None:
            self.terminal[state] = text
            self.term_count += 1

    def _link(self) -> None:
        order: list[int] = []
        queue = deque(self.goto[ROOT].values())
        while queue:
            state = queue.popleft()
            order.append(state)
            for ch, child in self.goto[state].items():
                f = self.fail[state]
                while f != ROOT and ch not in self.goto[f]:
                    f = self.fail[f]
                target = self.goto[f].get(ch, ROOT)
                self.fail[child] = target if target != child else ROOT
                self.output[child] = self.output[child] + self.output[self.fail[child]]
                queue.append(child)
        for state in reversed(order):
            kids = self.goto[state].values()
            if kids:
                self.max_subtree_depth[state] = 1 + max(
                    self.max_subtree_depth[c] for c in kids
                )
        kids = self.goto[ROOT].values()
        if kids:
            self.max_subtree_depth[ROOT] = 1 + max(self.max_subtree_depth[c] for c in kids)


def build_automaton(vocabulary: Iterable[TermLike]) -> AcAutomaton:
    return AcAutomaton(vocabulary)


def ac_nested(
    automaton: AcAutomaton, query: TermLike, counter: ComparisonCounter | None = None
) -> set[str]:
    """Vocabulary terms found in the query text on token boundaries.

    One counter event per transition, failure transitions included.
    """
    counter = ensure_counter(counter)
    text = as_term(query).text
    n = len(text)
    goto, fail, output = automaton.goto, automaton.fail, automaton.output
    found: set[str] = set()
    state = ROOT
    for pos, ch in enumerate(text):
        while state != ROOT and ch not in goto[state]:
            counter.add(1)
            state = fail[state]
        counter.add(1)
        state = goto[state].get(ch, ROOT)
        end = pos + 1
        if end != n and text[end] != " ":
            continue
        for pat in output[state]:
            start = end - len(pat)
            if (start == 0 or text[start - 1] == " ") and len(pat) < n:
                found.add(pat)
    return found


def ac_super(
    automaton: AcAutomaton,
    query: TermLike,
    counter: ComparisonCounter | None = None,
    *,
    prune: bool = True,
) -> set[str]:
    """Vocabulary terms whose text properly contains the query on token boundaries.

    The search looks for ``" query "`` in ``" path "`` for each terminal
    path, tracking a KMP state over the space-padded query. The trailing
    space may be supplied by the end of a term, so a node whose state is
    ``k`` still needs at least ``len(pattern) - k - 1`` characters; with
    ``prune`` its children are skipped when that exceeds the node's
    ``max_subtree_depth``. One counter event per node visited.
    """
    counter = ensure_counter(counter)
    q = as_term(query).text
    pattern = f" {q} "
    full = len(pattern)
    fail = failure_table(pattern)
    goto, terminal, depth_below = automaton.goto, automaton.terminal, automaton.max_subtree_depth
    found: set[str] = set()
    # the virtual leading space of every path
    stack: list[tuple[int, int]] = [(ROOT, advance(pattern, fail, 0, " "))]
    while stack:
        state, k = stack.pop()
        counter.add(1)
        term = terminal[state]
        if k == full:
            if term is not None and term != q:
                found.add(term)
        else:
            if term is not None and term != q and advance(pattern, fail, k, " ") == full:
                found.add(term)
            if prune and full - k - 1 > depth_below[state]:
                continue
        for ch, child in goto[state].items():
            stack.append((child, full if k == full else advance(pattern, fail, k, ch)))
    return found
