"""Word-level trie (one node per token) with subtree-depth pruning.

Nested retrieval walks the trie from every start position of the query.
Super retrieval has to search the whole trie; each node records the
maximum number of words below it that lead to a terminal, and a subtree
is skipped when the query still needs more words than that to match.
"""

from __future__ import annotations

from collections.abc import Iterable

from ..counter import ComparisonCounter, ensure_counter
from ..errors import EmptyVocabulary
from ..terms import TermLike, as_term
from ._kmp import advance, failure_table


class WordTrieNode:
    __slots__ = ("children", "is_terminal", "max_subtree_depth")

    def __init__(self) -> None:
        self.children: dict[str, WordTrieNode] = {}
        self.is_terminal = False
        self.max_subtree_depth = 0


class WordTrie:
    def __init__(self, vocabulary: Iterable[TermLike]) -> None:
        self.root = WordTrieNode()
        self.term_count = 0
        for raw in vocabulary:
            self._insert(as_term(raw).tokens)
        if self.term_count == 0:
            raise EmptyVocabulary("cannot build a trie from an empty vocabulary")
        self._compute_depths()

    def _insert(self, tokens: tuple[str, ...]) -> None:
        node = self.root
        for tok in tokens:
            child = node.children.get(tok)
            if child is None:
                child = node.children[tok] = WordTrieNode()
            node = child
        if not node.is_terminal:
            node.is_terminal = True
            self.term_count += 1

    def _compute_depths(self) -> None:
        # iterative post-order
        stack: list[tuple[WordTrieNode, bool]] = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                node.max_subtree_depth = (
                    1 + max(c.max_subtree_depth for c in node.children.values())
                    if node.children
                    else 0
                )
            else:
                stack.append((node, True))
                stack.extend((c, False) for c in node.children.values())

    def nodes(self):
        """Yield ``(path_tokens, node)`` for every node, root first."""
        stack: list[tuple[tuple[str, ...], WordTrieNode]] = [((), self.root)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for tok, child in node.children.items():
                stack.append((path + (tok,), child))


def build_word_trie(vocabulary: Iterable[TermLike]) -> WordTrie:
    return WordTrie(vocabulary)


def word_trie_nested(
    trie: WordTrie, query: TermLike, counter: ComparisonCounter | None = None
) -> set[str]:
    """Terminals reachable by walking the trie from each query position.

    One counter event per child lookup.
    """
    counter = ensure_counter(counter)
    q = as_term(query)
    tokens = q.tokens
    m = len(tokens)
    found: set[str] = set()
    for i in range(m):
        node = trie.root
        for j in range(i, m):
            counter.add(1)
            node = node.children.get(tokens[j])
            if node is None:
                break
            if node.is_terminal and j - i + 1 < m:
                found.add(" ".join(tokens[i : j + 1]))
    return found


def word_trie_super(
    trie: WordTrie,
    query: TermLike,
    counter: ComparisonCounter | None = None,
    *,
    prune: bool = True,
) -> set[str]:
    """Terminals whose token path properly contains the query.

    Depth-first search over the whole trie, tracking how much of the query
    is matched at the end of the current path (a KMP state over tokens).
    With ``prune``, the children of a node are skipped when the words
    still needed to finish a match exceed the node's ``max_subtree_depth``.
    One counter event per node visited.
    """
    counter = ensure_counter(counter)
    q = as_term(query).tokens
    m = len(q)
    fail = failure_table(q)
    found: set[str] = set()
    # (node, path, matched prefix length; m once a full match occurred)
    stack: list[tuple[WordTrieNode, tuple[str, ...], int]] = [(trie.root, (), 0)]
    while stack:
        node, path, state = stack.pop()
        counter.add(1)
        if state == m:
            if node.is_terminal and len(path) > m:
                found.add(" ".join(path))
        elif prune and m - state > node.max_subtree_depth:
            continue
        for tok, child in node.children.items():
            nxt = m if state == m else advance(q, fail, state, tok)
            stack.append((child, path + (tok,), nxt))
    return found
