"""Comparison systems: all-pairs hash indexing, word trie, Aho-Corasick."""

from .aho_corasick import AcAutomaton, ac_nested, ac_super, build_automaton
from .vanilla import VanillaHashIndex, vanilla_build
from .word_trie import WordTrie, WordTrieNode, build_word_trie, word_trie_nested, word_trie_super

__all__ = [
    "AcAutomaton",
    "VanillaHashIndex",
    "WordTrie",
    "WordTrieNode",
    "ac_nested",
    "ac_super",
    "build_automaton",
    "build_word_trie",
    "vanilla_build",
    "word_trie_nested",
    "word_trie_super",
]
