"""Knuth-Morris-Pratt helpers over any sequence (tokens or characters)."""

from __future__ import annotations

from collections.abc import Hashable, Sequence


def failure_table(pattern: Sequence[Hashable]) -> list[int]:
    """``fail[i]`` is the longest proper border of ``pattern[: i + 1]``."""
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


def advance(
    pattern: Sequence[Hashable], fail: list[int], state: int, symbol: Hashable
) -> int:
    """Next matched-prefix length after reading ``symbol``.

    ``state`` must be below ``len(pattern)``.
    """
    while state and pattern[state] != symbol:
        state = fail[state - 1]
    if pattern[state] == symbol:
        state += 1
    return state
