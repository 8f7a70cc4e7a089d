from __future__ import annotations

from dataclasses import dataclass


@dataclass
class ComparisonCounter:
    """Monotone count of elementary probe events.

    One event is a hash probe, a trie node visit or an automaton
    transition, so hash-based and trie-based systems share one scale.
    Use one counter per query stream.
    """

    probes: int = 0

    def add(self, n: int = 1) -> None:
        if n < 0:
            raise ValueError("counter increments must be non-negative")
        self.probes += n

    def reset(self) -> int:
        """Zero the counter and return the value it held."""
        value, self.probes = self.probes, 0
        return value


class _NullCounter(ComparisonCounter):
    def add(self, n: int = 1) -> None:
        pass


def ensure_counter(counter: ComparisonCounter | None) -> ComparisonCounter:
    return counter if counter is not None else _NullCounter()
