"""Benchmark harness: retrieval comparison counts, indexing wall clock, snapshots.

Every benchmark first checks that all participating systems return the
same result sets; numbers are only reported for correct runs.
"""

from __future__ import annotations

import json
import platform
import random
import statistics
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import asdict, dataclass
from pathlib import Path

from .baselines import (
    ac_nested,
    ac_super,
    build_automaton,
    build_word_trie,
    vanilla_build,
    word_trie_nested,
    word_trie_super,
)
from .counter import ComparisonCounter
from .errors import EmptyVocabulary, ResultMismatch
from .index import TbiIndex, build_index
from .terms import Term, TermLike, as_term

SYSTEMS = ("tbi", "word_trie", "aho_corasick")
SNAPSHOT_MAGIC = "#tbi-snapshot"


def environment_note() -> str:
    return (
        f"{platform.system()} {platform.machine()}, "
        f"{platform.python_implementation()} {platform.python_version()}"
    )


@dataclass
class BenchReport:
    system: str
    dataset: str
    operation: str  # index | nested | super
    wall_clock: float | None = None
    avg_comparisons: float | None = None
    query_count: int | None = None
    environment: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _unique(vocabulary: Iterable[TermLike]) -> list[Term]:
    out: dict[str, Term] = {}
    for raw in vocabulary:
        term = as_term(raw)
        out.setdefault(term.text, term)
    if not out:
        raise EmptyVocabulary("vocabulary is empty")
    return list(out.values())


# ---------------------------------------------------------------------------
# snapshots


def snapshot_text(super_terms: dict[str, set[str]]) -> str:
    """Canonical snapshot of a super-term table.

    A header line, then one ``nested<TAB>super`` line per relation. Terms
    with no super terms get a single ``term<TAB>`` line so the vocabulary
    survives a round trip. Lines are sorted.
    """
    lines = []
    relations = 0
    for nested, supers in super_terms.items():
        if supers:
            relations += len(supers)
            lines.extend(f"{nested}\t{sup}" for sup in supers)
        else:
            lines.append(f"{nested}\t")
    lines.sort()
    header = f"{SNAPSHOT_MAGIC}\tterms={len(super_terms)}\trelations={relations}"
    return "\n".join([header, *lines]) + "\n"


def write_snapshot(super_terms: dict[str, set[str]], path: str | Path) -> None:
    Path(path).write_text(snapshot_text(super_terms), encoding="utf-8", newline="\n")


def read_snapshot(path: str | Path) -> TbiIndex:
    """Load a snapshot as a read-only :class:`TbiIndex` (no bucket table)."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith(SNAPSHOT_MAGIC):
        raise ValueError(f"{path}: not a snapshot file")
    fields = dict(f.split("=", 1) for f in lines[0].split("\t")[1:])
    table: dict[str, set[str]] = {}
    for lineno, line in enumerate(lines[1:], 2):
        nested, sep, sup = line.partition("\t")
        if not sep:
            raise ValueError(f"{path}:{lineno}: missing tab separator")
        supers = table.setdefault(nested, set())
        if sup:
            table.setdefault(sup, set())
            supers.add(sup)
    index = TbiIndex.from_super_terms(table)
    if index.term_count != int(fields["terms"]) or index.relation_count() != int(
        fields["relations"]
    ):
        raise ValueError(f"{path}: header counts do not match body")
    return index


# ---------------------------------------------------------------------------
# indexing benchmark


@dataclass
class IndexBenchResult:
    vanilla_seconds: float
    tbi_seconds: float
    reports: list[BenchReport]
    term_count: int

    @property
    def reduction_pct(self) -> float:
        return 100.0 * (1.0 - self.tbi_seconds / self.vanilla_seconds)


def _median_time(fn: Callable[[], object], repetitions: int) -> tuple[float, object]:
    times = []
    result = None
    for _ in range(repetitions):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def bench_index(
    vocabulary: Iterable[TermLike],
    repetitions: int = 1,
    seed: int | None = None,
    dataset: str = "",
    *,
    dry_run: bool = True,
) -> IndexBenchResult:
    """Time vanilla all-pairs indexing against bucket indexing.

    Each builder runs ``repetitions`` times and the median is reported.
    ``seed`` shuffles the input order (both builders see the same order).
    ``dry_run`` performs one untimed warm-up of each builder on the first
    1,000 terms. Raises :class:`ResultMismatch` if the two tables differ.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    terms = _unique(vocabulary)
    if seed is not None:
        random.Random(seed).shuffle(terms)
    if dry_run:
        vanilla_build(terms[:1000])
        build_index(terms[:1000])
    vanilla_s, vanilla = _median_time(lambda: vanilla_build(terms), repetitions)
    tbi_s, tbi = _median_time(lambda: build_index(terms), repetitions)
    if vanilla.super_terms != tbi.super_terms:
        bad = next(k for k in vanilla.super_terms if vanilla.super_terms[k] != tbi.super_terms.get(k))
        raise ResultMismatch(f"vanilla and tbi disagree on super terms of {bad!r}", bad)
    env = environment_note()
    reports = [
        BenchReport("vanilla", dataset, "index", wall_clock=vanilla_s, environment=env),
        BenchReport("tbi", dataset, "index", wall_clock=tbi_s, environment=env),
    ]
    return IndexBenchResult(vanilla_s, tbi_s, reports, len(terms))


# ---------------------------------------------------------------------------
# retrieval benchmark


class RetrievalSystems:
    """The three retrieval systems built over one vocabulary."""

    def __init__(self, vocabulary: Sequence[Term], systems: Iterable[str] = SYSTEMS) -> None:
        self.systems = tuple(systems)
        unknown = set(self.systems) - set(SYSTEMS)
        if unknown:
            raise ValueError(f"unknown system(s): {sorted(unknown)}")
        self.tbi = build_index(vocabulary).discard_buckets() if "tbi" in self.systems else None
        self.trie = build_word_trie(vocabulary) if "word_trie" in self.systems else None
        self.ac = build_automaton(vocabulary) if "aho_corasick" in self.systems else None

    def nested(self, system: str, query: Term, counter: ComparisonCounter) -> set[str]:
        if system == "tbi":
            return self.tbi.nested_terms_of(query, counter)
        if system == "word_trie":
            return word_trie_nested(self.trie, query, counter)
        return ac_nested(self.ac, query, counter)

    def super(self, system: str, query: Term, counter: ComparisonCounter) -> set[str]:
        if system == "tbi":
            return self.tbi.super_terms_of(query, counter)
        if system == "word_trie":
            return word_trie_super(self.trie, query, counter)
        return ac_super(self.ac, query, counter)


def sample_queries(vocabulary: Sequence[Term], sample_size: int, seed: int) -> list[Term]:
    if sample_size > len(vocabulary):
        raise ValueError(
            f"sample_size {sample_size} exceeds vocabulary size {len(vocabulary)}"
        )
    return random.Random(seed).sample(list(vocabulary), sample_size)


def bench_retrieval(
    vocabulary: Iterable[TermLike],
    systems: Iterable[str] = SYSTEMS,
    queries: Iterable[TermLike] | None = None,
    sample_size: int = 1000,
    seed: int = 0,
    dataset: str = "",
    directions: Iterable[str] = ("nested", "super"),
) -> list[BenchReport]:
    """Average comparison counts per query, one report per (system, direction).

    Queries default to a seeded sample of the vocabulary. Super-term
    retrieval is only defined for vocabulary terms, so out-of-vocabulary
    queries are used in the nested direction only. Raises
    :class:`ResultMismatch` naming the first query on which the systems
    disagree.
    """
    vocab = _unique(vocabulary)
    built = RetrievalSystems(vocab, systems)
    if queries is None:
        qs = sample_queries(vocab, sample_size, seed)
    else:
        qs = [as_term(q) for q in queries]
    known = {t.text for t in vocab}
    env = environment_note()
    reports = []
    for direction in directions:
        if direction not in ("nested", "super"):
            raise ValueError(f"unknown direction {direction!r}")
        dq = qs if direction == "nested" else [q for q in qs if q.text in known]
        run = built.nested if direction == "nested" else built.super
        totals = dict.fromkeys(built.systems, 0)
        for q in dq:
            reference = None
            for system in built.systems:
                counter = ComparisonCounter()
                got = run(system, q, counter)
                totals[system] += counter.probes
                if reference is None:
                    reference = (system, got)
                elif got != reference[1]:
                    raise ResultMismatch(
                        f"{direction} results differ between {reference[0]} and "
                        f"{system} for query {q.text!r}",
                        q.text,
                    )
        for system in built.systems:
            avg = round(totals[system] / len(dq), 2) if dq else 0.0
            reports.append(
                BenchReport(
                    system,
                    dataset,
                    direction,
                    avg_comparisons=avg,
                    query_count=len(dq),
                    environment=env,
                )
            )
    return reports


# ---------------------------------------------------------------------------
# human-readable tables


def retrieval_table(reports: Sequence[BenchReport]) -> str:
    """Average comparisons laid out as nested | super column groups per dataset."""
    systems = list(dict.fromkeys(r.system for r in reports))
    datasets = list(dict.fromkeys(r.dataset for r in reports))
    cell = {(r.dataset, r.operation, r.system): r.avg_comparisons for r in reports}
    width = max(12, *(len(s) + 2 for s in systems))
    dw = max(8, *(len(d) + 2 for d in datasets))
    group = width * len(systems)
    lines = [
        f"{'':<{dw}}| {'For nested term':<{group}}| {'For super term':<{group}}",
        f"{'Data':<{dw}}| "
        + "".join(f"{s:<{width}}" for s in systems)
        + "| "
        + "".join(f"{s:<{width}}" for s in systems),
    ]
    for d in datasets:
        row = f"{d:<{dw}}| "
        for op in ("nested", "super"):
            for s in systems:
                v = cell.get((d, op, s))
                row += f"{'-' if v is None else f'{v:.2f}':<{width}}"
            row += "| " if op == "nested" else ""
        lines.append(row.rstrip())
    return "\n".join(lines)


def index_table(results: Sequence[tuple[str, IndexBenchResult]]) -> str:
    """Total runtime of vanilla vs bucket indexing with the relative saving."""
    dw = max(8, *(len(d) + 2 for d, _ in results))
    lines = [f"{'Data':<{dw}}| {'Vanilla hash table indexing':<30}| TBI"]
    for d, r in results:
        lines.append(
            f"{d:<{dw}}| {r.vanilla_seconds:<30.3f}| "
            f"{r.tbi_seconds:.3f} s ({r.reduction_pct:.0f}% less)"
        )
    return "\n".join(lines)
