"""Command-line interface: build, query, bench-retrieval, bench-index, stats, generate.

Exit codes: 0 success, 1 usage error, 2 data error, 3 result mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import bench
from .baselines import vanilla_build
from .corpus import SynthSpec, compute_stats, generate_vocabulary, load_vocabulary, write_vocabulary
from .counter import ComparisonCounter
from .errors import NotInVocabulary, ResultMismatch, TbiError
from .index import build_index

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_MISMATCH = 0, 1, 2, 3

log = logging.getLogger("tbi")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str):
    loaded = load_vocabulary(path)
    if loaded.skipped or loaded.duplicates:
        log.info(
            "%s: %d terms, %d skipped, %d duplicates",
            path, len(loaded), loaded.skipped, loaded.duplicates,
        )
    return loaded.terms


def _dataset_id(path: str) -> str:
    return Path(path).stem


def _emit_reports(reports, args, table: str) -> None:
    lines = "".join(r.to_json() + "\n" for r in reports)
    if args.out:
        Path(args.out).write_text(lines, encoding="utf-8")
    if args.format == "json":
        sys.stdout.write(lines)
    else:
        print(table)


def cmd_build(args) -> int:
    terms = _load(args.vocab)
    start = time.perf_counter()
    if args.algorithm == "tbi":
        table = build_index(terms).super_terms
    else:
        table = vanilla_build(terms).super_terms
    seconds = time.perf_counter() - start
    if args.out:
        bench.write_snapshot(table, args.out)
    relations = sum(len(s) for s in table.values())
    if args.format == "json":
        print(json.dumps({"algorithm": args.algorithm, "terms": len(table),
                          "relations": relations, "seconds": seconds}))
    else:
        print(f"{args.algorithm}: terms={len(table)} relations={relations} seconds={seconds:.3f}")
    return EXIT_OK


def cmd_query(args) -> int:
    index = bench.read_snapshot(args.snapshot)
    query = " ".join(args.query)
    counter = ComparisonCounter()
    if args.direction == "super":
        try:
            results = index.super_terms_of(query, counter)
        except NotInVocabulary as exc:
            print(f"NotInVocabulary: {exc.term}", file=sys.stderr)
            return EXIT_DATA
    else:
        results = index.nested_terms_of(query, counter)
    for term in sorted(results):
        print(term)
    print(f"probes={counter.probes}")
    return EXIT_OK


def cmd_bench_retrieval(args) -> int:
    terms = _load(args.vocab)
    systems = [s.strip() for s in args.systems.split(",") if s.strip()]
    queries = _load(args.queries) if args.queries else None
    reports = bench.bench_retrieval(
        terms, systems, queries=queries, sample_size=args.sample_size,
        seed=args.seed, dataset=_dataset_id(args.vocab),
    )
    _emit_reports(reports, args, bench.retrieval_table(reports))
    return EXIT_OK


def cmd_bench_index(args) -> int:
    terms = _load(args.vocab)
    result = bench.bench_index(
        terms, repetitions=args.repetitions, seed=args.seed,
        dataset=_dataset_id(args.vocab), dry_run=not args.no_dry_run,
    )
    table = bench.index_table([(_dataset_id(args.vocab), result)])
    _emit_reports(result.reports, args, table)
    if args.format == "json":
        print(json.dumps({"reduction_pct": round(result.reduction_pct, 2)}))
    return EXIT_OK


def cmd_stats(args) -> int:
    stats = compute_stats(_load(args.vocab))
    text = json.dumps(stats.to_dict())
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print(text)
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = SynthSpec(
        term_count=args.count,
        token_pool_size=args.pool_size,
        tokens_per_term=(args.min_tokens, args.max_tokens),
        token_length=(args.min_token_length, args.max_token_length),
        reuse_rate=args.reuse_rate,
        seed=args.seed,
    )
    terms = generate_vocabulary(spec)
    if args.out:
        write_vocabulary(terms, args.out)
    else:
        sys.stdout.write("".join(t.text + "\n" for t in terms))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tbi", description="Term indexing for super/nested term retrieval")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, vocab=True, seed=False):
        if vocab:
            p.add_argument("--vocab", required=True, metavar="PATH", help="vocabulary file")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("build", help="build an index and optionally write a snapshot")
    common(p)
    p.add_argument("--algorithm", choices=("tbi", "vanilla"), default="tbi")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="query a snapshot")
    p.add_argument("--snapshot", required=True, metavar="PATH")
    p.add_argument("--direction", choices=("super", "nested"), required=True)
    p.add_argument("query", nargs="+")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("bench-retrieval", help="average comparisons per retrieval")
    common(p, seed=True)
    p.add_argument("--systems", default=",".join(bench.SYSTEMS))
    p.add_argument("--queries", metavar="PATH", help="query file (default: sample the vocabulary)")
    p.add_argument("--sample-size", type=int, default=1000)
    p.set_defaults(func=cmd_bench_retrieval)

    p = sub.add_parser("bench-index", help="indexing time, vanilla vs TBI")
    common(p)
    p.add_argument("--seed", type=int, default=None, help="shuffle input order")
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--no-dry-run", action="store_true")
    p.set_defaults(func=cmd_bench_index)

    p = sub.add_parser("stats", help="corpus statistics as JSON")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("generate", help="write a synthetic vocabulary")
    common(p, vocab=False, seed=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--pool-size", type=int, default=50_000)
    p.add_argument("--min-tokens", type=int, default=1)
    p.add_argument("--max-tokens", type=int, default=5)
    p.add_argument("--min-token-length", type=int, default=3)
    p.add_argument("--max-token-length", type=int, default=10)
    p.add_argument("--reuse-rate", type=float, default=0.3)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if getattr(args, "repetitions", 1) < 1 or getattr(args, "sample_size", 1) < 1:
        print("tbi: error: counts must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ResultMismatch as exc:
        print(f"ResultMismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (OSError, TbiError, ValueError, UnicodeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
