import json
import random

import pytest

from tbi import ResultMismatch, build_index
from tbi.baselines import vanilla_build
from tbi.bench import (
    BenchReport,
    bench_index,
    bench_retrieval,
    index_table,
    read_snapshot,
    retrieval_table,
    snapshot_text,
    write_snapshot,
)
from tbi.corpus import brown_like_spec, generate_vocabulary


class TestSnapshot:
    def test_toy_layout(self, toy_vocab):
        text = snapshot_text(build_index(toy_vocab).super_terms)
        assert text == (
            "#tbi-snapshot\tterms=3\trelations=2\n"
            "google\tgoogle llc\n"
            "google llc\t\n"
            "llc\tgoogle llc\n"
        )

    def test_tbi_and_vanilla_identical(self):
        vocab = generate_vocabulary(brown_like_spec(1000, seed=6))
        assert snapshot_text(build_index(vocab).super_terms) == snapshot_text(
            vanilla_build(vocab).super_terms
        )

    def test_roundtrip_answers(self, tmp_path, brown_2k):
        index = build_index(brown_2k)
        path = tmp_path / "s.snap"
        write_snapshot(index.super_terms, path)
        loaded = read_snapshot(path)
        assert loaded.super_terms == index.super_terms
        for q in random.Random(2).sample(brown_2k, 200):
            assert loaded.super_terms_of(q) == index.super_terms_of(q)
            assert loaded.nested_terms_of(q) == index.nested_terms_of(q)

    def test_bad_files(self, tmp_path):
        p = tmp_path / "x"
        p.write_text("hello\n")
        with pytest.raises(ValueError):
            read_snapshot(p)
        p.write_text("#tbi-snapshot\tterms=5\trelations=0\na\t\n")
        with pytest.raises(ValueError):
            read_snapshot(p)


class TestBenchIndex:
    def test_smoke(self):
        vocab = generate_vocabulary(brown_like_spec(100, seed=1))
        result = bench_index(vocab, repetitions=1)
        assert result.vanilla_seconds < 1 and result.tbi_seconds < 1
        assert [r.system for r in result.reports] == ["vanilla", "tbi"]
        assert result.reduction_pct == pytest.approx(
            100 * (1 - result.tbi_seconds / result.vanilla_seconds)
        )

    def test_median_of_repetitions(self, monkeypatch):
        import tbi.bench as bench

        ticks = iter([0, 5, 10, 11, 20, 29, 30, 32, 40, 47] + [100, 101] * 5)
        monkeypatch.setattr(bench.time, "perf_counter", lambda: next(ticks))
        result = bench_index(["a", "a b"], repetitions=5, dry_run=False)
        # vanilla durations 5, 1, 9, 2, 7 -> median 5
        assert result.vanilla_seconds == 5
        assert result.tbi_seconds == 1

    def test_rejects_zero_repetitions(self):
        with pytest.raises(ValueError):
            bench_index(["a"], repetitions=0)

    def test_mismatch_detected(self, monkeypatch):
        import tbi.bench as bench

        real = bench.build_index

        def broken(terms):
            index = real(terms)
            index.super_terms["a"] = set()
            return index

        monkeypatch.setattr(bench, "build_index", broken)
        with pytest.raises(ResultMismatch):
            bench_index(["a", "a b"], dry_run=False)


class TestBenchRetrieval:
    def test_tbi_super_is_one(self):
        vocab = generate_vocabulary(brown_like_spec(1000, seed=1))
        reports = bench_retrieval(vocab, sample_size=200, seed=3, dataset="synth")
        cell = {(r.system, r.operation): r for r in reports}
        assert cell["tbi", "super"].avg_comparisons == 1.00
        assert cell["word_trie", "super"].avg_comparisons > 1
        max_m = max(len(t.tokens) for t in vocab)
        assert cell["tbi", "nested"].avg_comparisons <= max_m * (max_m + 1) / 2 - 1
        assert all(r.query_count == 200 for r in reports)

    def test_deterministic(self, brown_2k):
        a = bench_retrieval(brown_2k, sample_size=50, seed=9)
        b = bench_retrieval(brown_2k, sample_size=50, seed=9)
        assert a == b

    def test_oov_queries_skip_super(self, toy_vocab):
        reports = bench_retrieval(toy_vocab, queries=["google llc inc", "google"])
        cell = {(r.system, r.operation): r.query_count for r in reports}
        assert cell["tbi", "nested"] == 2
        assert cell["tbi", "super"] == 1

    def test_sample_too_large(self, toy_vocab):
        with pytest.raises(ValueError):
            bench_retrieval(toy_vocab, sample_size=10)

    def test_mismatch_names_query(self, toy_vocab, monkeypatch):
        import tbi.bench as bench

        monkeypatch.setattr(bench, "ac_nested", lambda ac, q, counter: {"bogus"})
        with pytest.raises(ResultMismatch) as err:
            bench_retrieval(toy_vocab, queries=["google llc"])
        assert err.value.query == "google llc"


def test_report_json():
    r = BenchReport("tbi", "d", "super", avg_comparisons=1.0, query_count=3)
    assert json.loads(r.to_json())["avg_comparisons"] == 1.0


def test_tables_render(toy_vocab):
    reports = bench_retrieval(toy_vocab, sample_size=3, dataset="toy")
    table = retrieval_table(reports)
    assert "For nested term" in table and "toy" in table and "1.00" in table
    result = bench_index(toy_vocab, dry_run=False)
    assert "% less" in index_table([("toy", result)])
