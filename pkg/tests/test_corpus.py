import pytest

from tbi import EmptyVocabulary, InvalidSpec
from tbi.corpus import (
    SynthSpec,
    brown_like_spec,
    compute_stats,
    generate_vocabulary,
    load_vocabulary,
    write_vocabulary,
)
from tbi.oracle import oracle_build


def test_load_counts(tmp_path):
    p = tmp_path / "v.txt"
    p.write_text("google llc\ngoogle llc\n\n", encoding="utf-8")
    loaded = load_vocabulary(p)
    assert [t.text for t in loaded.terms] == ["google llc"]
    assert loaded.duplicates == 1
    assert loaded.skipped == 1


def test_crlf_same_as_lf(tmp_path):
    lf, crlf = tmp_path / "lf.txt", tmp_path / "crlf.txt"
    lf.write_bytes(b"a b\nc\n# comment\n  d   e \n")
    crlf.write_bytes(b"a b\r\nc\r\n# comment\r\n  d   e \r\n")
    assert load_vocabulary(lf).terms == load_vocabulary(crlf).terms
    assert [t.text for t in load_vocabulary(lf)] == ["a b", "c", "d e"]


def test_order_preserved_first_kept(tmp_path):
    p = tmp_path / "v.txt"
    p.write_text("b\na\nb  \nc\n", encoding="utf-8")
    assert [t.text for t in load_vocabulary(p)] == ["b", "a", "c"]


def test_invalid_utf8(tmp_path):
    p = tmp_path / "v.txt"
    p.write_bytes(b"ok\n\xff\xfe bad\nfine\n")
    loaded = load_vocabulary(p)
    assert [t.text for t in loaded] == ["ok", "fine"]
    assert loaded.invalid_encoding == 1 and loaded.skipped == 1
    with pytest.raises(UnicodeDecodeError):
        load_vocabulary(p, strict_encoding=True)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_vocabulary(tmp_path / "nope.txt")


def test_roundtrip_idempotent(tmp_path):
    terms = generate_vocabulary(brown_like_spec(500, seed=2))
    p1, p2 = tmp_path / "1.txt", tmp_path / "2.txt"
    write_vocabulary(terms, p1)
    once = load_vocabulary(p1).terms
    write_vocabulary(once, p2)
    assert load_vocabulary(p2).terms == once == terms
    assert p1.read_bytes() == p2.read_bytes()


class TestStats:
    def test_single(self):
        s = compute_stats(["google llc"])
        assert (s.total_unique_terms, s.avg_tokens_per_term, s.avg_chars_per_term) == (1, 2.0, 10.0)

    def test_two(self):
        s = compute_stats(["a", "b c"])
        assert (s.total_unique_terms, s.avg_tokens_per_term, s.avg_chars_per_term) == (2, 1.5, 2.0)

    def test_duplicates_ignored(self):
        assert compute_stats(["a", "a", " a "]).total_unique_terms == 1

    def test_empty(self):
        with pytest.raises(EmptyVocabulary):
            compute_stats([])

    def test_brown_shape(self):
        # Brown row: 2.23 words and 15.21 characters per term
        s = compute_stats(generate_vocabulary(brown_like_spec(10_000, seed=1)))
        assert s.avg_tokens_per_term == pytest.approx(2.23, rel=0.1)
        assert s.avg_chars_per_term == pytest.approx(15.21, rel=0.1)

    @pytest.mark.parametrize("spec", [
        brown_like_spec(10_000, seed=5),
        SynthSpec(term_count=10_000, tokens_per_term=(2, 4), token_length=(4, 8), seed=9),
    ])
    def test_converges_to_spec_means(self, spec):
        s = compute_stats(generate_vocabulary(spec))
        assert s.avg_tokens_per_term == pytest.approx(spec.expected_tokens_per_term, rel=0.1)
        assert s.avg_chars_per_term == pytest.approx(spec.expected_chars_per_term, rel=0.1)


class TestGenerate:
    def test_deterministic(self):
        a = generate_vocabulary(brown_like_spec(1000, seed=42))
        b = generate_vocabulary(brown_like_spec(1000, seed=42))
        assert a == b
        assert a != generate_vocabulary(brown_like_spec(1000, seed=43))

    def test_prefix_property(self):
        small = generate_vocabulary(brown_like_spec(500, seed=8))
        big = generate_vocabulary(brown_like_spec(2000, seed=8))
        assert big[:500] == small

    def test_unique_and_exact_count(self):
        terms = generate_vocabulary(brown_like_spec(3000, seed=1))
        assert len(terms) == len({t.text for t in terms}) == 3000

    def test_single_token_terms_have_no_relations(self):
        terms = generate_vocabulary(SynthSpec(term_count=300, tokens_per_term=(1, 1), seed=3))
        assert oracle_build(terms).relation_count() == 0

    def test_relations_occur(self):
        terms = generate_vocabulary(brown_like_spec(10_000, seed=4))
        from tbi import build_index

        # tbi table equals the oracle elsewhere; here only the count matters
        assert build_index(terms).relation_count() > 0

    def test_relations_occur_oracle(self):
        terms = generate_vocabulary(brown_like_spec(1500, seed=4))
        assert oracle_build(terms).relation_count() > 0

    @pytest.mark.parametrize("kwargs", [
        dict(term_count=0),
        dict(term_count=5, token_pool_size=0),
        dict(term_count=5, tokens_per_term=(3, 2)),
        dict(term_count=5, token_length=(0, 2)),
        dict(term_count=5, reuse_rate=1.5),
        dict(term_count=5, token_pool_size=100, token_length=(1, 1), alphabet="ab"),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidSpec):
            generate_vocabulary(SynthSpec(**kwargs))

    def test_space_exhausted(self):
        spec = SynthSpec(term_count=10, token_pool_size=2, tokens_per_term=(1, 1),
                         token_length=(1, 1), alphabet="ab")
        with pytest.raises(InvalidSpec):
            generate_vocabulary(spec)
