"""
Node comparisons per retrieval
==============================

Average comparisons per query for the bucket index, a word-level trie and
a character-level Aho-Corasick automaton, on synthetic vocabularies shaped
like a noun-phrase term list (about 2.2 words and 15 characters per term).

Super-term retrieval is one probe for the bucket index, whereas both
tries have to search most of their nodes even with subtree-depth pruning.
"""

from tbi.bench import bench_retrieval, retrieval_table
from tbi.corpus import brown_like_spec, compute_stats, generate_vocabulary

reports = []
for size in (1_000, 5_000):
    vocab = generate_vocabulary(brown_like_spec(size, seed=1))
    print(f"{size} terms:", compute_stats(vocab))
    reports += bench_retrieval(vocab, sample_size=200, seed=0, dataset=f"synth-{size}")

print()
print(retrieval_table(reports))
