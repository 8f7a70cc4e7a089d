"""
Indexing time: all pairs vs buckets
===================================

Time the quadratic all-pairs build against the bucket index on growing
synthetic vocabularies. Both builders produce the same super-term table
(checked before any number is reported).

The 50,000-term run from the test suite takes a few minutes; the sizes
below finish in well under a minute.
"""

from tbi.bench import bench_index, index_table
from tbi.corpus import brown_like_spec, generate_vocabulary

rows = []
for size in (2_000, 5_000, 10_000):
    vocab = generate_vocabulary(brown_like_spec(size, seed=3))
    result = bench_index(vocab, repetitions=1, dataset=f"synth-{size}")
    rows.append((f"synth-{size}", result))

print(index_table(rows))
