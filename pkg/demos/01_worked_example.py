"""
Indexing a small vocabulary
===========================

Build a bucket index over a handful of terms, look at the bucket keys of
a term, then retrieve super terms and nested terms.
"""

from tbi import ComparisonCounter, build_index, metrics

vocabulary = [
    "america",
    "states",
    "united states",
    "united states of america",
    "Google",
    "LLC",
    "Google LLC",
]

# Each term lands in exactly one bucket, addressed by four keys:
# non-space characters, tokens, characters, longest token.
m = metrics("united states of america")
print("bucket key of 'united states of america':", m.bucket_key)

index = build_index(vocabulary)
for key, terms in index.iter_buckets():
    print(key, terms)

# Super-term retrieval is one lookup in the super-term table.
counter = ComparisonCounter()
print("super terms of 'states':", sorted(index.super_terms_of("states", counter)))
print("probes:", counter.probes)

# Nested-term retrieval probes every proper n-gram of the query. The query
# does not have to be in the vocabulary.
counter = ComparisonCounter()
query = "the united states of america and Google LLC"
print("nested terms of", repr(query), ":", sorted(index.nested_terms_of(query, counter)))
print("probes:", counter.probes)

# The bucket table is only needed while building.
index.discard_buckets()
print("after discard:", sorted(index.super_terms_of("Google")))
