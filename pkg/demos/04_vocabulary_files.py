"""
Vocabulary files and corpus statistics
======================================

Write a synthetic vocabulary to disk, read it back, and summarize it the
way corpus tables usually do: unique terms, words per term, characters
per term. A real term list (one term per line, UTF-8) works the same way.
"""

import tempfile
from pathlib import Path

from tbi.corpus import SynthSpec, compute_stats, generate_vocabulary, load_vocabulary, write_vocabulary
from tbi.oracle import oracle_build

spec = SynthSpec(term_count=5_000, seed=7)
print("expected tokens/term: %.2f, chars/term: %.2f"
      % (spec.expected_tokens_per_term, spec.expected_chars_per_term))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "terms.txt"
    write_vocabulary(generate_vocabulary(spec), path)
    with path.open("a", encoding="utf-8") as fh:
        fh.write("\n# a comment line\n   \n")
    loaded = load_vocabulary(path)

print(f"loaded {len(loaded)} terms, skipped {loaded.skipped}, duplicates {loaded.duplicates}")
print(compute_stats(loaded))

# Nesting relations occur because terms share tokens from a common pool.
table = oracle_build(loaded.terms[:1_500])
print("relations among the first 1,500 terms:", table.relation_count())
example = next(t for t, sups in table.supers.items() if sups)
print(repr(example), "->", sorted(table.supers[example])[:5])
