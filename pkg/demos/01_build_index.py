"""Build a corpus index from the bundled articles and poke at its statistics.

The index is the foundation everything else runs on: documents are cleaned,
split into sentences, tokenized, stopword-filtered, and stemmed, and the
per-stem document frequencies drive the distance computations later on.
"""

from querysum.corpus import build_index, bundled_corpus_manifest, load_index, save_index

# The bundled manifest lists 34 short articles in two broad groups
# (sports and computing) with human-readable titles.
index, failures = build_index(bundled_corpus_manifest())
print(f"indexed {index.n_docs} documents, {len(failures)} failures")

# Each document carries its preprocessing results around.
doc = index.documents[20]
print(f"\n[{doc.id}] {doc.title}")
print(f"  sentences: {len(doc.sentences)}")
print(f"  first:     {doc.sentences[0]}")
print(f"  stems:     {doc.stems[:8]} ...")

# Document frequency: how many documents contain a stem at least once.
for stem in ("sport", "cricket", "tenni", "footbal", "comput"):
    print(f"df({stem!r}) = {index.df.get(stem, 0)}")

# Co-occurrence counts are derived on demand from posting sets.
print(f"\nco_df(cricket, sport) = {index.co_df('cricket', 'sport')}")
print(f"co_df(cricket, comput) = {index.co_df('cricket', 'comput')}")

# The index round-trips through a single JSON file; derived statistics
# are recomputed on load, so the file stays small and canonical.
save_index(index, "/tmp/demo_index.json")
reloaded = load_index("/tmp/demo_index.json")
assert reloaded.df == index.df
print("\nsaved and reloaded: statistics identical")
