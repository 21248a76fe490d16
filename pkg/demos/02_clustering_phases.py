"""Walk the five clustering phases one at a time for the query "sports".

find base clusters -> filter by query distance -> merge -> split -> select
-> clean. Each phase is a pure function, so the whole pipeline can be
replayed and inspected step by step.
"""

from querysum import qdc
from querysum.config import PipelineConfig
from querysum.corpus import build_index, bundled_corpus_manifest

index, _ = build_index(bundled_corpus_manifest())
config = PipelineConfig()
query_stem = "sport"  # the stem of "sports"

# Phase 1a: one base cluster per stem appearing in at least 4% of pages.
base = qdc.find_base_clusters(index, config.min_base_fraction)
print(f"base clusters: {len(base)} (threshold df >= "
      f"{qdc.base_cluster_threshold(config.min_base_fraction, index.n_docs)})")

# Phase 1b: normalized distance to the query; distant stems drop out.
kept = qdc.filter_base_clusters(index, base, query_stem, config.ngd_threshold)
print(f"\nwithin distance {config.ngd_threshold} of {query_stem!r}: {len(kept)}")
for cluster in sorted(kept, key=lambda b: b.query_ngd)[:8]:
    print(f"  {cluster.label:<10} df={len(cluster.pages):>2}  ngd={cluster.query_ngd:.4f}")

# Phase 2: merge base clusters whose page sets overlap both ways.
merged = qdc.merge_base_clusters(kept, config.merge_overlap)
print(f"\nmerged components: {len(merged)}")
for cluster in merged:
    members = [b.label for b in cluster.base_clusters]
    print(f"  [{cluster.label}] {len(cluster.pages)} pages, members: {members}")

# Phase 3: split any chained cluster at the widest dendrogram gap.
split = []
for cluster in merged:
    dendrogram = qdc.build_dendrogram(cluster)
    pieces = qdc.split_cluster(cluster, dendrogram, config.min_split_gap)
    if len(pieces) > 1:
        print(f"  {cluster.label}: split into {len(pieces)} (heights {dendrogram.heights})")
    split.extend(pieces)
print(f"\ncandidates after split: {len(split)}")

# Phase 4: pick a subset covering many pages with little overlap.
state = qdc.select_clusters(split, config.selection_beta, config.lookahead, config.max_clusters)
print(f"selected {len(state.selected)} clusters, objective {state.objective}")

# Phase 5: drop weakly supported pages from each kept cluster.
for cluster in state.clusters:
    cleaned = qdc.clean_cluster(cluster, config.relevance_threshold)
    before, after = sorted(cluster.pages), sorted(cleaned.pages) if cleaned else []
    dropped = set(before) - set(after)
    note = f" (cleaned away {sorted(dropped)})" if dropped else ""
    print(f"  [{cluster.label}] {len(before)} -> {len(after)} pages{note}")
