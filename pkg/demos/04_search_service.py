"""The full search flow as the HTTP service and CLI expose it.

A search clusters the corpus around one keyword; picking a document id
from the result and asking for its summary mirrors what the web client
does with GET /api/search and GET /api/docs/{id}/summary.
"""

import json

from querysum.config import PipelineConfig
from querysum.corpus import build_index, bundled_corpus_manifest
from querysum.service import (
    run_search,
    search_result_to_dict,
    summarize_document,
    summary_to_dict,
)

index, _ = build_index(bundled_corpus_manifest())
config = PipelineConfig()

result = run_search(index, "sports", config)
print(f"query {result.query!r} -> {len(result.clusters)} categories, "
      f"{result.n_docs_matched} documents\n")
for cluster in result.clusters:
    print(f"  {cluster.label:<10} ngd={cluster.query_ngd:.4f}  {cluster.size} docs")
    for doc_id, title in zip(cluster.doc_ids, cluster.doc_titles):
        print(f"      {doc_id:>3}  {title}")

# The user picks a document; the service summarizes it on demand.
picked = result.clusters[0].doc_ids[0]
summary = summarize_document(index, picked, 3, config)
print(f"\nsummary of document {picked}:")
for sentence in summary.sentences:
    print(f"  - {sentence}")

# Exactly these payloads travel over the wire.
print("\nJSON as served by /api/docs/{id}/summary:")
print(json.dumps(summary_to_dict(summary), indent=2)[:400], "...")

# To serve the same data over HTTP (plus the web client, if built):
#   querysum ingest --input <dir-or-manifest> --index /tmp/index.json
#   querysum serve --index /tmp/index.json --port 8000 --static frontend/dist
_ = search_result_to_dict  # shape used by GET /api/search
