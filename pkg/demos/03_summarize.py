"""Summarize one article by ranking its sentences on a similarity graph.

Sentences vote for sentences they share content stems with; the voting
recurrence is iterated until scores settle, and the top sentences are
emitted in their original order.
"""

from querysum.corpus import build_index, bundled_corpus_manifest
from querysum.textrank import build_sentence_graph, extract_summary, rank_vertices

index, _ = build_index(bundled_corpus_manifest())

# The longest bundled article: twelve sentences about a small search engine.
doc = next(d for d in index.documents if "search_engine" in d.source)
print(f"[{doc.id}] {doc.title} ({len(doc.sentences)} sentences)")

graph = build_sentence_graph(doc)
print(f"graph: {len(graph.vertices)} vertices, {len(graph.edges)} weighted edges")

result = rank_vertices(graph)
print(f"converged after {result.iterations} iterations\n")
for i in sorted(result.scores, key=result.scores.get, reverse=True):
    print(f"  {result.scores[i]:.4f}  [{i:>2}] {doc.sentences[i][:64]}")

# The summary keeps document order, not score order.
summary = extract_summary(doc, 3)
print(f"\nthree-sentence summary (indices {list(summary.sentence_indices)}):")
for sentence in summary.sentences:
    print(f"  - {sentence}")
