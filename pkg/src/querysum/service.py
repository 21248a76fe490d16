"""Search orchestration over the clustering and summarization primitives.

The service layer is stateless: every call is a pure function of the loaded
index, the query, and the configuration, so identical requests always
produce identical results.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import qdc, textrank
from .config import PipelineConfig
from .corpus import CorpusIndex, Document
from .text import STOPWORDS, normalize_tokens, word_tokens


class QueryError(ValueError):
    """A query the pipeline cannot run, with a machine-readable code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


@dataclass(frozen=True)
class ClusterResult:
    label: str
    query_ngd: float
    size: int
    doc_ids: tuple[int, ...]
    doc_titles: tuple[str, ...]


@dataclass(frozen=True)
class SearchResult:
    query: str
    query_stem: str
    n_docs_matched: int
    clusters: tuple[ClusterResult, ...]


def normalize_query(query: str) -> str:
    """Reduce a one-word query to its stem, rejecting unusable input."""
    tokens = word_tokens(query)
    if len(tokens) != 1:
        raise QueryError("bad_query", "query must be a single word")
    if tokens[0] in STOPWORDS:
        raise QueryError("stopword_query", f"query {query!r} is a stopword")
    stems = normalize_tokens(query)
    if not stems:
        raise QueryError("stopword_query", f"query {query!r} is a stopword")
    return stems[0]


def run_search(index: CorpusIndex, query: str, config: PipelineConfig) -> SearchResult:
    """Run the full clustering pipeline for a one-word query.

    Phases run in order: find base clusters, filter by query distance,
    merge, split, select, clean. Emptied clusters are dropped and the rest
    are sorted by ascending query distance, then descending size.
    """
    query_stem = normalize_query(query)
    if query_stem not in index:
        raise qdc.StemNotFoundError(query_stem)

    base = qdc.find_base_clusters(index, config.min_base_fraction)
    near_query = qdc.filter_base_clusters(index, base, query_stem, config.ngd_threshold)
    merged = qdc.merge_base_clusters(near_query, config.merge_overlap)
    split: list[qdc.Cluster] = []
    for cluster in merged:
        dendrogram = qdc.build_dendrogram(cluster)
        split.extend(qdc.split_cluster(cluster, dendrogram, config.min_split_gap))
    selection = qdc.select_clusters(
        split,
        beta=config.selection_beta,
        lookahead=config.lookahead,
        max_clusters=config.max_clusters,
    )
    cleaned = []
    for cluster in selection.clusters:
        survivor = qdc.clean_cluster(cluster, config.relevance_threshold)
        if survivor is not None:
            cleaned.append(survivor)
    cleaned.sort(key=lambda c: (c.query_ngd, -len(c.pages), c.label))

    results = []
    matched: set[int] = set()
    for cluster in cleaned:
        doc_ids = tuple(sorted(cluster.pages))
        matched.update(doc_ids)
        results.append(
            ClusterResult(
                label=cluster.label,
                query_ngd=cluster.query_ngd,
                size=len(doc_ids),
                doc_ids=doc_ids,
                doc_titles=tuple(index.get_document(i).title for i in doc_ids),
            )
        )
    return SearchResult(
        query=query,
        query_stem=query_stem,
        n_docs_matched=len(matched),
        clusters=tuple(results),
    )


def get_document(index: CorpusIndex, doc_id: int) -> Document:
    return index.get_document(doc_id)


def summarize_document(
    index: CorpusIndex,
    doc_id: int,
    n_sentences: int | None = None,
    config: PipelineConfig = PipelineConfig(),
) -> textrank.Summary:
    """Summarize one document with the configured ranking constants."""
    document = index.get_document(doc_id)
    if n_sentences is None:
        n_sentences = config.default_summary_sentences
    return textrank.extract_summary(
        document,
        n_sentences,
        damping=config.damping,
        epsilon=config.epsilon,
        max_iter=config.max_iter,
    )


def search_result_to_dict(result: SearchResult) -> dict:
    return {
        "query": result.query,
        "query_stem": result.query_stem,
        "n_docs_matched": result.n_docs_matched,
        "clusters": [
            {
                "label": c.label,
                "query_ngd": c.query_ngd,
                "size": c.size,
                "doc_ids": list(c.doc_ids),
                "doc_titles": list(c.doc_titles),
            }
            for c in result.clusters
        ],
    }


def document_to_dict(document: Document) -> dict:
    return {
        "id": document.id,
        "title": document.title,
        "source": document.source,
        "text": document.text,
        "n_sentences": len(document.sentences),
    }


def summary_to_dict(summary: textrank.Summary) -> dict:
    return {
        "doc_id": summary.doc_id,
        "sentence_indices": list(summary.sentence_indices),
        "sentences": list(summary.sentences),
        "scores": list(summary.scores),
    }
