"""Query-directed clustering and extractive summarization.

The package clusters a document corpus around a one-word query and
produces extractive summaries of individual documents. See README.md for
the pipeline walkthrough and the HTTP/CLI interfaces.
"""

from .config import PipelineConfig
from .corpus import CorpusIndex, Document, build_index, load_index, save_index
from .qdc import (
    BaseCluster,
    Cluster,
    Dendrogram,
    SelectionState,
    build_dendrogram,
    clean_cluster,
    filter_base_clusters,
    find_base_clusters,
    merge_base_clusters,
    ngd,
    page_relevance,
    score_selection,
    select_clusters,
    split_cluster,
)
from .service import SearchResult, get_document, run_search, summarize_document
from .textrank import (
    RankResult,
    SentenceGraph,
    Summary,
    build_sentence_graph,
    extract_summary,
    rank_vertices,
    sentence_similarity,
)

__version__ = "0.1.0"

__all__ = [
    "PipelineConfig",
    "CorpusIndex",
    "Document",
    "build_index",
    "load_index",
    "save_index",
    "BaseCluster",
    "Cluster",
    "Dendrogram",
    "SelectionState",
    "build_dendrogram",
    "clean_cluster",
    "filter_base_clusters",
    "find_base_clusters",
    "merge_base_clusters",
    "ngd",
    "page_relevance",
    "score_selection",
    "select_clusters",
    "split_cluster",
    "SearchResult",
    "get_document",
    "run_search",
    "summarize_document",
    "RankResult",
    "SentenceGraph",
    "Summary",
    "build_sentence_graph",
    "extract_summary",
    "rank_vertices",
    "sentence_similarity",
    "__version__",
]
