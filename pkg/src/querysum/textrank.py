"""Extractive summarization by graph-based sentence ranking.

Sentences become vertices of a weighted undirected graph; edge weights
measure content overlap normalized by sentence length. Scores are computed
by the damped voting recurrence iterated to convergence, and the summary is
the top-scoring sentences replayed in original document order, verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import Document
from .text import normalize_tokens, word_tokens

DEFAULT_DAMPING = 0.85
DEFAULT_EPSILON = 1e-4
DEFAULT_MAX_ITER = 100

# ln(1) = 0 would blow up the similarity denominator
MIN_SENTENCE_TOKENS = 2


@dataclass(frozen=True)
class SentenceVertex:
    """A sentence prepared for ranking: position, stems, raw token count."""

    index: int
    stems: tuple[str, ...]
    token_count: int


@dataclass(frozen=True)
class SentenceGraph:
    """Weighted undirected sentence graph; zero-weight edges are omitted."""

    vertices: tuple[SentenceVertex, ...]
    edges: tuple[tuple[int, int, float], ...]  # (index a, index b, weight), a < b


@dataclass(frozen=True)
class RankResult:
    scores: dict[int, float]
    iterations: int
    converged: bool


@dataclass(frozen=True)
class Summary:
    doc_id: int
    sentence_indices: tuple[int, ...]  # strictly ascending
    sentences: tuple[str, ...]  # verbatim from the source document
    scores: tuple[float, ...]


def sentence_vertex(index: int, sentence: str) -> SentenceVertex:
    return SentenceVertex(
        index=index,
        stems=tuple(normalize_tokens(sentence)),
        token_count=len(word_tokens(sentence)),
    )


def sentence_similarity(a: SentenceVertex, b: SentenceVertex) -> float:
    """Distinct shared content stems over the sum of log token counts."""
    if a.token_count < MIN_SENTENCE_TOKENS or b.token_count < MIN_SENTENCE_TOKENS:
        return 0.0
    shared = len(set(a.stems) & set(b.stems))
    if shared == 0:
        return 0.0
    return shared / (math.log(a.token_count) + math.log(b.token_count))


def build_sentence_graph(document: Document) -> SentenceGraph:
    """Graph over the document's sentences with at least two tokens each."""
    vertices = tuple(
        vertex
        for vertex in (sentence_vertex(i, s) for i, s in enumerate(document.sentences))
        if vertex.token_count >= MIN_SENTENCE_TOKENS
    )
    edges = []
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            weight = sentence_similarity(vertices[i], vertices[j])
            if weight > 0.0:
                edges.append((vertices[i].index, vertices[j].index, weight))
    return SentenceGraph(vertices=vertices, edges=tuple(edges))


def rank_vertices(
    graph: SentenceGraph,
    damping: float = DEFAULT_DAMPING,
    epsilon: float = DEFAULT_EPSILON,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RankResult:
    """Iterate the weighted voting recurrence until scores settle.

    S(i) <- (1 - d) + d * sum over neighbors j of
            w(j, i) / (total weight at j) * S(j)

    Updates are synchronous with all scores starting at 1.0; iteration
    stops when the largest per-vertex change drops below epsilon or after
    max_iter rounds. Isolated vertices settle at 1 - d.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError("damping must be in (0, 1)")
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    n = len(graph.vertices)
    if n == 0:
        return RankResult(scores={}, iterations=0, converged=True)
    position = {v.index: k for k, v in enumerate(graph.vertices)}
    weights = np.zeros((n, n))
    for a, b, w in graph.edges:
        i, j = position[a], position[b]
        weights[i, j] = w
        weights[j, i] = w
    strength = weights.sum(axis=1)
    transition = np.zeros_like(weights)
    connected = strength > 0.0
    transition[connected] = weights[connected] / strength[connected, None]
    scores = np.ones(n)
    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        updated = (1.0 - damping) + damping * (transition.T @ scores)
        delta = float(np.max(np.abs(updated - scores)))
        scores = updated
        if delta < epsilon:
            converged = True
            break
    return RankResult(
        scores={v.index: float(scores[position[v.index]]) for v in graph.vertices},
        iterations=iterations,
        converged=converged,
    )


def extract_summary(
    document: Document,
    n_sentences: int,
    damping: float = DEFAULT_DAMPING,
    epsilon: float = DEFAULT_EPSILON,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Summary:
    """Select the top-ranked sentences and emit them in document order.

    Ties favor earlier sentences. Documents with no rankable sentence fall
    back to their first n sentences, scored 0.
    """
    if n_sentences < 1:
        raise ValueError("n_sentences must be >= 1")
    graph = build_sentence_graph(document)
    result = rank_vertices(graph, damping=damping, epsilon=epsilon, max_iter=max_iter)
    if not result.scores:
        indices = list(range(min(n_sentences, len(document.sentences))))
        return Summary(
            doc_id=document.id,
            sentence_indices=tuple(indices),
            sentences=tuple(document.sentences[i] for i in indices),
            scores=tuple(0.0 for _ in indices),
        )
    ranked = sorted(result.scores, key=lambda i: (-result.scores[i], i))
    chosen = sorted(ranked[:n_sentences])
    return Summary(
        doc_id=document.id,
        sentence_indices=tuple(chosen),
        sentences=tuple(document.sentences[i] for i in chosen),
        scores=tuple(result.scores[i] for i in chosen),
    )
