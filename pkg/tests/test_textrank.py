import math

import numpy as np
import pytest

from querysum.corpus import Document
from querysum.textrank import (
    SentenceGraph,
    SentenceVertex,
    build_sentence_graph,
    extract_summary,
    rank_vertices,
    sentence_similarity,
    sentence_vertex,
)


def vertex(index, stems, tokens):
    return SentenceVertex(index=index, stems=tuple(stems), token_count=tokens)


def make_document(sentences, doc_id=0):
    return Document(
        id=doc_id,
        source="mem://doc",
        title="test doc",
        text=" ".join(sentences),
        sentences=list(sentences),
        stems=[],
    )


def graph_of(n, weighted_edges):
    vertices = tuple(vertex(i, [f"s{i}"], 5) for i in range(n))
    return SentenceGraph(vertices=vertices, edges=tuple(weighted_edges))


def oracle_scores(graph, steps=10000, damping=0.85):
    """Independent power iteration: explicit transition build, fixed steps."""
    ids = [v.index for v in graph.vertices]
    pos = {v: k for k, v in enumerate(ids)}
    n = len(ids)
    weights = [[0.0] * n for _ in range(n)]
    for a, b, w in graph.edges:
        weights[pos[a]][pos[b]] = w
        weights[pos[b]][pos[a]] = w
    transition = [[0.0] * n for _ in range(n)]
    for j in range(n):
        total = sum(weights[j])
        if total > 0:
            for i in range(n):
                transition[j][i] = weights[j][i] / total
    matrix = np.array(transition)
    scores = np.ones(n)
    for _ in range(steps):
        scores = (1 - damping) + damping * (matrix.T @ scores)
    return {ids[k]: float(scores[k]) for k in range(n)}


def random_graph(rng, max_vertices=15):
    n = int(rng.integers(2, max_vertices + 1))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                edges.append((i, j, float(rng.uniform(0.1, 3.0))))
    return graph_of(n, edges)


class TestSentenceSimilarity:
    def test_disjoint_is_zero(self):
        a = vertex(0, ["alpha", "beta"], 6)
        b = vertex(1, ["gamma"], 6)
        assert sentence_similarity(a, b) == 0.0

    def test_worked_value(self):
        a = vertex(0, ["alpha", "beta", "gamma", "delta"], 10)
        b = vertex(1, ["alpha", "beta", "gamma", "epsilon"], 10)
        expected = 3 / (2 * math.log(10))
        assert sentence_similarity(a, b) == pytest.approx(expected, abs=1e-12)
        assert sentence_similarity(a, b) == pytest.approx(0.6514, abs=1e-4)

    def test_self_similarity_is_largest(self):
        stems = [f"w{i}" for i in range(10)]
        a = vertex(0, stems, 10)
        expected = 10 / (2 * math.log(10))
        assert sentence_similarity(a, a) == pytest.approx(expected, abs=1e-12)
        assert sentence_similarity(a, a) == pytest.approx(2.171, abs=1e-3)

    def test_short_sentences_guarded(self):
        a = vertex(0, ["alpha"], 1)
        b = vertex(1, ["alpha"], 9)
        assert sentence_similarity(a, b) == 0.0


class TestBuildSentenceGraph:
    def test_single_eligible_sentence(self):
        doc = make_document(["The cricket match was long."])
        graph = build_sentence_graph(doc)
        assert len(graph.vertices) == 1
        assert graph.edges == ()

    def test_disjoint_sentences_no_edges(self):
        doc = make_document(["Cricket bats crack loudly.", "Compilers emit warnings."])
        graph = build_sentence_graph(doc)
        assert len(graph.vertices) == 2
        assert graph.edges == ()

    def test_pairwise_weights_match_recount(self):
        doc = make_document([
            "Cricket players train daily.",
            "Cricket players rest weekly.",
            "Players value their training schedule.",
        ])
        graph = build_sentence_graph(doc)
        assert len(graph.edges) == 3
        recomputed = {}
        vertices = [sentence_vertex(i, s) for i, s in enumerate(doc.sentences)]
        for i in range(3):
            for j in range(i + 1, 3):
                recomputed[(i, j)] = sentence_similarity(vertices[i], vertices[j])
        for a, b, w in graph.edges:
            assert w == pytest.approx(recomputed[(a, b)], abs=1e-12)

    def test_short_sentences_excluded(self):
        doc = make_document(["No.", "Cricket is a summer game entirely."])
        graph = build_sentence_graph(doc)
        assert [v.index for v in graph.vertices] == [1]


class TestRankVertices:
    def test_isolated_vertex_floor(self):
        graph = graph_of(1, [])
        result = rank_vertices(graph, damping=0.85)
        assert result.scores[0] == pytest.approx(0.15, abs=1e-9)
        assert result.converged

    def test_two_vertices_fixed_point(self):
        graph = graph_of(2, [(0, 1, 2.5)])
        result = rank_vertices(graph, damping=0.85)
        assert result.scores[0] == pytest.approx(1.0, abs=1e-9)
        assert result.scores[1] == pytest.approx(1.0, abs=1e-9)

    def test_empty_graph(self):
        result = rank_vertices(graph_of(0, []))
        assert result.scores == {}
        assert result.converged

    def test_four_vertex_weighted_path_with_chord(self):
        graph = graph_of(4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (0, 2, 1.5)])
        tight = rank_vertices(graph, epsilon=1e-12, max_iter=10000)
        expected = oracle_scores(graph)
        for v, score in tight.scores.items():
            assert score == pytest.approx(expected[v], abs=1e-6)

    def test_matches_oracle_on_random_graphs(self):
        rng = np.random.default_rng(101)
        for _ in range(20):
            graph = random_graph(rng)
            tight = rank_vertices(graph, epsilon=1e-12, max_iter=10000)
            expected = oracle_scores(graph)
            for v, score in tight.scores.items():
                assert score == pytest.approx(expected[v], abs=1e-6)

    def test_converges_at_defaults(self):
        rng = np.random.default_rng(103)
        for _ in range(20):
            result = rank_vertices(random_graph(rng))
            assert result.converged
            assert result.iterations <= 100

    def test_scale_invariance(self):
        rng = np.random.default_rng(107)
        for factor in (7.3, 0.001, 1000.0):
            graph = random_graph(rng)
            scaled = SentenceGraph(
                vertices=graph.vertices,
                edges=tuple((a, b, w * factor) for a, b, w in graph.edges),
            )
            base = rank_vertices(graph)
            other = rank_vertices(scaled)
            for v in base.scores:
                assert abs(base.scores[v] - other.scores[v]) <= 1e-9

    def test_score_floor(self):
        rng = np.random.default_rng(109)
        for _ in range(10):
            result = rank_vertices(random_graph(rng))
            for score in result.scores.values():
                assert score >= 0.15 - 1e-12

    def test_residual_at_convergence(self):
        rng = np.random.default_rng(113)
        graph = random_graph(rng)
        result = rank_vertices(graph, epsilon=1e-4)
        assert result.converged
        # one more synchronous update moves no score by epsilon or more
        ids = [v.index for v in graph.vertices]
        pos = {v: k for k, v in enumerate(ids)}
        n = len(ids)
        weights = np.zeros((n, n))
        for a, b, w in graph.edges:
            weights[pos[a]][pos[b]] = weights[pos[b]][pos[a]] = w
        strength = weights.sum(axis=1)
        transition = np.zeros_like(weights)
        nz = strength > 0
        transition[nz] = weights[nz] / strength[nz, None]
        scores = np.array([result.scores[v] for v in ids])
        updated = 0.15 + 0.85 * (transition.T @ scores)
        assert float(np.max(np.abs(updated - scores))) < 1e-4

    def test_permutation_equivariance(self):
        rng = np.random.default_rng(127)
        graph = random_graph(rng)
        ids = [v.index for v in graph.vertices]
        perm = {old: new for old, new in zip(ids, rng.permutation(ids))}
        relabeled = SentenceGraph(
            vertices=tuple(
                SentenceVertex(perm[v.index], v.stems, v.token_count)
                for v in graph.vertices
            ),
            edges=tuple((perm[a], perm[b], w) for a, b, w in graph.edges),
        )
        base = rank_vertices(graph)
        other = rank_vertices(relabeled)
        for v in ids:
            assert other.scores[perm[v]] == pytest.approx(base.scores[v], abs=1e-12)

    def test_parameter_validation(self):
        graph = graph_of(1, [])
        with pytest.raises(ValueError):
            rank_vertices(graph, damping=1.0)
        with pytest.raises(ValueError):
            rank_vertices(graph, epsilon=0.0)
        with pytest.raises(ValueError):
            rank_vertices(graph, max_iter=0)


class TestExtractSummary:
    def test_all_sentences_when_n_large(self):
        sentences = [
            "Cricket occupies the summer months.",
            "Football fills the winter calendar.",
            "Tennis peaks in early july.",
        ]
        summary = extract_summary(make_document(sentences), 10)
        assert summary.sentence_indices == (0, 1, 2)
        assert summary.sentences == tuple(sentences)

    def test_uniform_graph_position_tiebreak(self):
        # identical sentences: every pairwise weight is equal, scores tie
        sentences = ["Cricket needs patient batting today."] * 5
        summary = extract_summary(make_document(sentences), 2)
        assert summary.sentence_indices == (0, 1)

    def test_bundled_article_top3(self, mini_index):
        doc = next(d for d in mini_index.documents if "search_engine" in d.source)
        assert len(doc.sentences) == 12
        graph = build_sentence_graph(doc)
        expected = oracle_scores(graph)
        top3 = sorted(sorted(expected, key=lambda i: (-expected[i], i))[:3])
        summary = extract_summary(doc, 3)
        assert list(summary.sentence_indices) == top3 == [2, 5, 8]

    def test_fallback_for_ineligible_sentences(self):
        doc = make_document(["No.", "Ha!", "Hm."])
        summary = extract_summary(doc, 2)
        assert summary.sentence_indices == (0, 1)
        assert summary.scores == (0.0, 0.0)

    def test_indices_ascending_and_verbatim(self, mini_index):
        for doc in mini_index.documents[:6]:
            summary = extract_summary(doc, 3)
            indices = summary.sentence_indices
            assert all(indices[i] < indices[i + 1] for i in range(len(indices) - 1))
            for idx, sentence in zip(indices, summary.sentences):
                assert sentence == doc.sentences[idx]

    def test_n_sentences_validated(self):
        with pytest.raises(ValueError):
            extract_summary(make_document(["One two three."]), 0)
