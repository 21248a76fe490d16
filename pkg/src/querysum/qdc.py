"""Query-directed clustering: find, merge, split, select, clean.

The pipeline turns a corpus index plus a query stem into a ranked set of
page clusters:

  1. find_base_clusters    one candidate cluster per sufficiently frequent stem
  2. filter_base_clusters  drop stems semantically distant from the query (NGD)
  3. merge_base_clusters   connect heavily overlapping base clusters
  4. split_cluster         undo chaining by cutting a single-link dendrogram
  5. select_clusters       pick a subset maximizing coverage minus overlap
  6. clean_cluster         drop weakly supported pages from each kept cluster

Every operation is a pure function of immutable inputs. Determinism is part
of the contract: identical inputs produce identical outputs, with all
tie-breaks fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np
from scipy.cluster.hierarchy import linkage

from .corpus import CorpusIndex


class StemNotFoundError(KeyError):
    """Raised when a query stem is absent from the corpus."""

    def __init__(self, stem: str):
        super().__init__(stem)
        self.stem = stem

    def __str__(self) -> str:
        return f"term not found in corpus: {self.stem!r}"


@dataclass(frozen=True)
class BaseCluster:
    """A stem label plus the set of documents containing it."""

    label: str
    pages: frozenset[int]
    query_ngd: float | None = None  # annotated by filter_base_clusters


@dataclass(frozen=True)
class Cluster:
    """A group of base clusters with derived page set and display label.

    The label is the member base-cluster label with the smallest distance
    to the query (ties: larger page count, then lexicographic).
    """

    base_clusters: tuple[BaseCluster, ...]
    pages: frozenset[int]
    label: str
    query_ngd: float

    @classmethod
    def from_base_clusters(cls, members: Iterable[BaseCluster]) -> "Cluster":
        members = tuple(members)
        if not members:
            raise ValueError("a cluster needs at least one base cluster")
        pages: frozenset[int] = frozenset().union(*(b.pages for b in members))
        best = min(
            members,
            key=lambda b: (
                b.query_ngd if b.query_ngd is not None else math.inf,
                -len(b.pages),
                b.label,
            ),
        )
        return cls(
            base_clusters=members,
            pages=pages,
            label=best.label,
            query_ngd=best.query_ngd if best.query_ngd is not None else math.inf,
        )


@dataclass(frozen=True)
class Dendrogram:
    """Single-link merge tree over a cluster's base clusters.

    Nodes 0..n-1 are leaves (positions in ``leaves``); node n+k is the
    cluster formed by merge k. Heights are non-decreasing.
    """

    leaves: tuple[BaseCluster, ...]
    merges: tuple[tuple[int, int, float], ...]

    @property
    def heights(self) -> list[float]:
        return [h for _, _, h in self.merges]


@dataclass(frozen=True)
class SelectionState:
    """Result of cluster selection: chosen candidate indices and objective."""

    candidates: tuple[Cluster, ...]
    selected: tuple[int, ...]
    objective: float

    @property
    def clusters(self) -> list[Cluster]:
        return [self.candidates[i] for i in self.selected]


def base_cluster_threshold(min_base_fraction: float, n_docs: int) -> int:
    """Smallest document frequency admitted as a base cluster.

    ceil(fraction * N) with a guard against float representation error, so
    e.g. 0.04 * 50 counts as exactly 2.
    """
    return max(1, math.ceil(min_base_fraction * n_docs - 1e-9))


def find_base_clusters(index: CorpusIndex, min_base_fraction: float = 0.04) -> list[BaseCluster]:
    """One base cluster per stem present in at least a fraction of the pages."""
    if not 0 < min_base_fraction <= 1:
        raise ValueError("min_base_fraction must be in (0, 1]")
    threshold = base_cluster_threshold(min_base_fraction, index.n_docs)
    return [
        BaseCluster(label=stem, pages=index.postings(stem))
        for stem in index.vocabulary()
        if index.df[stem] >= threshold
    ]


def ngd(index: CorpusIndex, x: str, y: str) -> float:
    """Normalized distance between two stems from corpus frequencies.

    (max(log f(x), log f(y)) - log f(x,y)) / (log N - min(log f(x), log f(y)))
    with f = document frequency and N the corpus size. 0 means the stems
    always co-occur; +inf means they never do. The value is independent of
    the logarithm base.
    """
    fx = index.df.get(x, 0)
    fy = index.df.get(y, 0)
    if fx == 0:
        raise StemNotFoundError(x)
    if fy == 0:
        raise StemNotFoundError(y)
    if x == y:
        return 0.0
    fxy = index.co_df(x, y)
    if fxy == 0:
        return math.inf
    lx, ly, lxy = math.log(fx), math.log(fy), math.log(fxy)
    denom = math.log(index.n_docs) - min(lx, ly)
    if denom == 0.0:
        # a stem occurring in every document carries no distance signal
        return 0.0 if fxy == min(fx, fy) else math.inf
    return (max(lx, ly) - lxy) / denom


def filter_base_clusters(
    index: CorpusIndex,
    clusters: Sequence[BaseCluster],
    query_stem: str,
    threshold: float = 0.7,
) -> list[BaseCluster]:
    """Keep base clusters within an NGD threshold of the query, annotated."""
    kept = []
    for cluster in clusters:
        distance = ngd(index, cluster.label, query_stem)
        if distance <= threshold:
            kept.append(replace(cluster, query_ngd=distance))
    return kept


def base_similarity(a: BaseCluster, b: BaseCluster) -> tuple[float, float]:
    """Directional overlap ratios (|a∩b|/|a|, |a∩b|/|b|)."""
    common = len(a.pages & b.pages)
    return common / len(a.pages), common / len(b.pages)


def merge_base_clusters(
    clusters: Sequence[BaseCluster], merge_overlap: float = 0.5
) -> list[Cluster]:
    """Group base clusters into connected components of the overlap graph.

    An edge joins two base clusters when both directional overlap ratios
    reach ``merge_overlap``. Components are returned in order of their
    smallest input index; every input appears in exactly one output.
    """
    n = len(clusters)
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ratio_i, ratio_j = base_similarity(clusters[i], clusters[j])
            if ratio_i >= merge_overlap and ratio_j >= merge_overlap:
                adjacency[i].append(j)
                adjacency[j].append(i)
    merged = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        component = []
        stack = [start]
        seen[start] = True
        while stack:
            node = stack.pop()
            component.append(node)
            for neighbor in adjacency[node]:
                if not seen[neighbor]:
                    seen[neighbor] = True
                    stack.append(neighbor)
        merged.append(Cluster.from_base_clusters(clusters[i] for i in sorted(component)))
    return merged


def jaccard_distance(a: frozenset[int], b: frozenset[int]) -> float:
    union = len(a | b)
    if union == 0:
        return 0.0
    return 1.0 - len(a & b) / union


def build_dendrogram(cluster: Cluster) -> Dendrogram:
    """Single-link agglomeration over the cluster's base clusters.

    Distance is one minus the Jaccard similarity of page sets. Merge
    heights are non-decreasing, a property of single linkage.
    """
    leaves = cluster.base_clusters
    n = len(leaves)
    if n == 1:
        return Dendrogram(leaves=leaves, merges=())
    condensed = np.array(
        [
            jaccard_distance(leaves[i].pages, leaves[j].pages)
            for i in range(n)
            for j in range(i + 1, n)
        ]
    )
    linkage_matrix = linkage(condensed, method="single")
    merges = tuple(
        (int(row[0]), int(row[1]), float(row[2])) for row in linkage_matrix
    )
    return Dendrogram(leaves=leaves, merges=merges)


def split_cluster(
    cluster: Cluster, dendrogram: Dendrogram, min_split_gap: float = 0.2
) -> list[Cluster]:
    """Cut the dendrogram at its largest height gap, if wide enough.

    Clusters with fewer than three base clusters, or whose largest gap
    between consecutive merge heights does not exceed ``min_split_gap``,
    come back unchanged. Otherwise all merges above the gap are cut and
    each remaining subtree becomes its own cluster; the sub-clusters
    partition the parent's base clusters.
    """
    n = len(dendrogram.leaves)
    heights = dendrogram.heights
    if n < 3 or len(heights) < 2:
        return [cluster]
    gaps = [heights[k + 1] - heights[k] for k in range(len(heights) - 1)]
    widest = max(range(len(gaps)), key=lambda k: (gaps[k], -k))
    if gaps[widest] <= min_split_gap:
        return [cluster]
    # keep the merges below the gap; heights are sorted, so that is a prefix
    components: dict[int, list[int]] = {i: [i] for i in range(n)}
    for k in range(widest + 1):
        left, right, _ = dendrogram.merges[k]
        components[n + k] = components.pop(left) + components.pop(right)
    groups = sorted((sorted(members) for members in components.values()), key=lambda g: g[0])
    return [
        Cluster.from_base_clusters(dendrogram.leaves[i] for i in group)
        for group in groups
    ]


def score_selection(selected: Iterable[Cluster], beta: float = 0.5) -> float:
    """Coverage minus beta times overlap; the empty selection scores 0."""
    clusters = list(selected)
    if not clusters:
        return 0.0
    cover: set[int] = set()
    total = 0
    for cluster in clusters:
        cover.update(cluster.pages)
        total += len(cluster.pages)
    return len(cover) - beta * (total - len(cover))


class _SelectionSearch:
    """Look-ahead hill climbing over selections.

    Selections are encoded as integer bitmasks over candidate indices, and
    every candidate's page set as a bitmask over page ids, so scoring and
    successor generation stay cheap even when the search ball is large.
    """

    # above this candidate count, look-ahead levels beyond the first move
    # enumerate only adds, restricted to the largest INTERIOR_ADD_LIMIT
    # candidates; the first-move level always enumerates every move, so
    # termination and local optimality are unaffected, only deep-ball
    # exploration shrinks
    FULL_SWAP_LIMIT = 16
    INTERIOR_ADD_LIMIT = 12

    def __init__(self, candidates: Sequence[Cluster], beta: float, max_clusters: int):
        page_ids = sorted(set().union(*(c.pages for c in candidates)) if candidates else set())
        bit = {page: 1 << k for k, page in enumerate(page_ids)}
        self.page_masks = []
        for cluster in candidates:
            mask = 0
            for page in cluster.pages:
                mask |= bit[page]
            self.page_masks.append(mask)
        self.sizes = [len(c.pages) for c in candidates]
        self.n = len(candidates)
        self.beta = beta
        self.max_clusters = max_clusters
        by_size = sorted(range(self.n), key=lambda i: (-self.sizes[i], i))
        self._interior_adds = frozenset(by_size[: self.INTERIOR_ADD_LIMIT])
        self._scores: dict[int, float] = {0: 0.0}
        self._memo: dict[tuple[int, int], tuple[float, int]] = {}

    @staticmethod
    def members(selected: int) -> list[int]:
        out = []
        index = 0
        while selected:
            if selected & 1:
                out.append(index)
            selected >>= 1
            index += 1
        return out

    def score(self, selected: int) -> float:
        cached = self._scores.get(selected)
        if cached is not None:
            return cached
        union = 0
        total = 0
        for i in self.members(selected):
            union |= self.page_masks[i]
            total += self.sizes[i]
        cover = union.bit_count()
        value = cover - self.beta * (total - cover)
        self._scores[selected] = value
        return value

    def moves(self, selected: int, interior: bool = False) -> list[int]:
        """Successor selections in tie-break order: adds, swaps, removes."""
        inside = self.members(selected)
        full = not interior or self.n <= self.FULL_SWAP_LIMIT
        if full:
            outside = [i for i in range(self.n) if not selected >> i & 1]
        else:
            outside = [i for i in sorted(self._interior_adds) if not selected >> i & 1]
        successors = []
        if len(inside) < self.max_clusters:
            for j in outside:
                successors.append(selected | 1 << j)
        if full:
            for j in outside:
                for i in inside:
                    successors.append(selected ^ 1 << i | 1 << j)
            for i in inside:
                successors.append(selected ^ 1 << i)
        return successors

    def best_within(self, state: int, depth: int) -> tuple[float, int]:
        """Best score reachable from state in at most depth further moves."""
        key = (state, depth)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        best_score, best_state = self.score(state), state
        if depth > 0:
            for successor in self.moves(state, interior=True):
                value, terminal = self.best_within(successor, depth - 1)
                if value > best_score:
                    best_score, best_state = value, terminal
        result = (best_score, best_state)
        self._memo[key] = result
        return result


def select_clusters(
    candidates: Sequence[Cluster],
    beta: float = 0.5,
    lookahead: int = 3,
    max_clusters: int = 10,
) -> SelectionState:
    """Choose a subset of clusters by look-ahead hill climbing.

    Starting from the empty selection, move sequences of up to ``lookahead``
    adds, removes, or single swaps are enumerated; the first move of the
    best-scoring sequence is applied while the sequence strictly improves on
    the current score. Adds never grow the selection past ``max_clusters``.
    Ties prefer adds over swaps over removes, then lower candidate indices.
    The result is locally optimal: no single move strictly improves it.

    Enumeration is exhaustive for small candidate pools; past
    ``_SelectionSearch.FULL_SWAP_LIMIT`` candidates, levels beyond the first
    move skip swaps to keep the search ball tractable. Local optimality and
    determinism hold regardless.
    """
    if lookahead < 1:
        raise ValueError("lookahead must be >= 1")
    if max_clusters < 1:
        raise ValueError("max_clusters must be >= 1")
    candidates = tuple(candidates)
    # candidates with identical page sets are interchangeable for scoring;
    # searching one representative each (the lowest index, matching the
    # tie-break rule) shrinks the state space without changing the result
    representatives: list[int] = []
    seen_pages: dict[frozenset[int], int] = {}
    for i, cluster in enumerate(candidates):
        if cluster.pages not in seen_pages:
            seen_pages[cluster.pages] = i
            representatives.append(i)
    search = _SelectionSearch([candidates[i] for i in representatives], beta, max_clusters)
    current = 0
    visited = {current}
    while True:
        current_score = search.score(current)
        best_value = current_score
        best_next: int | None = None
        best_terminal = current
        for successor in search.moves(current):
            value, terminal = search.best_within(successor, lookahead - 1)
            if value > best_value:
                best_value, best_next, best_terminal = value, successor, terminal
        if best_next is None:
            break
        if best_next in visited:
            # Re-planning after a single step can revisit a state and loop;
            # jumping to the sequence's end state strictly raises the score,
            # which bounds the number of jumps.
            current = best_terminal
        else:
            current = best_next
        visited.add(current)
    selected = tuple(representatives[k] for k in search.members(current))
    return SelectionState(
        candidates=candidates,
        selected=selected,
        objective=score_selection([candidates[i] for i in selected], beta),
    )


def page_relevance(page: int, cluster: Cluster) -> float:
    """Share of the cluster's base-cluster mass that contains the page.

    Sum of sizes of the member base clusters containing the page, divided
    by the sum of sizes of all member base clusters; always in [0, 1].
    """
    if page not in cluster.pages:
        raise ValueError(f"page {page} is not in cluster {cluster.label!r}")
    containing = sum(len(b.pages) for b in cluster.base_clusters if page in b.pages)
    total = sum(len(b.pages) for b in cluster.base_clusters)
    return containing / total


def clean_cluster(cluster: Cluster, relevance_threshold: float = 0.5) -> Cluster | None:
    """Drop pages whose relevance falls below the threshold.

    Relevance is computed against the original cluster for every page
    before any removal. Base clusters emptied by the removal are dropped;
    a cluster emptied entirely yields None (callers discard it).
    """
    keep = {
        page
        for page in cluster.pages
        if page_relevance(page, cluster) >= relevance_threshold
    }
    survivors = []
    for base in cluster.base_clusters:
        remaining = base.pages & keep
        if remaining:
            survivors.append(replace(base, pages=frozenset(remaining)))
    if not survivors:
        return None
    return Cluster.from_base_clusters(survivors)
