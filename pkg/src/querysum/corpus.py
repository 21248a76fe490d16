"""Document ingestion and the corpus index.

A CorpusIndex holds preprocessed documents plus the document-frequency
statistics that drive term-distance computations. Co-occurrence counts are
derived on demand from per-stem posting sets rather than materialized
pairwise. A built index is immutable; reads need no coordination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Iterable

import requests

from .text import (
    STOPWORD_LIST_VERSION,
    collapse_whitespace,
    extract_html,
    looks_like_html,
    normalize_tokens,
    split_sentences,
)

INDEX_FORMAT_VERSION = 1

DEFAULT_FETCH_TIMEOUT = 10.0
DEFAULT_FETCH_MAX_BYTES = 2_000_000


class CorpusError(Exception):
    """Raised when ingestion cannot produce a usable index."""


class DocumentNotFoundError(KeyError):
    """Raised when a document id is not present in the index."""

    def __init__(self, doc_id: int):
        super().__init__(doc_id)
        self.doc_id = doc_id

    def __str__(self) -> str:
        return f"document {self.doc_id} not found"


@dataclass
class Document:
    """One preprocessed source document."""

    id: int
    source: str
    title: str
    text: str
    sentences: list[str]
    stems: list[str]
    raw: str | None = None  # original text as read; not persisted

    @cached_property
    def stem_set(self) -> frozenset[str]:
        return frozenset(self.stems)


@dataclass(frozen=True)
class IngestFailure:
    source: str
    error: str


class CorpusIndex:
    """Immutable collection of documents plus frequency statistics."""

    def __init__(
        self,
        documents: Iterable[Document],
        version: int = INDEX_FORMAT_VERSION,
        stopword_list_version: int = STOPWORD_LIST_VERSION,
    ):
        self.version = version
        self.stopword_list_version = stopword_list_version
        self.documents = list(documents)
        self._by_id: dict[int, Document] = {}
        for doc in self.documents:
            if doc.id in self._by_id:
                raise CorpusError(f"duplicate document id {doc.id}")
            self._by_id[doc.id] = doc
        postings: dict[str, set[int]] = {}
        for doc in self.documents:
            for stem in doc.stem_set:
                postings.setdefault(stem, set()).add(doc.id)
        self._postings = {s: frozenset(ids) for s, ids in postings.items()}
        self.df = {s: len(ids) for s, ids in self._postings.items()}

    @property
    def n_docs(self) -> int:
        return len(self.documents)

    def __contains__(self, stem: str) -> bool:
        return stem in self._postings

    def vocabulary(self) -> list[str]:
        return sorted(self._postings)

    def postings(self, stem: str) -> frozenset[int]:
        """Ids of the documents whose stem set contains the stem."""
        return self._postings.get(stem, frozenset())

    def co_df(self, x: str, y: str) -> int:
        """Number of documents containing both stems."""
        return len(self._postings.get(x, frozenset()) & self._postings.get(y, frozenset()))

    def get_document(self, doc_id: int) -> Document:
        try:
            return self._by_id[doc_id]
        except KeyError:
            raise DocumentNotFoundError(doc_id) from None


def make_document(doc_id: int, source: str, raw: bytes | str, title_hint: str | None = None) -> Document:
    """Preprocess one raw source into a Document."""
    if isinstance(raw, bytes):
        decoded = raw.decode("utf-8", errors="replace")
    else:
        decoded = raw
    if looks_like_html(decoded):
        text, html_title = extract_html(decoded)
    else:
        text, html_title = collapse_whitespace(decoded), None
    title = title_hint or html_title or _default_title(source)
    return Document(
        id=doc_id,
        source=source,
        title=title,
        text=text,
        sentences=split_sentences(text),
        stems=normalize_tokens(text),
        raw=decoded,
    )


def _default_title(source: str) -> str:
    if source.startswith(("http://", "https://")):
        return source
    return Path(source).name


def _fetch_url(url: str, timeout: float, max_bytes: int) -> bytes:
    resp = requests.get(url, timeout=timeout, stream=True)
    resp.raise_for_status()
    chunks = []
    size = 0
    for chunk in resp.iter_content(chunk_size=65536):
        chunks.append(chunk)
        size += len(chunk)
        if size > max_bytes:
            break
    return b"".join(chunks)[:max_bytes]


def _resolve_relative(source: str, base: Path) -> str:
    if source.startswith(("http://", "https://")) or Path(source).is_absolute():
        return source
    return str(base / source)


def resolve_sources(input_path: str | Path) -> list[tuple[str, str | None]]:
    """Expand an ingest input into (source, title hint) pairs.

    Accepts a directory (every regular file, sorted by name), a JSON
    manifest ([{"source": ..., "title": ...?}, ...], paths relative to the
    manifest), or a plain text file with one source (path or URL) per line.
    """
    path = Path(input_path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.is_file() and not p.name.startswith("."))
        return [(str(p), None) for p in files]
    if not path.is_file():
        raise CorpusError(f"input not found: {path}")
    if path.suffix.lower() == ".json":
        entries = json.loads(path.read_text("utf-8"))
        if not isinstance(entries, list):
            raise CorpusError("manifest must be a JSON list")
        sources = []
        for entry in entries:
            if not isinstance(entry, dict) or "source" not in entry:
                raise CorpusError(f"bad manifest entry: {entry!r}")
            sources.append((_resolve_relative(str(entry["source"]), path.parent), entry.get("title")))
        return sources
    lines = [line.strip() for line in path.read_text("utf-8").splitlines()]
    return [(_resolve_relative(line, path.parent), None) for line in lines if line and not line.startswith("#")]


def build_index(
    sources: str | Path | Iterable[tuple[str, str | None]],
    fetch_timeout: float = DEFAULT_FETCH_TIMEOUT,
    fetch_max_bytes: int = DEFAULT_FETCH_MAX_BYTES,
) -> tuple[CorpusIndex, list[IngestFailure]]:
    """Fetch, preprocess and index every source.

    Unreadable sources are recorded as failures and skipped; an input that
    yields zero documents is fatal. Document ids are assigned densely from
    0 in source order.
    """
    if isinstance(sources, (str, Path)):
        pairs = resolve_sources(sources)
    else:
        pairs = list(sources)
    documents = []
    failures = []
    for source, title_hint in pairs:
        try:
            if source.startswith(("http://", "https://")):
                raw: bytes | str = _fetch_url(source, fetch_timeout, fetch_max_bytes)
            else:
                raw = Path(source).read_bytes()
            documents.append(make_document(len(documents), source, raw, title_hint))
        except Exception as exc:  # noqa: BLE001 - per-document isolation
            failures.append(IngestFailure(source=source, error=str(exc)))
    if not documents:
        raise CorpusError("no readable documents; cannot build an index")
    return CorpusIndex(documents), failures


def bundled_corpus_dir() -> Path:
    """Directory of the bundled mini corpus (sports and computing articles)."""
    return Path(str(resources.files("querysum"))) / "data" / "minicorpus"


def bundled_corpus_manifest() -> Path:
    """Manifest for the bundled mini corpus, with human-readable titles."""
    return Path(str(resources.files("querysum"))) / "data" / "minicorpus_manifest.json"


def index_to_json(index: CorpusIndex) -> str:
    """Canonical JSON serialization; derived statistics are not persisted."""
    payload = {
        "version": index.version,
        "n_docs": index.n_docs,
        "stopword_list_version": index.stopword_list_version,
        "documents": [
            {
                "id": doc.id,
                "source": doc.source,
                "title": doc.title,
                "text": doc.text,
                "sentences": doc.sentences,
                "stems": doc.stems,
            }
            for doc in index.documents
        ],
    }
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def save_index(index: CorpusIndex, path: str | Path) -> None:
    Path(path).write_text(index_to_json(index), encoding="utf-8")


def load_index(path: str | Path) -> CorpusIndex:
    """Reload an index; df and co-occurrence statistics are recomputed."""
    try:
        payload = json.loads(Path(path).read_text("utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CorpusError(f"cannot read index {path}: {exc}") from exc
    version = payload.get("version")
    if version != INDEX_FORMAT_VERSION:
        raise CorpusError(f"unsupported index version: {version!r}")
    documents = [
        Document(
            id=entry["id"],
            source=entry["source"],
            title=entry["title"],
            text=entry["text"],
            sentences=list(entry["sentences"]),
            stems=list(entry["stems"]),
        )
        for entry in payload["documents"]
    ]
    index = CorpusIndex(
        documents,
        version=version,
        stopword_list_version=payload.get("stopword_list_version", STOPWORD_LIST_VERSION),
    )
    if index.n_docs != payload.get("n_docs"):
        raise CorpusError("index n_docs does not match document count")
    return index
