import pytest

from querysum.config import PipelineConfig
from querysum.corpus import CorpusIndex, Document, build_index, bundled_corpus_manifest


@pytest.fixture(scope="session")
def mini_index() -> CorpusIndex:
    """The bundled mini corpus (sports + computing articles)."""
    index, failures = build_index(bundled_corpus_manifest())
    assert not failures
    return index


@pytest.fixture(scope="session")
def config() -> PipelineConfig:
    return PipelineConfig()


def make_index(stem_docs: dict[int, list[str]]) -> CorpusIndex:
    """Index with fully controlled per-document stem sets (no preprocessing)."""
    documents = [
        Document(
            id=doc_id,
            source=f"mem://{doc_id}",
            title=f"doc {doc_id}",
            text=" ".join(stems),
            sentences=[" ".join(stems)] if stems else [],
            stems=list(stems),
        )
        for doc_id, stems in sorted(stem_docs.items())
    ]
    return CorpusIndex(documents)


@pytest.fixture(scope="session")
def ngd_index() -> CorpusIndex:
    """16-document synthetic corpus with hand-countable frequencies.

    x appears in docs 0-3 (df 4), y in docs 2-3 (df 2, both shared with x),
    z in docs 4-5 (no overlap with x), w everywhere (df 16).
    """
    docs: dict[int, list[str]] = {}
    for i in range(16):
        stems = ["w", f"filler{i}"]
        if i < 4:
            stems.append("x")
        if i in (2, 3):
            stems.append("y")
        if i in (4, 5):
            stems.append("z")
        docs[i] = stems
    return make_index(docs)
