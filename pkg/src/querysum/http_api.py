"""Stateless JSON API over a loaded corpus index.

Errors come back as {"error_code", "message"} bodies: 400 for unusable
queries, 404 for unknown documents. The index is immutable and shared
read-only across requests; there is no server-side session state.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import service
from .config import PipelineConfig
from .corpus import CorpusIndex, DocumentNotFoundError
from .qdc import StemNotFoundError


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error_code": code, "message": message})


def create_app(
    index: CorpusIndex,
    config: PipelineConfig | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    config = config or PipelineConfig()
    app = FastAPI(title="querysum", docs_url=None, redoc_url=None)

    @app.get("/api/search")
    def search(q: str = ""):
        if not q.strip():
            return _error(400, "bad_query", "query parameter q is required")
        try:
            result = service.run_search(index, q, config)
        except service.QueryError as exc:
            return _error(400, exc.code, exc.message)
        except StemNotFoundError as exc:
            return _error(400, "term_not_found", str(exc))
        return service.search_result_to_dict(result)

    @app.get("/api/docs/{doc_id}")
    def get_document(doc_id: int):
        try:
            document = service.get_document(index, doc_id)
        except DocumentNotFoundError as exc:
            return _error(404, "doc_not_found", str(exc))
        return service.document_to_dict(document)

    @app.get("/api/docs/{doc_id}/summary")
    def summarize(doc_id: int, sentences: int | None = None):
        if sentences is not None and sentences < 1:
            return _error(400, "bad_query", "sentences must be >= 1")
        try:
            summary = service.summarize_document(index, doc_id, sentences, config)
        except DocumentNotFoundError as exc:
            return _error(404, "doc_not_found", str(exc))
        return service.summary_to_dict(summary)

    @app.get("/api/config")
    def get_config():
        return config.to_dict()

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app
