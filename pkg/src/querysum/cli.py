"""Command line interface: ingest, search, summarize, serve."""

from __future__ import annotations

import argparse
import json
import sys

from . import service
from .config import ConfigError, PipelineConfig
from .corpus import CorpusError, DocumentNotFoundError, build_index, load_index, save_index
from .qdc import StemNotFoundError


def _json_dumps(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2)


def _load_config(path: str | None) -> PipelineConfig:
    if path is None:
        return PipelineConfig()
    return PipelineConfig.load(path)


def _cmd_ingest(args: argparse.Namespace) -> int:
    index, failures = build_index(args.input)
    for failure in failures:
        print(f"skipped {failure.source}: {failure.error}", file=sys.stderr)
    save_index(index, args.index)
    print(f"indexed {index.n_docs} documents -> {args.index}")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    config = _load_config(args.config)
    result = service.run_search(index, args.query, config)
    if args.format == "json":
        print(_json_dumps(service.search_result_to_dict(result)))
        return 0
    print(f"query: {result.query} (stem: {result.query_stem})")
    print(f"documents matched: {result.n_docs_matched}")
    for cluster in result.clusters:
        print(f"\n[{cluster.label}]  ngd={cluster.query_ngd:.4f}  docs={cluster.size}")
        for doc_id, title in zip(cluster.doc_ids, cluster.doc_titles):
            print(f"  {doc_id:>4}  {title}")
    if not result.clusters:
        print("\nno matching categories")
    return 0


def _cmd_summarize(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    config = _load_config(args.config)
    summary = service.summarize_document(index, args.doc, args.sentences, config)
    if args.format == "json":
        print(_json_dumps(service.summary_to_dict(summary)))
        return 0
    document = index.get_document(args.doc)
    print(f"summary of document {summary.doc_id}: {document.title}")
    for index_, sentence, score in zip(summary.sentence_indices, summary.sentences, summary.scores):
        print(f"  [{index_:>3}] ({score:.4f}) {sentence}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .http_api import create_app

    index = load_index(args.index)
    config = _load_config(args.config)
    app = create_app(index, config, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="querysum",
        description="Cluster a document corpus around a query and summarize documents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="build an index from a directory, manifest, or URL list")
    ingest.add_argument("--input", required=True, help="directory, JSON manifest, or source list file")
    ingest.add_argument("--index", required=True, help="output index path")
    ingest.set_defaults(func=_cmd_ingest)

    search = sub.add_parser("search", help="cluster the corpus around a one-word query")
    search.add_argument("--index", required=True)
    search.add_argument("--query", required=True)
    search.add_argument("--format", choices=("text", "json"), default="text")
    search.add_argument("--config", default=None)
    search.set_defaults(func=_cmd_search)

    summarize = sub.add_parser("summarize", help="extract a summary of one document")
    summarize.add_argument("--index", required=True)
    summarize.add_argument("--doc", type=int, required=True)
    summarize.add_argument("--sentences", type=int, default=None)
    summarize.add_argument("--format", choices=("text", "json"), default="text")
    summarize.add_argument("--config", default=None)
    summarize.set_defaults(func=_cmd_summarize)

    serve = sub.add_parser("serve", help="serve the JSON API (and optionally the web client)")
    serve.add_argument("--index", required=True)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--static", default=None, help="directory of built web client assets")
    serve.add_argument("--config", default=None)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CorpusError, ConfigError, service.QueryError, StemNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DocumentNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
