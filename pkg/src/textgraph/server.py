"""Local HTTP service over the document store."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .config import PipelineConfig
from .conllu import CorpusError
from .extract import NoCandidates
from .pipeline import DigestedDocument, DocumentStore, UnknownHandle, digest_text
from .query import EmptyQuery
from .relations import LexicalKB


class AskBody(BaseModel):
    q: str


def _stats_payload(digested: DigestedDocument) -> dict:
    stats = digested.handle.stats
    return {
        "sentences": stats.sentence_count,
        "nodes": stats.node_count,
        "edges": stats.edge_count,
        "digest_ms": stats.digest_ms,
    }


def create_app(
    store: DocumentStore | None = None,
    config: PipelineConfig | None = None,
    kb: LexicalKB | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="textgraph")
    store = store if store is not None else DocumentStore()
    config = config or PipelineConfig()
    kb = kb or LexicalKB()

    def lookup(doc_id: str) -> DigestedDocument:
        try:
            return store.get(doc_id)
        except UnknownHandle:
            raise HTTPException(status_code=404, detail=f"unknown document {doc_id!r}")

    @app.post("/documents", status_code=201)
    async def upload(request: Request):
        body = await request.body()
        try:
            digested = digest_text(body.decode("utf-8"), config, kb)
        except (CorpusError, UnicodeDecodeError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        store.put(digested)
        return {"id": digested.handle.id, "stats": _stats_payload(digested)}

    @app.get("/documents/{doc_id}/summary")
    def summary(doc_id: str, k: int | None = None):
        digested = lookup(doc_id)
        items = digested.summary(k)
        return {
            "items": [
                {"sid": item.sid, "text": item.text, "score": digested.rd.sentence_scores[item.sid]}
                for item in items
            ]
        }

    @app.get("/documents/{doc_id}/keyphrases")
    def keyphrases(doc_id: str, k: int | None = None):
        digested = lookup(doc_id)
        try:
            phrases = digested.keyphrases(k)
        except NoCandidates:
            phrases = []
        return {"items": [{"surface": p.surface, "score": p.score} for p in phrases]}

    @app.post("/documents/{doc_id}/ask")
    def ask(doc_id: str, body: AskBody):
        digested = lookup(doc_id)
        try:
            result = digested.ask(body.q)
        except EmptyQuery as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "items": [
                {"sid": item.sid, "text": item.text, "score": item.score}
                for item in result.items
            ],
            "expanded": sorted(result.expanded_lemmas),
        }

    @app.get("/documents/{doc_id}/graph")
    def graph(doc_id: str, top: int = 25):
        digested = lookup(doc_id)
        return Response(content=digested.dot(top), media_type="text/vnd.graphviz")

    @app.get("/documents/{doc_id}/facts")
    def facts(doc_id: str):
        digested = lookup(doc_id)
        return Response(content=digested.facts(), media_type="text/plain; charset=utf-8")

    @app.delete("/documents/{doc_id}", status_code=204)
    def delete(doc_id: str):
        try:
            store.delete(doc_id)
        except UnknownHandle:
            raise HTTPException(status_code=404, detail=f"unknown document {doc_id!r}")
        return Response(status_code=204)

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def serve(
    port: int,
    static_dir: str | None = None,
    host: str = "127.0.0.1",
    config: PipelineConfig | None = None,
    kb: LexicalKB | None = None,
) -> None:
    """Run the service until interrupted."""
    import uvicorn

    app = create_app(config=config, kb=kb, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
