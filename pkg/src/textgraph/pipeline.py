"""Digestion pipeline and the in-memory document store behind the CLI and service."""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from .config import PipelineConfig
from .conllu import CorpusError, Document, parse_conllu
from .extract import Keyphrase, SummaryItem, extract_keyphrases, extract_summary, fuse_compounds
from .graph import LemmaNode, build_graph, node_sort_key
from .query import Answer, Session, answer
from .rank import RankedDocument, rank_document
from .relations import LexicalKB, RelationTriple, extract_svo, facts_bytes, kb_relations


class UnknownHandle(KeyError):
    pass


@dataclass(frozen=True)
class DigestStats:
    sentence_count: int
    node_count: int
    edge_count: int
    digest_ms: float


@dataclass(frozen=True)
class DocHandle:
    id: str
    created_at: float
    stats: DigestStats


@dataclass
class DigestedDocument:
    """Immutable snapshot of one digested document plus its query session."""

    handle: DocHandle
    doc: Document
    rd: RankedDocument
    config: PipelineConfig
    kb: LexicalKB = field(default_factory=LexicalKB)

    def __post_init__(self) -> None:
        self._session = Session(doc=self.doc, rd=self.rd, kb=self.kb, config=self.config.query)

    def summary(self, k: int | None = None) -> list[SummaryItem]:
        return extract_summary(self.rd, k or self.config.extract.summary_sentences)

    def keyphrases(self, k: int | None = None) -> list[Keyphrase]:
        return extract_keyphrases(self.rd, k or self.config.extract.keyphrases, self.config.extract)

    def triples(self) -> list[RelationTriple]:
        mined = extract_svo(self.doc, self.rd, self.config.relations.top_fraction)
        return mined + kb_relations(self.doc, self.kb)

    def facts(self) -> bytes:
        return facts_bytes(self.doc, self.rd, self.keyphrases(), self.summary(), self.triples())

    def ask(self, text: str) -> Answer:
        return answer(self._session, text)

    def dot(self, top_n: int) -> str:
        return export_graph(self.rd, top_n)


def digest_text(
    text: str, config: PipelineConfig | None = None, kb: LexicalKB | None = None
) -> DigestedDocument:
    """Run ingest -> build -> fuse -> rank and wrap the result under a fresh handle."""
    config = config or PipelineConfig()
    started = time.perf_counter()
    doc = parse_conllu(text)
    graph = build_graph(doc, config.graph)
    if config.fuse_compounds:
        graph = fuse_compounds(doc, graph)
    rd = rank_document(doc, graph, config.rank)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    handle = DocHandle(
        id=uuid.uuid4().hex[:12],
        created_at=time.time(),
        stats=DigestStats(
            sentence_count=len(doc.sentences),
            node_count=len(graph),
            edge_count=graph.num_edges(),
            digest_ms=elapsed_ms,
        ),
    )
    return DigestedDocument(
        handle=handle, doc=doc, rd=rd, config=config, kb=kb or LexicalKB()
    )


def digest_file(
    path: str, config: PipelineConfig | None = None, kb: LexicalKB | None = None
) -> DigestedDocument:
    with open(path, encoding="utf-8") as f:
        text = f.read()
    try:
        return digest_text(text, config, kb)
    except CorpusError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def export_graph(rd: RankedDocument, top_n: int) -> str:
    """DOT digraph over the induced subgraph of the top_n ranked lemma nodes."""
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    lemma_nodes = [n for n in rd.graph.nodes() if isinstance(n, LemmaNode)]
    lemma_nodes.sort(key=lambda n: (-rd.rank_of(n), node_sort_key(n)))
    selected = lemma_nodes[:top_n]
    chosen = set(selected)

    def ident(node: LemmaNode) -> str:
        escaped = f"{node.lemma}/{node.posclass}".replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'

    def label(node: LemmaNode) -> str:
        escaped = node.lemma.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'

    lines = ["digraph textgraph {"]
    for node in sorted(selected, key=node_sort_key):
        lines.append(f"  {ident(node)} [label={label(node)}];")
    for src in sorted(chosen, key=node_sort_key):
        for dst, weight in sorted(
            rd.graph.successors(src).items(), key=lambda kv: node_sort_key(kv[0])
        ):
            if dst in chosen:
                lines.append(f'  {ident(src)} -> {ident(dst)} [weight="{weight:.3f}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


class DocumentStore:
    """Concurrent map of immutable digested snapshots, keyed by handle id."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._docs: dict[str, DigestedDocument] = {}

    def put(self, digested: DigestedDocument) -> DocHandle:
        with self._lock:
            self._docs[digested.handle.id] = digested
        return digested.handle

    def get(self, doc_id: str) -> DigestedDocument:
        with self._lock:
            try:
                return self._docs[doc_id]
            except KeyError:
                raise UnknownHandle(doc_id) from None

    def delete(self, doc_id: str) -> None:
        with self._lock:
            if doc_id not in self._docs:
                raise UnknownHandle(doc_id)
            del self._docs[doc_id]

    def ids(self) -> list[str]:
        with self._lock:
            return list(self._docs)
