"""Relation mining and the logic-fact database export.

SVO triples come from verbs carrying both a subject and an object arc, kept
only when all three lemmas sit in the top fraction of lemma ranks. is-a and
part-of triples come from a lexical KB, admitted only when both ends occur in
the document. The exporter writes the full relational view of a document as
one fact per line, byte-deterministically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .conllu import Document, base_deprel
from .graph import LemmaNode, dep_records, lemma_node_of, node_sort_key
from .rank import RankedDocument

KB_RELATIONS = ("hypernym", "hyponym", "meronym", "holonym")


class MalformedKBLine(ValueError):
    pass


class SinkWrite(OSError):
    pass


@dataclass(frozen=True)
class RelationTriple:
    subject: str
    verb: str  # lemma, or the reserved tags is_a / part_of
    object: str
    sid: int | None = None  # present iff mined from a dependency pattern


@dataclass
class LexicalKB:
    tables: dict[str, dict[str, set[str]]] = field(
        default_factory=lambda: {rel: {} for rel in KB_RELATIONS}
    )

    def related(self, relation: str, lemma: str) -> set[str]:
        return self.tables.get(relation, {}).get(lemma, set())

    def add(self, relation: str, lemma: str, related: str) -> None:
        self.tables.setdefault(relation, {}).setdefault(lemma.lower(), set()).add(
            related.lower()
        )

    @property
    def empty(self) -> bool:
        return not any(self.tables.get(rel) for rel in KB_RELATIONS)


def load_kb(path: str) -> LexicalKB:
    """Load a tab-separated relation/lemma/related_lemma file; '#' starts a comment."""
    kb = LexicalKB()
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise MalformedKBLine(f"line {lineno}: expected 3 tab-separated columns")
            relation, lemma, related = cols
            if relation not in KB_RELATIONS:
                raise MalformedKBLine(f"line {lineno}: unknown relation {relation!r}")
            if not lemma or not related:
                raise MalformedKBLine(f"line {lineno}: empty lemma column")
            kb.add(relation, lemma, related)
    return kb


def _arc_slot(deprel: str) -> str | None:
    """Classify an arc as subject or object; passive subjects fill the object slot."""
    rel = base_deprel(deprel)
    if rel in ("nsubj", "csubj"):
        return "object" if deprel.endswith(":pass") else "subject"
    if rel in ("obj", "iobj"):
        return "object"
    return None


def extract_svo(doc: Document, rd: RankedDocument, top_fraction: float) -> list[RelationTriple]:
    """Subject-verb-object triples whose three lemmas survive the rank cutoff."""
    if not 0 < top_fraction <= 1:
        raise ValueError(f"top_fraction must be in (0, 1], got {top_fraction}")

    lemma_nodes = [n for n in rd.graph.nodes() if isinstance(n, LemmaNode)]
    lemma_nodes.sort(key=lambda n: (-rd.rank_of(n), node_sort_key(n)))
    keep = set(lemma_nodes[: math.ceil(top_fraction * len(lemma_nodes))])

    triples: list[RelationTriple] = []
    seen: set[tuple[str, str, str]] = set()
    for sent in doc.sentences:
        for verb in sent.tokens:
            if verb.upos not in ("VERB", "AUX"):
                continue
            subjects, objects = [], []
            for tok in sent.tokens:
                if tok.head != verb.index:
                    continue
                slot = _arc_slot(tok.deprel)
                if slot == "subject":
                    subjects.append(tok)
                elif slot == "object":
                    objects.append(tok)
            if not subjects or not objects:
                continue
            verb_node = rd.graph.resolve(lemma_node_of(verb))
            if verb_node is None or verb_node not in keep:
                continue
            for s in subjects:
                s_node = rd.graph.resolve(lemma_node_of(s))
                if s_node is None or s_node not in keep:
                    continue
                for o in objects:
                    o_node = rd.graph.resolve(lemma_node_of(o))
                    if o_node is None or o_node not in keep:
                        continue
                    key = (s_node.lemma, verb_node.lemma, o_node.lemma)
                    if key in seen:
                        continue
                    seen.add(key)
                    triples.append(
                        RelationTriple(
                            subject=s_node.lemma,
                            verb=verb_node.lemma,
                            object=o_node.lemma,
                            sid=sent.sid,
                        )
                    )
    return triples


def kb_relations(doc: Document, kb: LexicalKB) -> list[RelationTriple]:
    """is-a / part-of triples whose both ends occur in the document.

    hypernym/holonym tables relate x to its generalization/whole; the
    hyponym/meronym tables contribute the mirrored triples.
    """
    doc_lemmas = doc.lemmas
    out: list[RelationTriple] = []
    seen: set[tuple[str, str, str]] = set()

    def emit(subject: str, tag: str, obj: str) -> None:
        if subject == obj or subject not in doc_lemmas or obj not in doc_lemmas:
            return
        key = (subject, tag, obj)
        if key not in seen:
            seen.add(key)
            out.append(RelationTriple(subject=subject, verb=tag, object=obj, sid=None))

    for x in sorted(doc_lemmas):
        for y in sorted(kb.related("hypernym", x)):
            emit(x, "is_a", y)
        for y in sorted(kb.related("hyponym", x)):
            emit(y, "is_a", x)
        for y in sorted(kb.related("holonym", x)):
            emit(x, "part_of", y)
        for y in sorted(kb.related("meronym", x)):
            emit(y, "part_of", x)
    return out


def quote_atom(text: str) -> str:
    return "'" + text.replace("'", "''") + "'"


def _format_real(value: float) -> str:
    return f"{value:.6f}"


def _format_list(items: list[str]) -> str:
    return "[" + ",".join(quote_atom(x) for x in items) + "]"


def _fact(name: str, *args: str) -> str:
    return f"{name}({','.join(args)})."


def fact_lines(doc, rd, keyphrases, summary, triples) -> list[str]:
    """All fact groups in fixed order: keyword, summary, dep, edge, rank, w2l, svo, sent."""
    lines: list[str] = []
    for phrase in keyphrases:
        lines.append(_fact("keyword", quote_atom(phrase.surface)))
    for item in summary:
        lines.append(_fact("summary", str(item.sid), _format_list(list(item.words))))
    for rec in dep_records(doc):
        lines.append(
            _fact(
                "dep",
                str(rec.sid),
                quote_atom(rec.word_from),
                quote_atom(rec.from_tag),
                quote_atom(rec.label),
                quote_atom(rec.word_to),
                quote_atom(rec.to_tag),
            )
        )
    for rec in rd.graph.provenance:
        lines.append(
            _fact(
                "edge",
                str(rec.sid),
                quote_atom(rec.from_lemma),
                quote_atom(rec.from_tag),
                quote_atom(rec.label),
                quote_atom(rec.to_lemma),
                quote_atom(rec.to_tag),
            )
        )
    for node in sorted(rd.ranks.scores, key=node_sort_key):
        score = _format_real(rd.ranks.scores[node])
        if isinstance(node, LemmaNode):
            lines.append(_fact("rank", quote_atom(node.lemma), score))
        else:
            lines.append(_fact("rank", str(node.sid), score))
    for word, (lemma, tag) in doc.word_lemma_map.items():
        lines.append(_fact("w2l", quote_atom(word), quote_atom(lemma), quote_atom(tag)))
    for t in triples:
        lines.append(
            _fact("svo", quote_atom(t.subject), quote_atom(t.verb), quote_atom(t.object))
        )
    for sent in doc.sentences:
        lines.append(_fact("sent", str(sent.sid), _format_list(sent.forms)))
    return lines


def facts_bytes(doc, rd, keyphrases, summary, triples) -> bytes:
    text = "\n".join(fact_lines(doc, rd, keyphrases, summary, triples)) + "\n"
    return text.encode("utf-8")


def export_facts(doc, rd, keyphrases, summary, triples, sink) -> None:
    """Write the fact database to a binary sink; write failures raise SinkWrite."""
    payload = facts_bytes(doc, rd, keyphrases, summary, triples)
    try:
        sink.write(payload)
    except OSError as exc:
        raise SinkWrite(f"failed to write fact stream: {exc}") from exc
