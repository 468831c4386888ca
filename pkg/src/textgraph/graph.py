"""Heterogeneous text graph built from dependency arcs.

Nodes are unique (lemma, posclass) pairs plus one node per sentence. Arcs are
redirected so that nouns with subject/object roles receive rank ("about"
edges), while modifiers point at their heads and relinquish rank. Content
words recommend their sentence; sentences recommend their predicate verbs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .conllu import Document, EmptyDocument, Token, base_deprel
from .config import GraphConfig


class GraphError(ValueError):
    pass


class EmptyGraph(GraphError):
    pass


@dataclass(frozen=True, slots=True)
class LemmaNode:
    lemma: str
    posclass: str  # noun | verb | adj | other


@dataclass(frozen=True, slots=True)
class SentNode:
    sid: int


NodeId = LemmaNode | SentNode


def node_sort_key(node: NodeId) -> tuple:
    """Total deterministic order: lemma nodes lexicographically, then sentences."""
    if isinstance(node, LemmaNode):
        return (0, node.lemma, node.posclass)
    return (1, node.sid, "")


def posclass(upos: str) -> str:
    if upos in ("NOUN", "PROPN"):
        return "noun"
    if upos in ("VERB", "AUX"):
        return "verb"
    if upos == "ADJ":
        return "adj"
    return "other"


class Directive(Enum):
    TO_HEAD = "to_head"
    TO_DEPENDENT = "to_dependent"
    DROP = "drop"


# relations whose dependent noun the sentence is "about"
_ABOUT_RELS = frozenset({"nsubj", "csubj", "obj", "iobj"})
# relations marking a dependent verb as heading a clause of its own
_CLAUSE_RELS = frozenset({"ccomp", "xcomp", "advcl", "acl"})


def arc_directive(deprel: str, head_pos: str, dep_pos: str) -> Directive:
    """Decide where a dependency arc points in the text graph.

    Subject/object arcs flip toward the dependent noun; punctuation is dropped;
    everything else (modifiers, function words) points at the head so lesser
    material relinquishes its rank. Unknown labels default to TO_HEAD.
    """
    rel = base_deprel(deprel)
    if rel in _ABOUT_RELS:
        return Directive.TO_DEPENDENT
    if rel == "punct":
        return Directive.DROP
    return Directive.TO_HEAD


@dataclass(frozen=True, slots=True)
class EdgeRecord:
    """Provenance for one emitted lemma-to-lemma edge occurrence."""

    sid: int
    from_lemma: str
    from_tag: str
    label: str
    to_lemma: str
    to_tag: str


@dataclass(frozen=True, slots=True)
class DepRecord:
    """Transcription of one original (un-redirected) dependency arc."""

    sid: int
    word_from: str
    from_tag: str
    label: str
    word_to: str
    to_tag: str


class TextGraph:
    """Directed weighted multigraph; parallel edges accumulate weight."""

    def __init__(self) -> None:
        self._nodes: dict[NodeId, None] = {}
        self._adj: dict[NodeId, dict[NodeId, float]] = {}
        self.provenance: list[EdgeRecord] = []
        # original (lemma, posclass) node -> current node (updated by fusion)
        self.node_map: dict[NodeId, NodeId] = {}
        # fused node -> [(sid, member token indices)], set by compound fusion
        self.fused_occurrences: dict[NodeId, list[tuple[int, tuple[int, ...]]]] = {}

    def add_node(self, node: NodeId) -> None:
        self._nodes.setdefault(node, None)

    def add_edge(self, src: NodeId, dst: NodeId, weight: float) -> None:
        if weight <= 0:
            raise GraphError(f"edge weight must be positive, got {weight}")
        self.add_node(src)
        self.add_node(dst)
        targets = self._adj.setdefault(src, {})
        targets[dst] = targets.get(dst, 0.0) + weight

    def nodes(self) -> list[NodeId]:
        return list(self._nodes)

    def __contains__(self, node: NodeId) -> bool:
        return node in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def successors(self, node: NodeId) -> dict[NodeId, float]:
        return self._adj.get(node, {})

    def edges(self):
        for src, targets in self._adj.items():
            for dst, w in targets.items():
                yield src, dst, w

    def num_edges(self) -> int:
        return sum(len(t) for t in self._adj.values())

    def weight(self, src: NodeId, dst: NodeId) -> float:
        return self._adj.get(src, {}).get(dst, 0.0)

    def resolve(self, node: NodeId) -> NodeId | None:
        """Map an original lemma node key through any fusion that replaced it."""
        mapped = self.node_map.get(node, node)
        return mapped if mapped in self._nodes else None


def lemma_node_of(token: Token) -> LemmaNode:
    return LemmaNode(lemma=token.lemma.lower(), posclass=posclass(token.upos))


def _is_punct(token: Token) -> bool:
    return base_deprel(token.deprel) == "punct" or token.upos == "PUNCT"


def _predicate_verbs(tokens: tuple[Token, ...]) -> list[Token]:
    """Verbs a sentence recommends: a verbal root plus verbs heading clauses.

    AUX never qualifies; coordinated verbs count when conjoined to a verb.
    """
    preds: list[Token] = []
    for tok in tokens:
        if tok.upos != "VERB":
            continue
        rel = base_deprel(tok.deprel)
        if tok.head == 0:
            preds.append(tok)
        elif rel in _CLAUSE_RELS:
            preds.append(tok)
        elif rel == "conj" and posclass(tokens[tok.head - 1].upos) == "verb":
            preds.append(tok)
    return preds


def build_graph(doc: Document, cfg: GraphConfig | None = None) -> TextGraph:
    """Build the text graph: redirected dependency edges plus recommend links."""
    if not doc.sentences:
        raise EmptyDocument("cannot build a graph from an empty document")
    cfg = cfg or GraphConfig()
    g = TextGraph()

    for sent in doc.sentences:
        tokens = sent.tokens
        # (a) redirected lemma-to-lemma edges, one per dependency arc
        for tok in tokens:
            if tok.head == 0:
                continue
            head = tokens[tok.head - 1]
            if _is_punct(tok) or _is_punct(head):
                continue
            directive = arc_directive(tok.deprel, posclass(head.upos), posclass(tok.upos))
            if directive is Directive.DROP:
                continue
            head_node, dep_node = lemma_node_of(head), lemma_node_of(tok)
            if directive is Directive.TO_DEPENDENT:
                src_node, dst_node = head_node, dep_node
                src_tok, dst_tok = head, tok
            else:
                src_node, dst_node = dep_node, head_node
                src_tok, dst_tok = tok, head
            g.add_edge(src_node, dst_node, cfg.w_dep)
            g.provenance.append(
                EdgeRecord(
                    sid=sent.sid,
                    from_lemma=src_node.lemma,
                    from_tag=src_tok.upos,
                    label=base_deprel(tok.deprel),
                    to_lemma=dst_node.lemma,
                    to_tag=dst_tok.upos,
                )
            )
        # (b) content words recommend their sentence
        snode = SentNode(sent.sid)
        g.add_node(snode)
        for tok in tokens:
            if _is_punct(tok) or posclass(tok.upos) == "other":
                continue
            g.add_edge(lemma_node_of(tok), snode, cfg.w_ws)
        # (c) the sentence recommends its predicate verbs
        for verb in _predicate_verbs(tokens):
            g.add_edge(snode, lemma_node_of(verb), cfg.w_sv)

    for node in g.nodes():
        if isinstance(node, LemmaNode):
            g.node_map[node] = node
    return g


def dep_records(doc: Document) -> list[DepRecord]:
    """One record per original dependency arc (root arcs have no source word)."""
    records: list[DepRecord] = []
    for sent in doc.sentences:
        for tok in sent.tokens:
            if tok.head == 0:
                continue
            head = sent.tokens[tok.head - 1]
            records.append(
                DepRecord(
                    sid=sent.sid,
                    word_from=head.form,
                    from_tag=head.upos,
                    label=tok.deprel,
                    word_to=tok.form,
                    to_tag=tok.upos,
                )
            )
    return records
