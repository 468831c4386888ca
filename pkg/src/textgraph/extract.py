"""Keyphrase synthesis and summary extraction over a ranked text graph.

Keyphrases grow from high-ranked nouns: compound/flat arcs are first fused
into multiword nodes, then each noun pulls up to three dependency-linked
context words whose own rank is high enough, scored by a weighted average
favoring the noun. Summaries are the top normalized-score sentences, emitted
in document order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import ExtractConfig
from .conllu import Document, base_deprel
from .graph import LemmaNode, NodeId, TextGraph, lemma_node_of, node_sort_key, posclass
from .porter import stem
from .rank import RankedDocument


class NoCandidates(ValueError):
    """Raised when the candidate set holds no noun nodes to grow phrases from."""


# arcs allowed to contribute context words to a noun phrase
CONTEXT_LABELS = frozenset({"amod", "compound", "flat", "nmod", "nummod"})
# arcs fused into single multiword nodes
FUSE_LABELS = frozenset({"compound", "flat"})


@dataclass(frozen=True)
class Keyphrase:
    head_lemma: str
    context: tuple[str, ...]  # 0-3 lemmas, surface order
    score: float
    surface: str  # forms in original word order within one sentence


@dataclass(frozen=True)
class SummaryItem:
    sid: int
    words: tuple[str, ...]

    @property
    def text(self) -> str:
        return " ".join(self.words)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def fuse_compounds(doc: Document, g: TextGraph) -> TextGraph:
    """Merge lemma nodes joined by compound/flat arcs into multiword nodes.

    Member lemmas join in first-occurrence (token) order; edge weights merge
    additively and self-loops created by the merge are discarded along with
    their provenance records.
    """
    uf = _UnionFind()
    token_groups: list[tuple[int, list[int]]] = []  # built after union pass
    sentence_unions: dict[int, _UnionFind] = {}

    for sent in doc.sentences:
        for tok in sent.tokens:
            if tok.head == 0 or base_deprel(tok.deprel) not in FUSE_LABELS:
                continue
            head = sent.tokens[tok.head - 1]
            dep_node, head_node = lemma_node_of(tok), lemma_node_of(head)
            if dep_node not in g or head_node not in g:
                continue
            uf.union(dep_node, head_node)
            local = sentence_unions.setdefault(sent.sid, _UnionFind())
            local.union(tok.index, head.index)

    groups: dict[NodeId, list[LemmaNode]] = {}
    for node in uf.parent:
        groups.setdefault(uf.find(node), []).append(node)
    groups = {root: members for root, members in groups.items() if len(members) > 1}
    if not groups:
        return g

    first_occurrence: dict[NodeId, tuple[int, int]] = {}
    for sent in doc.sentences:
        for tok in sent.tokens:
            first_occurrence.setdefault(lemma_node_of(tok), (sent.sid, tok.index))

    mapping: dict[NodeId, LemmaNode] = {}
    for members in groups.values():
        ordered = sorted(members, key=lambda n: first_occurrence.get(n, (1 << 30, 0)))
        fused = LemmaNode(
            lemma=" ".join(n.lemma for n in ordered),
            posclass=ordered[-1].posclass,
        )
        for member in ordered:
            mapping[member] = fused

    fused_graph = TextGraph()
    for node in g.nodes():
        fused_graph.add_node(mapping.get(node, node))
    for src, dst, w in g.edges():
        new_src = mapping.get(src, src)
        new_dst = mapping.get(dst, dst)
        if new_src == new_dst and src != dst:
            continue  # arc consumed by the fusion itself
        fused_graph.add_edge(new_src, new_dst, w)

    for rec in g.provenance:
        src_key = LemmaNode(rec.from_lemma, posclass(rec.from_tag))
        dst_key = LemmaNode(rec.to_lemma, posclass(rec.to_tag))
        new_src = mapping.get(src_key, src_key)
        new_dst = mapping.get(dst_key, dst_key)
        if new_src == new_dst and src_key != dst_key:
            continue
        fused_graph.provenance.append(
            type(rec)(
                sid=rec.sid,
                from_lemma=new_src.lemma,
                from_tag=rec.from_tag,
                label=rec.label,
                to_lemma=new_dst.lemma,
                to_tag=rec.to_tag,
            )
        )

    for orig, cur in g.node_map.items():
        fused_graph.node_map[orig] = mapping.get(cur, cur)

    for sid, local in sentence_unions.items():
        local_groups: dict[int, list[int]] = {}
        for idx in local.parent:
            local_groups.setdefault(local.find(idx), []).append(idx)
        tokens = doc.sentences[sid].tokens
        for indices in local_groups.values():
            if len(indices) < 2:
                continue
            node = mapping.get(lemma_node_of(tokens[indices[0] - 1]))
            if node is None:
                continue
            fused_graph.fused_occurrences.setdefault(node, []).append(
                (sid, tuple(sorted(indices)))
            )
    for occurrences in fused_graph.fused_occurrences.values():
        occurrences.sort()
    return fused_graph


def _occurrence_index(rd: RankedDocument) -> dict[NodeId, list[tuple[int, tuple[int, ...]]]]:
    """Node -> [(sid, member token indices)], fused nodes use their group spans."""
    occ: dict[NodeId, list[tuple[int, tuple[int, ...]]]] = {
        node: list(spans) for node, spans in rd.graph.fused_occurrences.items()
    }
    fused = set(rd.graph.fused_occurrences)
    for sent in rd.doc.sentences:
        for tok in sent.tokens:
            node = rd.graph.resolve(lemma_node_of(tok))
            if node is None or node in fused:
                continue
            occ.setdefault(node, []).append((sent.sid, (tok.index,)))
    return occ


def phrase_score(head_rank: float, context_ranks: list[float], w_head: float) -> float:
    """Weighted average favoring the noun; an empty context scores as the head alone."""
    if not context_ranks:
        return head_rank
    return w_head * head_rank + (1.0 - w_head) * (sum(context_ranks) / len(context_ranks))


def _best_phrase(
    rd: RankedDocument,
    cand: LemmaNode,
    spans: list[tuple[int, tuple[int, ...]]],
    cfg: ExtractConfig,
) -> Keyphrase | None:
    head_rank = rd.rank_of(cand)
    head_words = len(cand.lemma.split())
    max_ctx = min(3, 4 - head_words)
    best_key: tuple[float, int, int] | None = None
    best_phrase: Keyphrase | None = None

    for sid, indices in spans:
        tokens = rd.doc.sentences[sid].tokens
        member = set(indices)
        found: dict[int, tuple[int, int, float]] = {}  # token index -> (dist, idx, rank)

        def consider(neighbor, anchor) -> None:
            if neighbor.index in member:
                return
            node = rd.graph.resolve(lemma_node_of(neighbor))
            if node is None or node == cand:
                return
            r = rd.rank_of(node)
            if r < cfg.tau * head_rank:
                return
            dist = abs(neighbor.index - anchor.index)
            prev = found.get(neighbor.index)
            if prev is None or dist < prev[0]:
                found[neighbor.index] = (dist, neighbor.index, r)

        for tok in tokens:
            rel = base_deprel(tok.deprel)
            if rel not in CONTEXT_LABELS:
                continue
            if tok.index in member and tok.head != 0:
                consider(tokens[tok.head - 1], tok)
            elif tok.head in member:
                consider(tok, tokens[tok.head - 1])

        chosen = sorted(found.values())[: max(0, max_ctx)]
        context_ranks = [r for _, _, r in chosen]
        score = phrase_score(head_rank, context_ranks, cfg.w_head)
        phrase_indices = sorted(member | {idx for _, idx, _ in chosen})
        surface = " ".join(tokens[i - 1].form for i in phrase_indices)
        context = tuple(
            tokens[i - 1].lemma.lower()
            for i in sorted(idx for _, idx, _ in chosen)
        )
        key = (-score, sid, min(indices))
        if best_key is None or key < best_key:
            best_key = key
            best_phrase = Keyphrase(cand.lemma, context, score, surface)
    return best_phrase


def extract_keyphrases(
    rd: RankedDocument, k: int, cfg: ExtractConfig | None = None
) -> list[Keyphrase]:
    """Top-k keyphrases grown from the highest ranked noun nodes."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cfg = cfg or ExtractConfig()
    nouns = [
        n
        for n in rd.keyword_candidates
        if isinstance(n, LemmaNode) and n.posclass == "noun"
    ]
    if not nouns:
        raise NoCandidates("no noun nodes among ranking candidates")
    nouns.sort(key=lambda n: (-rd.rank_of(n), node_sort_key(n)))

    occ = _occurrence_index(rd)
    phrases: list[tuple[float, tuple, Keyphrase]] = []
    for cand in nouns:
        if len(cand.lemma.split()) > 4:
            continue  # an over-fused head cannot fit the 4-word phrase window
        spans = occ.get(cand)
        if not spans:
            continue
        phrase = _best_phrase(rd, cand, spans, cfg)
        if phrase is not None:
            phrases.append((-phrase.score, node_sort_key(cand), phrase))
    phrases.sort(key=lambda item: (item[0], item[1]))

    seen: set[tuple[str, ...]] = set()
    result: list[Keyphrase] = []
    for _, _, phrase in phrases:
        dedup_key = tuple(sorted(stem(w) for w in phrase.surface.split()))
        if dedup_key in seen:
            continue
        seen.add(dedup_key)
        result.append(phrase)
        if len(result) == k:
            break
    return result


def extract_summary(rd: RankedDocument, k: int) -> list[SummaryItem]:
    """Top-k sentences by normalized score among eligible sids, in document order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    chosen = sorted(
        rd.eligible_sids, key=lambda sid: (-rd.sentence_scores.get(sid, 0.0), sid)
    )[:k]
    return [
        SummaryItem(sid=sid, words=tuple(rd.doc.sentences[sid].forms))
        for sid in sorted(chosen)
    ]
