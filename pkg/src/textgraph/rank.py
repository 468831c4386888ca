"""Weighted PageRank over the text graph, largest-SCC focusing, sentence normalization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .config import RankConfig
from .conllu import Document
from .graph import EmptyGraph, LemmaNode, NodeId, SentNode, TextGraph, node_sort_key


@dataclass
class RankVector:
    scores: dict[NodeId, float]
    converged: bool = True


def pagerank(
    g: TextGraph,
    damping: float = 0.85,
    tol: float = 1e-6,
    max_iter: int = 100,
) -> RankVector:
    """Power iteration on the weighted transition matrix.

    Transition probability u -> v is weight(u,v) / total out-weight of u;
    dangling nodes spread their mass uniformly. Stops when the L1 change drops
    below tol; running out of iterations is flagged, not fatal.
    """
    nodes = g.nodes()
    n = len(nodes)
    if n == 0:
        raise EmptyGraph("pagerank needs a non-empty graph")
    if not 0 < damping < 1:
        raise ValueError(f"damping must be in (0, 1), got {damping}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")

    index = {node: i for i, node in enumerate(nodes)}
    rows, cols, vals = [], [], []
    dangling = np.ones(n, dtype=bool)
    for u in nodes:
        targets = g.successors(u)
        if not targets:
            continue
        ui = index[u]
        dangling[ui] = False
        total = sum(targets.values())
        for v, w in targets.items():
            rows.append(index[v])
            cols.append(ui)
            vals.append(w / total)
    matrix = sparse.csr_matrix((vals, (rows, cols)), shape=(n, n))

    x = np.full(n, 1.0 / n)
    teleport = (1.0 - damping) / n
    converged = False
    for _ in range(max_iter):
        dangling_mass = float(x[dangling].sum())
        x_new = damping * (matrix @ x + dangling_mass / n) + teleport
        delta = float(np.abs(x_new - x).sum())
        x = x_new
        if delta < tol:
            converged = True
            break
    x = x / x.sum()
    return RankVector(scores={node: float(x[index[node]]) for node in nodes}, converged=converged)


def largest_scc(g: TextGraph) -> set[NodeId]:
    """Largest strongly connected component; size ties go to the component
    holding the smallest node under the deterministic node ordering."""
    if len(g) == 0:
        raise EmptyGraph("largest_scc needs a non-empty graph")
    best: set[NodeId] | None = None
    best_key = None
    for scc in _tarjan(g):
        key = (-len(scc), min(node_sort_key(n) for n in scc))
        if best is None or key < best_key:
            best, best_key = scc, key
    assert best is not None
    return best


def _tarjan(g: TextGraph):
    """Iterative Tarjan so deep graphs cannot hit the recursion limit."""
    index_of: dict[NodeId, int] = {}
    lowlink: dict[NodeId, int] = {}
    on_stack: set[NodeId] = set()
    stack: list[NodeId] = []
    counter = 0

    for root in g.nodes():
        if root in index_of:
            continue
        work = [(root, iter(g.successors(root)))]
        index_of[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, successors = work[-1]
            advanced = False
            for nxt in successors:
                if nxt not in index_of:
                    index_of[nxt] = lowlink[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(g.successors(nxt))))
                    advanced = True
                    break
                if nxt in on_stack:
                    lowlink[node] = min(lowlink[node], index_of[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index_of[node]:
                component: set[NodeId] = set()
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.add(member)
                    if member == node:
                        break
                yield component


def normalize_sentence_rank(rank: float, sentence_length: int) -> float:
    """Length-normalized sentence score: rank / (1 + 2 * sentence_length)."""
    return rank / (1 + 2 * sentence_length)


@dataclass
class RankedDocument:
    doc: Document
    graph: TextGraph
    ranks: RankVector
    core: set[NodeId]
    candidates: set[NodeId]  # core when usable, otherwise every node
    keyword_candidates: set[NodeId]
    sentence_scores: dict[int, float] = field(default_factory=dict)
    eligible_sids: set[int] = field(default_factory=set)

    def rank_of(self, node: NodeId) -> float:
        return self.ranks.scores.get(node, 0.0)


def rank_document(doc: Document, g: TextGraph, cfg: RankConfig | None = None) -> RankedDocument:
    """Rank the graph and focus candidates on the largest SCC when it is usable.

    The core is used only when it has at least cfg.min_core_nodes members and
    contains at least one sentence node; otherwise the whole graph is eligible.
    """
    cfg = cfg or RankConfig()
    rv = pagerank(g, damping=cfg.damping, tol=cfg.tol, max_iter=cfg.max_iter)
    core = largest_scc(g)

    core_usable = len(core) >= cfg.min_core_nodes and any(
        isinstance(n, SentNode) for n in core
    )
    all_nodes = set(g.nodes())
    candidates = core if core_usable else all_nodes
    keyword_candidates = candidates if cfg.restrict_keywords_to_core else all_nodes

    sentence_scores: dict[int, float] = {}
    for node in g.nodes():
        if isinstance(node, SentNode):
            length = len(doc.sentences[node.sid].tokens)
            sentence_scores[node.sid] = normalize_sentence_rank(rv.scores[node], length)
    eligible = {n.sid for n in candidates if isinstance(n, SentNode)}

    return RankedDocument(
        doc=doc,
        graph=g,
        ranks=rv,
        core=core,
        candidates=candidates,
        keyword_candidates=keyword_candidates,
        sentence_scores=sentence_scores,
        eligible_sids=eligible,
    )
