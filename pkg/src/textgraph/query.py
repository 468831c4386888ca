"""Interactive query answering: lexical expansion plus rank-weighted overlap.

A session pins one digested document. Queries are tokenized, mapped to
document lemmas (direct, then by stem, then kept as-is), expanded through the
lexical KB, and matched against sentences; the top three sentences by summed
lemma rank come back in document order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import QueryConfig
from .conllu import Document
from .graph import LemmaNode
from .porter import stem
from .rank import RankedDocument
from .relations import LexicalKB
from .stopwords import STOPWORDS

_POSCLASSES = ("noun", "verb", "adj", "other")


class EmptyQuery(ValueError):
    pass


@dataclass(frozen=True)
class AnswerItem:
    sid: int
    words: tuple[str, ...]
    score: float

    @property
    def text(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class Answer:
    items: tuple[AnswerItem, ...]  # at most 3, ascending sid
    expanded_lemmas: frozenset[str]


@dataclass
class Session:
    doc: Document
    rd: RankedDocument
    kb: LexicalKB = field(default_factory=LexicalKB)
    config: QueryConfig = field(default_factory=QueryConfig)
    history: list[tuple[str, Answer]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._lemma_rank: dict[str, float] = {}
        for lemma in self.doc.lemma_occurrences:
            total = 0.0
            for pc in _POSCLASSES:
                node = self.rd.graph.resolve(LemmaNode(lemma, pc))
                if node is not None:
                    total += self.rd.rank_of(node)
            self._lemma_rank[lemma] = total
        self._stem_index: dict[str, str] = {}
        for lemma in sorted(self.doc.lemma_occurrences):
            self._stem_index.setdefault(stem(lemma), lemma)

    def lemma_rank(self, lemma: str) -> float:
        return self._lemma_rank.get(lemma, 0.0)

    def match_lemma(self, token: str) -> str:
        """Map one query token to a document lemma, falling back to stems."""
        hit = self.doc.word_to_lemma(token)
        if hit is not None:
            return hit[0].lower()
        return self._stem_index.get(stem(token), token)


def _tokenize(text: str) -> list[str]:
    out: list[str] = []
    current: list[str] = []
    for ch in text.lower():
        if ch.isalnum():
            current.append(ch)
        elif current:
            out.append("".join(current))
            current = []
    if current:
        out.append("".join(current))
    return out


def lemmatize_query(session: Session, text: str) -> set[str]:
    """Lowercased alphanumeric tokens, stopwords removed, mapped onto lemmas."""
    tokens = _tokenize(text)
    if not tokens:
        raise EmptyQuery("query contains no words")
    return {session.match_lemma(t) for t in tokens if t not in STOPWORDS}


def expand_query(lemmas: set[str], kb: LexicalKB, doc: Document) -> set[str]:
    """Add every KB relative of each lemma that also occurs in the document."""
    doc_lemmas = doc.lemmas
    out = set(lemmas)
    for lemma in lemmas:
        for relation in ("hypernym", "hyponym", "meronym", "holonym"):
            out.update(kb.related(relation, lemma) & doc_lemmas)
    return out


def answer(session: Session, text: str) -> Answer:
    """Up to 3 sentences sharing enough expanded lemmas, best-scored, in document order."""
    expanded = expand_query(lemmatize_query(session, text), session.kb, session.doc)
    scores: dict[int, float] = {}
    counts: dict[int, int] = {}
    for lemma in expanded:
        rank = session.lemma_rank(lemma)
        for sid in session.doc.lemma_occurrences.get(lemma, ()):
            counts[sid] = counts.get(sid, 0) + 1
            scores[sid] = scores.get(sid, 0.0) + rank
    eligible = [
        sid
        for sid, count in counts.items()
        if count >= session.config.min_overlap and scores[sid] > 0
    ]
    top = sorted(eligible, key=lambda sid: (-scores[sid], sid))[:3]
    items = tuple(
        AnswerItem(sid=sid, words=tuple(session.doc.sentences[sid].forms), score=scores[sid])
        for sid in sorted(top)
    )
    result = Answer(items=items, expanded_lemmas=frozenset(expanded))
    session.history.append((text, result))
    return result
