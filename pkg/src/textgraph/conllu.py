"""CoNLL-U ingestion: turn dependency-parsed text into an immutable document model.

Input is CoNLL-U v2: blank-line-separated sentence blocks of 10 tab-separated
columns, ``#`` comment lines, multiword-token ranges (``3-4``) and empty nodes
(``5.1``) skipped. Only ID, FORM, LEMMA, UPOS, HEAD and DEPREL are consumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class CorpusError(ValueError):
    """Base class for ingestion failures."""


class MalformedLine(CorpusError):
    pass


class HeadOutOfRange(CorpusError):
    pass


class CyclicTree(CorpusError):
    """Raised when a sentence's head pointers do not form a single-rooted tree."""


class EmptyDocument(CorpusError):
    pass


@dataclass(frozen=True, slots=True)
class Token:
    index: int  # 1-based position within the sentence
    form: str
    lemma: str
    upos: str
    head: int  # 0 = sentence root
    deprel: str


@dataclass(frozen=True, slots=True)
class Sentence:
    sid: int  # 0-based document-wide ordinal
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def root(self) -> Token:
        return next(t for t in self.tokens if t.head == 0)

    @property
    def forms(self) -> list[str]:
        return [t.form for t in self.tokens]


@dataclass(frozen=True)
class Document:
    sentences: tuple[Sentence, ...]
    # surface form (as first seen) -> (lemma, upos); insertion order = document order
    word_lemma_map: dict[str, tuple[str, str]] = field(default_factory=dict)
    # case-folded form -> (lemma, upos), first seen wins independently of casing
    folded_map: dict[str, tuple[str, str]] = field(default_factory=dict)
    # lowercased lemma -> sids it occurs in
    lemma_occurrences: dict[str, set[int]] = field(default_factory=dict)

    def word_to_lemma(self, word: str) -> tuple[str, str] | None:
        """Case-insensitive surface-form lookup; None when the form never occurred."""
        return self.folded_map.get(word.lower())

    @property
    def lemmas(self) -> set[str]:
        return set(self.lemma_occurrences)


def base_deprel(deprel: str) -> str:
    """Strip the UD subtype suffix: ``nsubj:pass`` -> ``nsubj``."""
    colon = deprel.find(":")
    return deprel if colon < 0 else deprel[:colon]


def _parse_token_line(line: str, lineno: int) -> Token | None:
    cols = line.split("\t")
    if len(cols) != 10:
        raise MalformedLine(f"line {lineno}: expected 10 tab-separated columns, got {len(cols)}")
    tid = cols[0]
    if "-" in tid or "." in tid:
        # multiword-token range or empty node: not part of the basic tree
        return None
    try:
        index = int(tid)
    except ValueError:
        raise MalformedLine(f"line {lineno}: non-integer token id {tid!r}") from None
    if index < 1:
        raise MalformedLine(f"line {lineno}: token id must be >= 1, got {index}")
    form, lemma, upos = cols[1], cols[2], cols[3]
    if not form or not lemma:
        raise MalformedLine(f"line {lineno}: empty FORM or LEMMA column")
    try:
        head = int(cols[6])
    except ValueError:
        raise MalformedLine(f"line {lineno}: non-integer head {cols[6]!r}") from None
    if head < 0:
        raise HeadOutOfRange(f"line {lineno}: negative head {head}")
    return Token(index=index, form=form, lemma=lemma, upos=upos, head=head, deprel=cols[7])


def _validate_sentence(tokens: list[Token], sid: int, lineno: int) -> None:
    n = len(tokens)
    ids = [t.index for t in tokens]
    if ids != list(range(1, n + 1)):
        raise MalformedLine(f"sentence {sid} (near line {lineno}): token ids not contiguous 1..{n}")
    roots = [t for t in tokens if t.head == 0]
    for t in tokens:
        if t.head > n:
            raise HeadOutOfRange(
                f"sentence {sid} (near line {lineno}): token {t.index} has head {t.head} > {n}"
            )
        if t.head == t.index:
            raise CyclicTree(f"sentence {sid}: token {t.index} is its own head")
    if len(roots) != 1:
        raise CyclicTree(f"sentence {sid}: expected exactly one root, found {len(roots)}")
    # cycle check: chase head pointers; any walk longer than n tokens loops
    for t in tokens:
        cur, steps = t, 0
        while cur.head != 0:
            cur = tokens[cur.head - 1]
            steps += 1
            if steps > n:
                raise CyclicTree(f"sentence {sid}: head pointers contain a cycle")


def parse_conllu(text: str) -> Document:
    """Parse CoNLL-U text into a validated, immutable Document.

    Raises MalformedLine / HeadOutOfRange / CyclicTree on bad token lines and
    EmptyDocument when no sentence survives.
    """
    sentences: list[Sentence] = []
    block: list[Token] = []
    block_start = 1

    def close_block(lineno: int) -> None:
        nonlocal block
        if not block:
            return
        sid = len(sentences)
        _validate_sentence(block, sid, lineno)
        sentences.append(Sentence(sid=sid, tokens=tuple(block)))
        block = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            close_block(lineno)
            block_start = lineno + 1
            continue
        if line.startswith("#"):
            continue
        tok = _parse_token_line(line, lineno)
        if tok is not None:
            if not block:
                block_start = lineno
            block.append(tok)
    close_block(block_start + len(block))

    if not sentences:
        raise EmptyDocument("no sentences found in input")

    word_lemma_map: dict[str, tuple[str, str]] = {}
    folded: dict[str, tuple[str, str]] = {}
    occurrences: dict[str, set[int]] = {}
    for sent in sentences:
        for t in sent.tokens:
            entry = (t.lemma, t.upos)
            word_lemma_map.setdefault(t.form, entry)
            folded.setdefault(t.form.lower(), entry)
            occurrences.setdefault(t.lemma.lower(), set()).add(sent.sid)

    return Document(
        sentences=tuple(sentences),
        word_lemma_map=word_lemma_map,
        folded_map=folded,
        lemma_occurrences=occurrences,
    )


def load_conllu(path: str) -> Document:
    with open(path, encoding="utf-8") as f:
        return parse_conllu(f.read())
