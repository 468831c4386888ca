"""Deterministic synthetic CoNLL-U corpus generator for scale and load testing."""

from __future__ import annotations

import random

_SYLLABLES = (
    "ba be bi bo bu da de di do du ga ge gi go gu ka ke ki ko ku "
    "la le li lo lu ma me mi mo mu na ne ni no nu pa pe pi po pu "
    "ra re ri ro ru sa se si so su ta te ti to tu va ve vi vo vu"
).split()

_DETS = ("the", "a")
_PREPS = ("of", "in", "for", "with", "under")


def _make_word(rng: random.Random, syllables: int) -> str:
    return "".join(rng.choice(_SYLLABLES) for _ in range(syllables))


def _make_vocab(rng: random.Random, count: int, syllables: int) -> list[str]:
    vocab: list[str] = []
    seen: set[str] = set()
    while len(vocab) < count:
        word = _make_word(rng, syllables)
        if word not in seen:
            seen.add(word)
            vocab.append(word)
    return vocab


def _zipf_pick(rng: random.Random, vocab: list[str]) -> str:
    # low indices dominate, giving the graph hub lemmas like a real document
    r = rng.random()
    idx = int(len(vocab) * (r**2.2))
    return vocab[min(idx, len(vocab) - 1)]


class _SentenceBuilder:
    def __init__(self) -> None:
        self.rows: list[tuple[str, str, str, int, str]] = []

    def add(self, form: str, upos: str, head: int, deprel: str, lemma: str | None = None) -> int:
        self.rows.append((form, lemma if lemma is not None else form, upos, head, deprel))
        return len(self.rows)

    def reattach(self, at: int, head: int) -> None:
        form, lemma, upos, _, deprel = self.rows[at - 1]
        self.rows[at - 1] = (form, lemma, upos, head, deprel)

    def lines(self) -> list[str]:
        return [
            f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_"
            for i, (form, lemma, upos, head, deprel) in enumerate(self.rows, start=1)
        ]


def synthetic_conllu(n_sentences: int = 10000, avg_tokens: int = 20, seed: int = 0) -> str:
    """Generate a valid CoNLL-U document with roughly avg_tokens tokens per sentence."""
    rng = random.Random(seed)
    nouns = _make_vocab(rng, 1200, 3)
    verbs = _make_vocab(rng, 400, 2)
    adjs = _make_vocab(rng, 300, 4)

    # the fixed skeleton averages ~8 tokens; each prepositional phrase adds ~3.7
    extra_pp = max(0, round((avg_tokens - 10) / 3.7))

    blocks: list[str] = []
    for _ in range(n_sentences):
        b = _SentenceBuilder()

        def noun_phrase(head_attach: int, deprel: str) -> int:
            start = b.add(rng.choice(_DETS), "DET", 0, "det")
            for _ in range(rng.randrange(0, 2)):
                adj = _zipf_pick(rng, adjs)
                b.add(adj, "ADJ", 0, "amod")
            if rng.random() < 0.15:
                modifier = _zipf_pick(rng, nouns)
                b.add(modifier, "NOUN", 0, "compound")
            noun = _zipf_pick(rng, nouns)
            noun_at = b.add(noun, "NOUN", head_attach, deprel)
            for at in range(start, noun_at):
                b.reattach(at, noun_at)
            return noun_at

        def prep_phrase(attach: int, deprel: str) -> None:
            prep = rng.choice(_PREPS)
            case_at = b.add(prep, "ADP", 0, "case")
            pobj = noun_phrase(attach, deprel)
            b.reattach(case_at, pobj)

        subj = noun_phrase(0, "nsubj")
        verb = _zipf_pick(rng, verbs)
        verb_at = b.add(verb, "VERB", 0, "root")
        b.reattach(subj, verb_at)
        obj = noun_phrase(verb_at, "obj")
        for _ in range(rng.randrange(extra_pp, extra_pp + 2)):
            if rng.random() < 0.6:
                prep_phrase(obj, "nmod")
            else:
                prep_phrase(verb_at, "obl")
        if rng.random() < 0.2:
            conj_verb = _zipf_pick(rng, verbs)
            cc_at = b.add("and", "CCONJ", 0, "cc")
            conj_at = b.add(conj_verb, "VERB", verb_at, "conj")
            b.reattach(cc_at, conj_at)
            noun_phrase(conj_at, "obj")
        b.add(".", "PUNCT", verb_at, "punct")
        blocks.append("\n".join(b.lines()))

    return "\n\n".join(blocks) + "\n"
