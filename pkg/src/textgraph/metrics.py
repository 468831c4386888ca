"""Scoring of extracted keyphrases and summaries against gold references.

All metrics stem and lowercase first. prf_words works on stemmed word SETS
flattened from phrase lists; rouge1 is clipped unigram overlap; rougeL uses
the longest common subsequence.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .porter import stem

_WORD_RE = re.compile(r"[a-z0-9]+")


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f1: float


def _prf_counts(overlap: int | float, pred_size: int, gold_size: int) -> PRF:
    # f1 = 2pr/(p+r) reduces to 2*overlap/(pred+gold), which keeps simple
    # fractions exact in floating point
    p = overlap / pred_size if pred_size else 0.0
    r = overlap / gold_size if gold_size else 0.0
    f1 = 2 * overlap / (pred_size + gold_size) if (pred_size + gold_size) else 0.0
    return PRF(p, r, f1)


def phrase_words(phrase: str) -> list[str]:
    return _WORD_RE.findall(phrase.lower())


def prf_words(predicted: list[str], gold: list[str]) -> PRF:
    """Set precision/recall/F1 over stemmed words flattened from both phrase lists."""
    pred_set = {stem(w) for p in predicted for w in phrase_words(p)}
    gold_set = {stem(w) for p in gold for w in phrase_words(p)}
    overlap = len(pred_set & gold_set)
    return _prf_counts(overlap, len(pred_set), len(gold_set))


def _stems(words: list[str]) -> list[str]:
    return [stem(w.lower()) for w in words]


def rouge1(candidate: list[str], reference: list[str]) -> PRF:
    """Clipped unigram overlap after stemming and lowercasing."""
    cand, ref = _stems(candidate), _stems(reference)
    cand_counts, ref_counts = Counter(cand), Counter(ref)
    overlap = sum(min(c, ref_counts[w]) for w, c in cand_counts.items())
    return _prf_counts(overlap, len(cand), len(ref))


def _lcs_len(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rougeL(candidate: list[str], reference: list[str]) -> PRF:
    """LCS-based precision/recall/F1 over stemmed tokens."""
    cand, ref = _stems(candidate), _stems(reference)
    lcs = _lcs_len(cand, ref)
    return _prf_counts(lcs, len(cand), len(ref))


def best_against_references(candidate: list[str], references: list[list[str]], metric) -> PRF:
    """Multi-reference score: the per-reference result with the highest F1."""
    best: PRF | None = None
    for ref in references:
        result = metric(candidate, ref)
        if best is None or result.f1 > best.f1:
            best = result
    return best if best is not None else PRF(0.0, 0.0, 0.0)
