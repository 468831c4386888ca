import pytest

from textgraph import (
    Keyphrase,
    LemmaNode,
    NoCandidates,
    RankVector,
    SentNode,
    build_graph,
    extract_keyphrases,
    extract_summary,
    fuse_compounds,
    parse_conllu,
    rank_document,
)
from textgraph.config import ExtractConfig
from textgraph.extract import phrase_score
from textgraph.rank import RankedDocument
from textgraph.porter import stem


def _rd_with_ranks(doc, g, scores):
    nodes = set(g.nodes())
    return RankedDocument(
        doc=doc,
        graph=g,
        ranks=RankVector(scores=scores),
        core=nodes,
        candidates=nodes,
        keyword_candidates=nodes,
        sentence_scores={},
        eligible_sids={s.sid for s in doc.sentences},
    )


NEW_YORK = (
    "1\tNew\tNew\tPROPN\t_\t_\t2\tcompound\t_\t_\n"
    "2\tYork\tYork\tPROPN\t_\t_\t3\tnsubj\t_\t_\n"
    "3\tgrows\tgrow\tVERB\t_\t_\t0\troot\t_\t_\n"
)


def test_fuse_single_compound():
    doc = parse_conllu(NEW_YORK)
    g = fuse_compounds(doc, build_graph(doc))
    fused = LemmaNode("new york", "noun")
    assert fused in g
    assert LemmaNode("new", "noun") not in g
    assert LemmaNode("york", "noun") not in g
    assert g.weight(LemmaNode("grow", "verb"), fused) == 1.0
    assert g.weight(fused, SentNode(0)) == 2.0  # both members recommended the sentence
    assert g.resolve(LemmaNode("york", "noun")) == fused
    assert g.fused_occurrences[fused] == [(0, (1, 2))]


def test_fuse_drops_only_intra_group_records():
    doc = parse_conllu(NEW_YORK)
    g = fuse_compounds(doc, build_graph(doc))
    labels = [rec.label for rec in g.provenance]
    assert "compound" not in labels  # consumed by the fusion
    nsubj = [rec for rec in g.provenance if rec.label == "nsubj"]
    assert nsubj and nsubj[0].to_lemma == "new york"


def test_fuse_chain_orders_by_token_index():
    text = (
        "1\tapple\tapple\tNOUN\t_\t_\t2\tcompound\t_\t_\n"
        "2\ttree\ttree\tNOUN\t_\t_\t3\tcompound\t_\t_\n"
        "3\tfarm\tfarm\tNOUN\t_\t_\t4\tnsubj\t_\t_\n"
        "4\tthrives\tthrive\tVERB\t_\t_\t0\troot\t_\t_\n"
    )
    doc = parse_conllu(text)
    g = fuse_compounds(doc, build_graph(doc))
    assert LemmaNode("apple tree farm", "noun") in g


CATS = (
    "1\tcats\tcat\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
    "2\tsleep\tsleep\tVERB\t_\t_\t0\troot\t_\t_\n"
)


def test_fuse_without_compounds_is_identity():
    doc = parse_conllu(CATS)
    g = build_graph(doc)
    fused = fuse_compounds(doc, g)
    assert fused.nodes() == g.nodes()
    assert list(fused.edges()) == list(g.edges())


def test_phrase_score_hand_case():
    assert phrase_score(0.10, [0.04], w_head=0.7) == pytest.approx(0.082)
    assert phrase_score(0.10, [], w_head=0.7) == 0.10


OLD_TOWN = (
    "1\told\told\tADJ\t_\t_\t2\tamod\t_\t_\n"
    "2\ttown\ttown\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
    "3\tgrows\tgrow\tVERB\t_\t_\t0\troot\t_\t_\n"
)


def _old_town_rd(adj_rank):
    doc = parse_conllu(OLD_TOWN)
    g = build_graph(doc)
    scores = {
        LemmaNode("town", "noun"): 0.10,
        LemmaNode("old", "adj"): adj_rank,
        LemmaNode("grow", "verb"): 0.05,
        SentNode(0): 0.2,
    }
    return _rd_with_ranks(doc, g, scores)


def test_keyphrase_context_scoring():
    rd = _old_town_rd(adj_rank=0.04)
    [phrase] = extract_keyphrases(rd, 1)
    assert phrase == Keyphrase(
        head_lemma="town", context=("old",), score=pytest.approx(0.082), surface="old town"
    )


def test_keyphrase_context_below_threshold_excluded():
    rd = _old_town_rd(adj_rank=0.019)  # below tau * 0.10 = 0.02
    [phrase] = extract_keyphrases(rd, 1)
    assert phrase.context == ()
    assert phrase.score == pytest.approx(0.10)
    assert phrase.surface == "town"


def test_keyphrase_context_threshold_boundary_included():
    # head 0.5 makes tau * rank(head) exactly representable as float(0.1)
    doc = parse_conllu(OLD_TOWN)
    g = build_graph(doc)
    scores = {
        LemmaNode("town", "noun"): 0.5,
        LemmaNode("old", "adj"): 0.1,
        LemmaNode("grow", "verb"): 0.05,
        SentNode(0): 0.2,
    }
    rd = _rd_with_ranks(doc, g, scores)
    [phrase] = extract_keyphrases(rd, 1)
    assert phrase.context == ("old",)


def test_keyphrase_bare_head_when_no_noun_context():
    doc = parse_conllu(CATS)
    g = build_graph(doc)
    rd = rank_document(doc, g)
    [phrase] = extract_keyphrases(rd, 1)
    assert phrase.head_lemma == "cat"
    assert phrase.context == ()
    assert phrase.score == rd.rank_of(LemmaNode("cat", "noun"))


def test_no_candidates_without_nouns():
    text = (
        "1\trun\trun\tVERB\t_\t_\t0\troot\t_\t_\n"
        "2\tfast\tfast\tADV\t_\t_\t1\tadvmod\t_\t_\n"
    )
    doc = parse_conllu(text)
    rd = rank_document(doc, build_graph(doc))
    with pytest.raises(NoCandidates):
        extract_keyphrases(rd, 3)


def test_keyphrase_dedup_by_stem_multiset():
    text = (
        "1\tlegislatures\tlegislature\tNOUN\t_\t_\t4\tnsubj\t_\t_\n"
        "2\tof\tof\tADP\t_\t_\t3\tcase\t_\t_\n"
        "3\tstates\tstate\tNOUN\t_\t_\t1\tnmod\t_\t_\n"
        "4\tmeet\tmeet\tVERB\t_\t_\t0\troot\t_\t_\n"
        "\n"
        "1\tstate\tstate\tNOUN\t_\t_\t2\tcompound\t_\t_\n"
        "2\tlegislatures\tlegislature\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
        "3\tconvene\tconvene\tVERB\t_\t_\t0\troot\t_\t_\n"
    )
    doc = parse_conllu(text)
    g = build_graph(doc)  # no fusion: keep both nouns as separate candidates
    scores = {n: 0.1 for n in g.nodes()}
    rd = _rd_with_ranks(doc, g, scores)
    phrases = extract_keyphrases(rd, 5)
    keys = [tuple(sorted(stem(w) for w in p.surface.split())) for p in phrases]
    assert len(keys) == len(set(keys))
    assert ("legislatur", "state") in keys


def test_overfused_head_skipped():
    # a five-token compound chain fuses into one node too wide for a keyphrase
    rows = []
    for i, w in enumerate(["alpha", "beta", "gamma", "delta", "epsilon"], start=1):
        rows.append(f"{i}\t{w}\t{w}\tNOUN\t_\t_\t{i + 1}\t{'compound' if i < 5 else 'nsubj'}\t_\t_")
    rows[4] = "5\tepsilon\tepsilon\tNOUN\t_\t_\t6\tnsubj\t_\t_"
    rows.append("6\truns\trun\tVERB\t_\t_\t0\troot\t_\t_")
    rows.append("7\tdog\tdog\tNOUN\t_\t_\t6\tobj\t_\t_")
    doc = parse_conllu("\n".join(rows) + "\n")
    g = fuse_compounds(doc, build_graph(doc))
    assert LemmaNode("alpha beta gamma delta epsilon", "noun") in g
    rd = rank_document(doc, g)
    phrases = extract_keyphrases(rd, 10)
    assert all(len(p.surface.split()) <= 4 for p in phrases)
    assert any(p.head_lemma == "dog" for p in phrases)


def test_keyphrase_total_words_capped_at_four(digested):
    for phrase in digested.keyphrases(10):
        assert 1 <= len(phrase.surface.split()) <= 4
        assert len(phrase.context) <= 3


def test_keyphrase_scores_non_increasing(digested):
    phrases = digested.keyphrases(10)
    scores = [p.score for p in phrases]
    assert scores == sorted(scores, reverse=True)


def test_keyphrase_prefix_stability(digested):
    shorter = digested.keyphrases(5)
    longer = digested.keyphrases(6)
    assert longer[:5] == shorter


def _phrase_realizable(doc, words):
    """Some sentence contains the words in order at dependency-connected positions."""
    for sent in doc.sentences:
        forms = [t.form for t in sent.tokens]
        positions = [
            [i + 1 for i, f in enumerate(forms) if f == w] for w in words
        ]
        if any(not p for p in positions):
            continue
        arcs = {
            frozenset((t.index, t.head)) for t in sent.tokens if t.head != 0
        }

        def connected(chosen):
            if len(chosen) == 1:
                return True
            remaining = set(chosen)
            frontier = [chosen[0]]
            remaining.discard(chosen[0])
            while frontier:
                cur = frontier.pop()
                for other in list(remaining):
                    if frozenset((cur, other)) in arcs:
                        remaining.discard(other)
                        frontier.append(other)
            return not remaining

        def search(level, prev, chosen):
            if level == len(positions):
                return connected(chosen)
            return any(
                search(level + 1, pos, chosen + [pos])
                for pos in positions[level]
                if pos > prev
            )

        if search(0, 0, []):
            return True
    return False


def test_keyphrase_words_cooccur_and_connect(digested):
    for phrase in digested.keyphrases(10):
        assert _phrase_realizable(digested.doc, phrase.surface.split())


def test_summary_strictly_ascending(digested):
    items = digested.summary(9)
    sids = [item.sid for item in items]
    assert sids == sorted(set(sids))


def test_summary_all_sentences_when_k_large():
    doc = parse_conllu(CATS)
    rd = rank_document(doc, build_graph(doc))
    items = extract_summary(rd, 50)
    assert [item.sid for item in items] == [0]
    assert items[0].words == ("cats", "sleep")


def test_summary_tie_breaks_to_lower_sid():
    doc = parse_conllu(CATS + "\n" + CATS)
    rd = rank_document(doc, build_graph(doc))
    [item] = extract_summary(rd, 1)
    assert item.sid == 0


def test_summary_respects_eligibility(digested):
    items = digested.summary(9)
    assert {item.sid for item in items} <= digested.rd.eligible_sids


def test_summary_prefix_stability(digested):
    shorter = {item.sid for item in digested.summary(4)}
    longer = {item.sid for item in digested.summary(5)}
    assert shorter <= longer


def test_summary_words_match_sentence(digested):
    for item in digested.summary(9):
        assert list(item.words) == digested.doc.sentences[item.sid].forms
