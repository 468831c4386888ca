import pytest

from textgraph import (
    EmptyQuery,
    LemmaNode,
    RankVector,
    Session,
    answer,
    build_graph,
    expand_query,
    lemmatize_query,
    parse_conllu,
)
from textgraph.config import QueryConfig
from textgraph.rank import RankedDocument
from textgraph.relations import LexicalKB


@pytest.fixture()
def session(digested, kb_path):
    from textgraph import load_kb

    return Session(doc=digested.doc, rd=digested.rd, kb=load_kb(str(kb_path)))


def test_lemmatize_removal_query(session):
    lemmas = lemmatize_query(session, "How can a President be removed from office?")
    assert {"president", "remove", "office"} <= lemmas


def test_lemmatize_empty_query(session):
    with pytest.raises(EmptyQuery):
        lemmatize_query(session, "")
    with pytest.raises(EmptyQuery):
        lemmatize_query(session, "?!  ...")


def test_lemmatize_stem_fallback(session):
    assert "president" in lemmatize_query(session, "presidents")


def test_lemmatize_unknown_token_kept(session):
    assert "zyzzyva" in lemmatize_query(session, "zyzzyva")


def test_lemmatize_stopwords_removed(session):
    lemmas = lemmatize_query(session, "the President of the United States")
    assert "the" not in lemmas
    assert "of" not in lemmas


def _tiny_doc(*lemmas):
    lines = []
    for i, lemma in enumerate(lemmas, start=1):
        head = 0 if i == 1 else 1
        rel = "root" if i == 1 else "conj"
        lines.append(f"{i}\t{lemma}\t{lemma}\tNOUN\t_\t_\t{head}\t{rel}\t_\t_")
    return parse_conllu("\n".join(lines) + "\n")


def test_expand_query_adds_present_relative():
    kb = LexicalKB()
    kb.add("hypernym", "dog", "animal")
    doc = _tiny_doc("dog", "animal")
    assert expand_query({"dog"}, kb, doc) == {"dog", "animal"}


def test_expand_query_skips_absent_relative():
    kb = LexicalKB()
    kb.add("hypernym", "dog", "animal")
    doc = _tiny_doc("dog")
    assert expand_query({"dog"}, kb, doc) == {"dog"}


def test_expand_query_empty_kb_is_identity():
    doc = _tiny_doc("dog")
    assert expand_query({"dog", "unseen"}, LexicalKB(), doc) == {"dog", "unseen"}


def _marker_session():
    """Ten sentences; markers alpha/beta/gamma live in sids 9/2/7."""
    markers = {2: "beta", 7: "gamma", 9: "alpha"}
    blocks = []
    for sid in range(10):
        noun = markers.get(sid, f"filler{sid}")
        blocks.append(
            f"1\t{noun}\t{noun}\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
            f"2\thappens\thappen\tVERB\t_\t_\t0\troot\t_\t_"
        )
    doc = parse_conllu("\n\n".join(blocks) + "\n")
    g = build_graph(doc)
    scores = {n: 0.001 for n in g.nodes()}
    scores[LemmaNode("alpha", "noun")] = 0.5
    scores[LemmaNode("beta", "noun")] = 0.4
    scores[LemmaNode("gamma", "noun")] = 0.3
    nodes = set(g.nodes())
    rd = RankedDocument(
        doc=doc,
        graph=g,
        ranks=RankVector(scores=scores),
        core=nodes,
        candidates=nodes,
        keyword_candidates=nodes,
        sentence_scores={},
        eligible_sids=set(range(10)),
    )
    return Session(doc=doc, rd=rd)


def test_answer_orders_by_sid_not_score():
    session = _marker_session()
    result = answer(session, "alpha beta gamma")
    assert [item.sid for item in result.items] == [2, 7, 9]
    by_sid = {item.sid: item.score for item in result.items}
    assert by_sid[9] == pytest.approx(0.5)
    assert by_sid[2] == pytest.approx(0.4)
    assert by_sid[7] == pytest.approx(0.3)


def test_answer_keeps_top_three_by_score():
    session = _marker_session()
    # every sentence shares "happen"; the three markers outrank the fillers
    result = answer(session, "alpha beta gamma happens")
    assert len(result.items) == 3
    assert [item.sid for item in result.items] == [2, 7, 9]


def test_answer_no_overlap_is_empty(session):
    result = answer(session, "zyzzyva qwerty")
    assert result.items == ()


def test_answer_stopword_only_query_is_empty(session):
    result = answer(session, "the of and")
    assert result.items == ()


def test_answer_finds_impeachment_sentence(session):
    result = answer(session, "How can a President be removed from office?")
    texts = {item.sid: item.text for item in result.items}
    assert 7 in texts
    assert "impeachment" in texts[7]


def test_answer_respects_min_overlap(digested, kb_path):
    from textgraph import load_kb

    strict = Session(
        doc=digested.doc,
        rd=digested.rd,
        kb=load_kb(str(kb_path)),
        config=QueryConfig(min_overlap=2),
    )
    result = answer(strict, "ballot")  # expands to nothing else
    assert result.items == ()  # one shared lemma is no longer enough


def test_answer_repeatable(session):
    first = answer(session, "Who appoints the electors?")
    second = answer(session, "Who appoints the electors?")
    assert first.items == second.items
    assert first.expanded_lemmas == second.expanded_lemmas


def test_answer_appends_history(session):
    start = len(session.history)
    answer(session, "taxes")
    answer(session, "amendments")
    assert len(session.history) == start + 2
    assert session.history[-1][0] == "amendments"


def test_answer_window_never_exceeds_three(session):
    for q in ("Congress", "the United States", "power of the Senate", "person"):
        result = answer(session, q)
        sids = [item.sid for item in result.items]
        assert len(sids) <= 3
        assert sids == sorted(sids)
        assert len(set(sids)) == len(sids)


def test_expansion_hits_document_lemmas_only(session):
    result = answer(session, "what crimes lead to removal")
    assert result.expanded_lemmas <= (session.doc.lemmas | set(result.expanded_lemmas))
    # treason is pulled in via the hyponym table and occurs in the document
    assert "treason" in result.expanded_lemmas
