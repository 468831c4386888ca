"""Ranked text graphs over dependency-parsed documents."""

from .config import (
    ExtractConfig,
    GraphConfig,
    PipelineConfig,
    QueryConfig,
    RankConfig,
    RelationConfig,
)
from .conllu import (
    CorpusError,
    CyclicTree,
    Document,
    EmptyDocument,
    HeadOutOfRange,
    MalformedLine,
    Sentence,
    Token,
    parse_conllu,
)
from .extract import (
    Keyphrase,
    NoCandidates,
    SummaryItem,
    extract_keyphrases,
    extract_summary,
    fuse_compounds,
)
from .graph import (
    DepRecord,
    Directive,
    EdgeRecord,
    EmptyGraph,
    LemmaNode,
    SentNode,
    TextGraph,
    arc_directive,
    build_graph,
    dep_records,
)
from .metrics import PRF, prf_words, rouge1, rougeL
from .pipeline import (
    DigestedDocument,
    DocHandle,
    DocumentStore,
    UnknownHandle,
    digest_file,
    digest_text,
    export_graph,
)
from .porter import stem
from .query import Answer, AnswerItem, EmptyQuery, Session, answer, expand_query, lemmatize_query
from .rank import (
    RankedDocument,
    RankVector,
    largest_scc,
    normalize_sentence_rank,
    pagerank,
    rank_document,
)
from .relations import (
    LexicalKB,
    MalformedKBLine,
    RelationTriple,
    export_facts,
    extract_svo,
    facts_bytes,
    kb_relations,
    load_kb,
)

__version__ = "0.1.0"
