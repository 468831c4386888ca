"""Command-line driver: digest, ask, facts, graph, eval, serve."""

from __future__ import annotations

import argparse
import os
import sys

from .config import PipelineConfig
from .conllu import CorpusError
from .metrics import prf_words, rouge1, rougeL
from .pipeline import digest_file, export_graph
from .query import EmptyQuery
from .relations import LexicalKB, load_kb


def _load_config(path: str | None) -> PipelineConfig:
    return PipelineConfig.from_file(path) if path else PipelineConfig()


def _load_kb_arg(path: str | None) -> LexicalKB:
    return load_kb(path) if path else LexicalKB()


def _digest(args) -> int:
    cfg = _load_config(args.config)
    digested = digest_file(args.file, cfg, _load_kb_arg(args.kb))
    stats = digested.handle.stats
    print(
        f"digested {args.file}: {stats.sentence_count} sentences, "
        f"{stats.node_count} nodes, {stats.edge_count} edges "
        f"in {stats.digest_ms:.0f} ms"
    )
    print("\nsummary:")
    for item in digested.summary(args.summary):
        print(f"  {item.sid}: {item.text}")
    print("\nkeyphrases:")
    for phrase in digested.keyphrases(args.keys):
        print(f"  {phrase.surface}  ({phrase.score:.6f})")
    return 0


def _print_answer(result) -> None:
    if not result.items:
        print("  (no relevant sentences)")
        return
    for item in result.items:
        print(f"  {item.sid}: {item.text}")


def _ask_remote(doc_id: str, url: str, queries) -> int:
    import httpx

    with httpx.Client(base_url=url, timeout=30.0) as client:
        for q in queries:
            resp = client.post(f"/documents/{doc_id}/ask", json={"q": q})
            if resp.status_code != 200:
                print(f"error {resp.status_code}: {resp.text}", file=sys.stderr)
                return 1
            items = resp.json()["items"]
            if not items:
                print("  (no relevant sentences)")
            for item in items:
                print(f"  {item['sid']}: {item['text']}")
    return 0


def _interactive_queries():
    print("enter a query (blank line to exit):")
    while True:
        try:
            line = input("? ").strip()
        except EOFError:
            return
        if not line:
            return
        yield line


def _ask(args) -> int:
    queries = [args.q] if args.q else _interactive_queries()
    if os.path.isfile(args.target):
        digested = digest_file(args.target, _load_config(args.config), _load_kb_arg(args.kb))
        for q in queries:
            try:
                _print_answer(digested.ask(q))
            except EmptyQuery:
                print("  (empty query)")
        return 0
    return _ask_remote(args.target, args.url, queries)


def _facts(args) -> int:
    digested = digest_file(args.file, _load_config(args.config), _load_kb_arg(args.kb))
    with open(args.output, "wb") as sink:
        sink.write(digested.facts())
    print(f"wrote {args.output}")
    return 0


def _graph(args) -> int:
    digested = digest_file(args.file, _load_config(args.config))
    dot = export_graph(digested.rd, args.top)
    with open(args.output, "w", encoding="utf-8", newline="\n") as f:
        f.write(dot)
    print(f"wrote {args.output}")
    return 0


def _read_phrases(path: str) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.strip() for line in f if line.strip()]


def _read_words(path: str) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return f.read().split()


def _eval(args) -> int:
    if args.metric == "prf":
        result = prf_words(_read_phrases(args.pred), _read_phrases(args.gold))
    else:
        metric = rouge1 if args.metric == "rouge1" else rougeL
        result = metric(_read_words(args.pred), _read_words(args.gold))
    print(f"precision={result.precision:.4f} recall={result.recall:.4f} f1={result.f1:.4f}")
    return 0


def _serve(args) -> int:
    from .server import serve

    serve(
        port=args.port,
        static_dir=args.static,
        host=args.host,
        config=_load_config(args.config),
        kb=_load_kb_arg(args.kb),
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textgraph",
        description="Rank dependency-parsed documents and extract summaries, "
        "keyphrases, relation facts and query answers.",
    )
    parser.add_argument("--config", help="flat key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digest", help="digest a CoNLL-U file and print summary + keyphrases")
    p.add_argument("file")
    p.add_argument("--summary", type=int, default=None, metavar="K")
    p.add_argument("--keys", type=int, default=None, metavar="K")
    p.add_argument("--kb", help="lexical KB file (tab-separated)")
    p.set_defaults(func=_digest)

    p = sub.add_parser("ask", help="query a document (local file or a served document id)")
    p.add_argument("target", help="CoNLL-U file path, or a document id on a running server")
    p.add_argument("-q", help="single query; omit for an interactive loop")
    p.add_argument("--kb", help="lexical KB file")
    p.add_argument("--url", default="http://127.0.0.1:8000", help="server base url for ids")
    p.set_defaults(func=_ask)

    p = sub.add_parser("facts", help="export the logic-fact database for a document")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--kb", help="lexical KB file")
    p.set_defaults(func=_facts)

    p = sub.add_parser("graph", help="export the top-ranked lemma subgraph as DOT")
    p.add_argument("file")
    p.add_argument("--top", type=int, default=25, metavar="N")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_graph)

    p = sub.add_parser("eval", help="score predictions against gold references")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--metric", choices=("prf", "rouge1", "rougel"), default="prf")
    p.set_defaults(func=_eval)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="directory of static UI files to serve at /")
    p.add_argument("--kb", help="lexical KB file")
    p.set_defaults(func=_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
