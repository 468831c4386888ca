#!/usr/bin/env python3
"""Time digestion and query latency on a synthetic corpus of growing size."""

import argparse
import time

from textgraph import digest_text
from textgraph.synthetic import synthetic_conllu


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[1000, 5000, 10000])
    parser.add_argument("--avg-tokens", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for n in args.sizes:
        text = synthetic_conllu(n, args.avg_tokens, args.seed)
        started = time.perf_counter()
        digested = digest_text(text)
        digest_s = time.perf_counter() - started

        started = time.perf_counter()
        digested.ask("what happens under the biggest hubs")
        query_s = time.perf_counter() - started

        stats = digested.handle.stats
        print(
            f"n={n:>6}  digest={digest_s:7.2f}s  query={query_s * 1000:7.1f}ms  "
            f"nodes={stats.node_count:>6}  edges={stats.edge_count:>7}"
        )


if __name__ == "__main__":
    main()
