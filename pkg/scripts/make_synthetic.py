#!/usr/bin/env python3
"""Generate a synthetic CoNLL-U corpus for scale testing.

    python3 scripts/make_synthetic.py -n 10000 --avg-tokens 20 -o /tmp/big.conllu
"""

import argparse

from textgraph.synthetic import synthetic_conllu


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", "--sentences", type=int, default=10000)
    parser.add_argument("--avg-tokens", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-o", "--output", required=True)
    args = parser.parse_args()

    text = synthetic_conllu(args.sentences, args.avg_tokens, args.seed)
    with open(args.output, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    tokens = sum(1 for line in text.splitlines() if line and not line.startswith("#"))
    print(f"wrote {args.output}: {args.sentences} sentences, {tokens} tokens")


if __name__ == "__main__":
    main()
