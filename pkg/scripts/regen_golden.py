#!/usr/bin/env python3
"""Regenerate the regression-locked golden files for the bundled fixture.

Run after an intentional behavior change, then review the diff:
    python3 scripts/regen_golden.py
"""

import json
from pathlib import Path

from textgraph import digest_file, load_kb
from textgraph.config import PipelineConfig

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
GOLDEN = ROOT / "tests" / "golden"


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    digested = digest_file(
        str(DATA / "constitution.conllu"), PipelineConfig(), load_kb(str(DATA / "kb.tsv"))
    )
    payload = {
        "summary_sids": [item.sid for item in digested.summary()],
        "keyphrases": [
            {"surface": p.surface, "head": p.head_lemma, "score": round(p.score, 9)}
            for p in digested.keyphrases()
        ],
        "svo": [
            {"subject": t.subject, "verb": t.verb, "object": t.object, "sid": t.sid}
            for t in digested.triples()
        ],
    }
    out = GOLDEN / "constitution.json"
    out.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")

    facts = GOLDEN / "constitution_facts.pl"
    facts.write_bytes(digested.facts())
    print(f"wrote {facts}")


if __name__ == "__main__":
    main()
