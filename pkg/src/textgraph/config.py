"""Dataclass configuration for every tunable constant, with a flat key=value file loader."""

from __future__ import annotations

from dataclasses import dataclass, field, fields


@dataclass
class GraphConfig:
    w_dep: float = 1.0  # weight of a redirected dependency edge
    w_ws: float = 1.0  # word -> sentence recommend weight
    w_sv: float = 1.0  # sentence -> predicate verb recommend weight


@dataclass
class RankConfig:
    damping: float = 0.85
    tol: float = 1e-6  # L1 stopping tolerance
    max_iter: int = 100
    min_core_nodes: int = 3  # below this, fall back from the core to the whole graph
    restrict_keywords_to_core: bool = True


@dataclass
class ExtractConfig:
    tau: float = 0.2  # context word keeps only if rank >= tau * rank(head)
    w_head: float = 0.7  # head share in the keyphrase score
    keyphrases: int = 10
    summary_sentences: int = 9


@dataclass
class RelationConfig:
    top_fraction: float = 0.3  # SVO lemmas must sit in this top fraction of lemma ranks


@dataclass
class QueryConfig:
    min_overlap: int = 1  # sentences must share at least this many expanded lemmas


@dataclass
class PipelineConfig:
    graph: GraphConfig = field(default_factory=GraphConfig)
    rank: RankConfig = field(default_factory=RankConfig)
    extract: ExtractConfig = field(default_factory=ExtractConfig)
    relations: RelationConfig = field(default_factory=RelationConfig)
    query: QueryConfig = field(default_factory=QueryConfig)
    fuse_compounds: bool = True

    @classmethod
    def from_mapping(cls, values: dict[str, str]) -> "PipelineConfig":
        cfg = cls()
        sections = [cfg.graph, cfg.rank, cfg.extract, cfg.relations, cfg.query]
        known: dict[str, tuple[object, str]] = {"fuse_compounds": (cfg, "fuse_compounds")}
        for section in sections:
            for f in fields(section):
                known[f.name] = (section, f.name)
        for key, raw in values.items():
            if key not in known:
                raise KeyError(f"unknown config key {key!r}")
            target, name = known[key]
            current = getattr(target, name)
            setattr(target, name, _coerce(raw, type(current)))
        return cfg

    @classmethod
    def from_file(cls, path: str) -> "PipelineConfig":
        return cls.from_mapping(parse_config_file(path))


def _coerce(raw: str, to_type: type):
    if to_type is bool:
        low = raw.strip().lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"not a boolean: {raw!r}")
    if to_type is int:
        return int(raw)
    if to_type is float:
        return float(raw)
    return raw


def parse_config_file(path: str) -> dict[str, str]:
    """Read a flat ``key = value`` file; ``#`` starts a comment."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            if "=" not in stripped:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line.rstrip()!r}")
            key, _, value = stripped.partition("=")
            values[key.strip()] = value.strip()
    return values
