from pathlib import Path

import pytest
from hypothesis import settings

from textgraph import digest_file, load_kb
from textgraph.config import PipelineConfig

settings.register_profile("textgraph", deadline=None, max_examples=50)
settings.load_profile("textgraph")

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def fixture_path() -> Path:
    return DATA_DIR / "constitution.conllu"


@pytest.fixture(scope="session")
def fixture_text(fixture_path) -> str:
    return fixture_path.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def kb_path() -> Path:
    return DATA_DIR / "kb.tsv"


@pytest.fixture(scope="session")
def digested(fixture_path, kb_path):
    return digest_file(str(fixture_path), PipelineConfig(), load_kb(str(kb_path)))


@pytest.fixture(scope="session")
def fixture_doc(digested):
    return digested.doc
