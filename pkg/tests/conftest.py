"""Shared fixtures: the corpus of parsed example programs."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from ecstmetrics import parse_source  # noqa: E402

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

CORPUS = (
    ("QuickSort.mod", "modula2"),
    ("QuickSort.java", "javaoo"),
    ("Features.mod", "modula2"),
    ("Features.java", "javaoo"),
)


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def corpus():
    """name -> (source text, parsed tree) for every fixture program."""
    loaded = {}
    for name, language in CORPUS:
        text = (FIXTURE_DIR / name).read_text(encoding="utf-8")
        loaded[name] = (text, parse_source(text, language, source_path=name))
    return loaded


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance gate's per-criterion lines after capture ends."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORTED", None) if module else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
