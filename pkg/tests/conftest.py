import sys
from functools import lru_cache
from pathlib import Path

import pytest

TESTS = Path(__file__).parent
sys.path.insert(0, str(TESTS))

from glring.dsl import parse_spec  # noqa: E402
from glring.ideals import enumerate_ideals  # noqa: E402
from glring.ring import build_ring  # noqa: E402

REPO = TESTS.parent
SCHEMAS = REPO / "schemas"


@lru_cache(maxsize=None)
def ring_of(text: str):
    return build_ring(parse_spec(text))


@lru_cache(maxsize=None)
def lattice_of(text: str):
    return enumerate_ideals(ring_of(text))


@pytest.fixture
def ring():
    return ring_of


@pytest.fixture
def lattice():
    return lattice_of


def mask(*elements) -> int:
    return sum(1 << e for e in elements)


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    lines = getattr(acc, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
