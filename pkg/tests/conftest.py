import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mdgirth.harness import enumerate_connected_graphs  # noqa: E402

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture(scope="session")
def corpus():
    """Every connected graph on 1..7 vertices, one per isomorphism class."""
    return {n: list(enumerate_connected_graphs(n)) for n in range(1, 8)}


@pytest.fixture(scope="session")
def corpus_list(corpus):
    return [g for n in sorted(corpus) for g in corpus[n]]


@pytest.fixture
def criterion(request):
    """Record one acceptance verdict, print it, and fail the test if it did not hold."""

    def record(number, title, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
        request.config.stash[_ACCEPTANCE].append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
