from __future__ import annotations

import pytest

from hyperspec import Hypergraph, complete_hypergraph
from hyperspec.harness import default_corpus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture
def k33():
    return complete_hypergraph(3, 3)


@pytest.fixture(scope="session")
def noniso_pair():
    """Non-isomorphic cospectral (4,3)-regular hypergraphs on 8 vertices, found by the miner."""
    g = Hypergraph.from_edges(
        8, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 6, 7), (2, 3, 4, 5), (2, 3, 6, 7), (4, 5, 6, 7)]
    )
    h = Hypergraph.from_edges(
        8, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (0, 2, 4, 6), (1, 3, 5, 7), (2, 3, 6, 7), (4, 5, 6, 7)]
    )
    return g, h


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
