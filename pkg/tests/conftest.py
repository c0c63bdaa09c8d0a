import itertools

import pytest

from cnineq.graph import Graph


def complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# K4 minus the edge 2-3: vertices 0 and 1 are the two common neighbours of 2 and 3
DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
TRIANGLE = complete(3)
C4 = cycle(4)
C5 = cycle(5)
K4 = complete(4)
K5 = complete(5)
P3 = path(3)
EDGE = complete(2)
STAR = Graph.from_edges(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def named():
    return {
        "diamond": DIAMOND,
        "bowtie": BOWTIE,
        "triangle": TRIANGLE,
        "c4": C4,
        "c5": C5,
        "k4": K4,
        "k5": K5,
        "p3": P3,
        "edge": EDGE,
        "star": STAR,
    }


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
