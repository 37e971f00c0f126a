from __future__ import annotations

import pytest
from hypothesis import strategies as st

from edcslab.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, max_n: int = 10, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, frozenset(chosen))


def brute_d_set(g: Graph) -> set[int]:
    """Vertices missed by some maximum matching, via μ(g − v) from the exhaustive oracle."""
    from edcslab.graph import induced_subgraph
    from edcslab.matching import brute_force_maximum_matching

    mu = brute_force_maximum_matching(g).size
    out = set()
    for v in range(g.n):
        rest, _ = induced_subgraph(g, [x for x in range(g.n) if x != v])
        if brute_force_maximum_matching(rest).size == mu:
            out.add(v)
    return out


@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star3() -> Graph:
    # center 0, leaves 1..3
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
