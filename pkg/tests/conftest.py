import numpy as np
import pytest
from hypothesis import strategies as st

from coronaqec.graphs import Graph, generate


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * 2))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph(n, tuple(edges), name=f"hyp{n}:{sorted(edges)}")


@st.composite
def any_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


REGULAR_H = [
    generate("empty", 1), generate("empty", 2), generate("empty", 3),
    generate("complete", 2), generate("complete", 3), generate("complete", 4),
    generate("cycle", 4), generate("cycle", 5), generate("cycle", 6),
    generate("complete_bipartite", 3, 3), generate("petersen"),
    generate("random_regular", 8, 3, seed=7),
]

regular_graphs = st.sampled_from(REGULAR_H)


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def report_criterion(number, passed, detail):
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
