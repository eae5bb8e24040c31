import pytest
from hypothesis import strategies as st

from twinblocks.graph import Digraph, UndirectedGraph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def digraphs(draw, max_n=8, max_m=20):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Digraph(n, frozenset())
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    arcs = draw(st.lists(pairs, max_size=max_m, unique=True))
    return Digraph(n, frozenset(arcs))


@st.composite
def undirected_graphs(draw, max_n=8, max_m=14):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return UndirectedGraph(n, frozenset())
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] < p[1])
    return UndirectedGraph(n, frozenset(draw(st.lists(pairs, max_size=max_m, unique=True))))


@pytest.fixture
def fig1():
    from twinblocks.graph import fig1_fixture

    return fig1_fixture()
