import random

import pytest
from hypothesis import strategies as st

from domkit import build_graph

ACCEPTANCE_LINES = []


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@st.composite
def bipartite_graphs(draw, max_side=6):
    """Graphs with all edges between 0..na-1 and na..na+nb-1."""
    na = draw(st.integers(1, max_side))
    nb = draw(st.integers(1, max_side))
    pairs = [(a, na + b) for a in range(na) for b in range(nb)]
    return build_graph(na + nb, draw(st.lists(st.sampled_from(pairs), unique=True)))


def random_dominating_set(g, rng, density=0.3):
    """Random subset completed greedily (lowest undominated vertex joins) to a dominating set."""
    d = {v for v in range(g.n) if rng.random() < density}
    covered = set(d)
    for v in d:
        covered.update(g.neighbors(v))
    for v in range(g.n):
        if v not in covered:
            d.add(v)
            covered.add(v)
            covered.update(g.neighbors(v))
    return frozenset(d)


@pytest.fixture
def rng():
    return random.Random(20240229)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
