import random

import pytest
from hypothesis import strategies as st

from rainbowlab import Graph


def random_graph(rng: random.Random, n: int) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices; 2^C(n,2) of them, so keep n tiny."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if (bits >> i) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(range(n)))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
