"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from alliancelab.graphs import Graph, graph_from_edge_list


def complete_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return graph_from_edge_list(1, [])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs)))
    return graph_from_edge_list(n, sorted(edges))


@st.composite
def graphs_with_subsets(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    members = draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    return g, frozenset(members)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def star5():
    return star_graph(5)
