import pytest
from hypothesis import given
from hypothesis import strategies as st

from alliancelab.graphs import (
    ChordDiagram,
    Graph,
    GraphFormatError,
    chord_diagram_to_graph,
    connected_components,
    forest_height_after_deletion,
    graph_from_edge_list,
    is_bipartite,
    is_connected,
    is_split,
    max_degree,
    min_degree,
    read_edge_list,
    write_edge_list,
)

from .conftest import complete_graph, cycle_graph, graphs, path_graph


class TestBuild:
    def test_path(self):
        g = graph_from_edge_list(3, [(0, 1), (1, 2)])
        assert g.n == 3 and g.m == 2
        assert g.neighbors(1) == frozenset({0, 2})

    def test_single_vertex(self):
        g = graph_from_edge_list(1, [])
        assert g.n == 1 and g.m == 0

    def test_complete(self):
        g = complete_graph(4)
        assert all(g.degree(v) == 3 for v in range(4))

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphFormatError, match="edge 1"):
            graph_from_edge_list(3, [(0, 1), (0, 7)])

    def test_rejects_self_loop(self):
        with pytest.raises(GraphFormatError, match="edge 0"):
            graph_from_edge_list(3, [(2, 2)])

    def test_duplicates_collapsed_with_flag(self):
        g = graph_from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
        assert g.m == 2
        assert g.had_duplicate_edges
        assert not graph_from_edge_list(3, [(0, 1)]).had_duplicate_edges

    def test_edge_list_roundtrip(self):
        g = cycle_graph(5)
        assert read_edge_list(write_edge_list(g)) == g

    def test_read_rejects_bad_header(self):
        with pytest.raises(GraphFormatError):
            read_edge_list("3\n0 1\n")


class TestDegrees:
    def test_extremes(self):
        assert (min_degree(complete_graph(4)), max_degree(complete_graph(4))) == (3, 3)
        assert (min_degree(path_graph(3)), max_degree(path_graph(3))) == (1, 2)
        assert (min_degree(cycle_graph(5)), max_degree(cycle_graph(5))) == (2, 2)

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphFormatError):
            min_degree(graph_from_edge_list(0, []))


class TestBipartite:
    def test_even_cycle(self):
        assert is_bipartite(cycle_graph(4)) == (frozenset({0, 2}), frozenset({1, 3}))

    def test_odd_cycle(self):
        assert is_bipartite(complete_graph(3)) is None

    @given(graphs())
    def test_partition_is_proper(self, g):
        parts = is_bipartite(g)
        if parts is not None:
            s0, s1 = parts
            assert s0 | s1 == frozenset(range(g.n)) and not (s0 & s1)
            for u, v in g.edges():
                assert (u in s0) != (v in s0)


def _split_exhaustive(g: Graph):
    for mask in range(1 << g.n):
        clique = [v for v in range(g.n) if (mask >> v) & 1]
        indep = [v for v in range(g.n) if not (mask >> v) & 1]
        if all(g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]) and \
           not any(g.has_edge(u, v) for i, u in enumerate(indep) for v in indep[i + 1:]):
            return True
    return False


class TestSplit:
    def test_complete_is_split(self):
        clique, indep = is_split(complete_graph(3))
        assert clique == frozenset({0, 1, 2}) and indep == frozenset()

    def test_c4_is_not_split(self):
        assert is_split(cycle_graph(4)) is None

    def test_all_graphs_up_to_5_vertices_match_exhaustive_search(self):
        for n in range(1, 6):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for mask in range(1 << len(pairs)):
                edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
                g = graph_from_edge_list(n, edges)
                assert (is_split(g) is not None) == _split_exhaustive(g), edges


class TestForestHeight:
    def test_triangle_minus_one_vertex(self):
        assert forest_height_after_deletion(complete_graph(3), frozenset({0})) == 1

    def test_triangle_keeps_cycle(self):
        assert forest_height_after_deletion(complete_graph(3), frozenset()) is None

    def test_path_center_rooting(self):
        # P5 has diameter 4, center-rooted height 2
        assert forest_height_after_deletion(path_graph(5), frozenset()) == 2

    def test_isolated_vertices(self):
        assert forest_height_after_deletion(graph_from_edge_list(3, []), frozenset()) == 0

    def test_delete_everything(self):
        assert forest_height_after_deletion(complete_graph(3), frozenset({0, 1, 2})) == 0


class TestChordDiagram:
    def test_interleaved_chords_cross(self):
        g = chord_diagram_to_graph(ChordDiagram(("a", "b", "a", "b")))
        assert g.edges() == ((0, 1),)

    def test_nested_chords_do_not_cross(self):
        g = chord_diagram_to_graph(ChordDiagram(("a", "a", "b", "b")))
        assert g.n == 2 and g.m == 0

    def test_fig_style_diagram(self):
        # four chords, five crossings: the complete graph minus one pair
        g = chord_diagram_to_graph(ChordDiagram((0, 1, 3, 2, 0, 3, 1, 2)))
        assert g.n == 4 and g.m == 5
        assert not g.has_edge(1, 3)

    def test_malformed_rejected(self):
        with pytest.raises(GraphFormatError):
            ChordDiagram(("a", "a", "a", "b"))

    @given(st.permutations([0, 0, 1, 1, 2, 2, 3, 3]))
    def test_realised_graph_is_simple_and_symmetric(self, seq):
        g = chord_diagram_to_graph(ChordDiagram(tuple(seq)))
        assert g.n == 4
        for v in range(g.n):
            assert v not in g.neighbors(v)
            for u in g.neighbors(v):
                assert v in g.neighbors(u)


class TestInvariants:
    @given(graphs())
    def test_adjacency_symmetric_no_loops(self, g):
        for v in range(g.n):
            assert v not in g.neighbors(v)
            for u in g.neighbors(v):
                assert v in g.neighbors(u)

    @given(graphs())
    def test_components_partition_vertices(self, g):
        comps = connected_components(g)
        seen = set()
        for c in comps:
            assert not (c & seen)
            seen |= c
        assert seen == set(range(g.n))
        assert is_connected(g) == (len(comps) <= 1)
