import pytest

from alliancelab.graphs import graph_from_edge_list
from alliancelab.generators import gen_grid, gen_random_planar_ds
from alliancelab.reductions.apex import (
    apex_edge_count_condition,
    lift_apex,
    pds_to_soa_apex,
    project_apex,
)
from alliancelab.reductions.base import ReductionInputError
from alliancelab.sources import DsInstance, is_dominating_set, oracle_dominating_set

from .conftest import cycle_graph

C4 = DsInstance(cycle_graph(4), 2)


class TestConstruction:
    def test_reference_counts(self):
        ri = pds_to_soa_apex(C4)
        # n + m edge vertices + 3m pendants + 2 hubs + 6n shared pendants
        assert ri.instance.graph.n == 46
        assert ri.instance.r == 4 + 2 + 2  # m + k + 2
        assert ri.instance.strength == 2

    def test_edge_vertices_double_original_degrees(self):
        ri = pds_to_soa_apex(C4)
        g = ri.instance.graph
        for i in range(4):
            assert g.degree(ri.vertex(f"V[{i}]")) == 2 * C4.graph.degree(i)

    def test_requires_connected_source(self):
        disconnected = DsInstance(graph_from_edge_list(4, [(0, 1), (2, 3)]), 2)
        with pytest.raises(ReductionInputError):
            pds_to_soa_apex(disconnected)

    def test_edge_count_condition_for_output_minus_hub(self):
        for seed in range(6):
            inst = gen_random_planar_ds(seed)
            edges, bound, holds = apex_edge_count_condition(pds_to_soa_apex(inst))
            assert holds and edges <= bound

    def test_modulator_is_the_hub(self):
        ri = pds_to_soa_apex(C4)
        assert ri.modulator == frozenset({ri.vertex("x")})


class TestLiftProject:
    def test_reference_instance(self):
        w = oracle_dominating_set(C4)
        ri = pds_to_soa_apex(C4)
        rep = lift_apex(ri, C4, w)
        assert rep.ok and rep.size <= ri.instance.r
        assert project_apex(ri, rep.solution) == w

    def test_grids_and_subgrids(self):
        pool = [gen_grid(2, 2), gen_grid(3, 2)] + [gen_random_planar_ds(s) for s in range(4)]
        for inst in pool:
            w = oracle_dominating_set(inst)
            assert w is not None
            ri = pds_to_soa_apex(inst)
            rep = lift_apex(ri, inst, w)
            assert rep.ok and rep.size <= ri.instance.r
            back = project_apex(ri, rep.solution)
            assert is_dominating_set(inst.graph, back) and len(back) <= inst.k

    def test_non_dominating_set_fails(self):
        ri = pds_to_soa_apex(C4)
        rep = lift_apex(ri, C4, frozenset({0}))  # vertex 2 undominated
        assert not rep.ok
