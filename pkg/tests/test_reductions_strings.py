from alliancelab.generators import gen_random_strings
from alliancelab.reductions.strings import (
    closest_string_to_oa,
    declared_cover,
    lift_closest_string,
    project_closest_string,
)
from alliancelab.sources import (
    ClosestStringInstance,
    is_central_string,
    is_vertex_cover,
    oracle_closest_string,
)

CS_REF = ClosestStringInstance(("1011100", "1101010", "1110001"), 3)


class TestConstruction:
    def test_reference_counts(self):
        ri = closest_string_to_oa(ClosestStringInstance(("10", "01"), 1))
        assert ri.instance.graph.n == 258
        assert ri.instance.r == 11
        assert ri.provenance.params["declared_cover_size"] == 40

    def test_bound_formula(self):
        for n, d in ((2, 1), (3, 2), (4, 1)):
            inst = ClosestStringInstance(("0" * n, "1" * n), d) if d <= n else None
            ri = closest_string_to_oa(inst)
            assert ri.instance.r == 4 * n + 2 * d + 1

    def test_declared_cover_is_a_cover_of_stated_size(self):
        for seed in range(5):
            inst = gen_random_strings(k=3, n=3, d=1, seed=seed)
            ri = closest_string_to_oa(inst)
            cover = declared_cover(ri)
            assert len(cover) == 18 * inst.n + 2 * inst.d + 2
            assert is_vertex_cover(ri.instance.graph, cover)

    def test_deterministic(self):
        a = closest_string_to_oa(CS_REF)
        b = closest_string_to_oa(CS_REF)
        assert a.instance.graph.edges() == b.instance.graph.edges()


class TestLiftProject:
    def test_reference_fixture(self):
        assert is_central_string(CS_REF, "1000000")
        ri = closest_string_to_oa(CS_REF)
        rep = lift_closest_string(ri, CS_REF, "1000000")
        assert rep.ok and rep.size <= ri.instance.r
        assert project_closest_string(ri, rep.solution) == "1000000"

    def test_random_planted_instances(self):
        for seed in range(10):
            inst = gen_random_strings(k=3, n=4, d=2, seed=seed)
            y = oracle_closest_string(inst)
            assert y is not None
            ri = closest_string_to_oa(inst)
            rep = lift_closest_string(ri, inst, y)
            assert rep.ok and rep.size <= ri.instance.r
            assert is_central_string(inst, project_closest_string(ri, rep.solution))

    def test_far_string_fails_at_its_vertex(self):
        inst = ClosestStringInstance(("0000", "1111"), 1)
        ri = closest_string_to_oa(inst)
        rep = lift_closest_string(ri, inst, "0000")  # distance 4 from x2
        assert not rep.ok
        assert {v.vertex for v in rep.verification.violations} == {ri.vertex("X[1]")}

    def test_seeded_choices_do_not_break_lifting(self):
        for seed in (2, 4):
            ri = closest_string_to_oa(CS_REF, seed=seed)
            assert lift_closest_string(ri, CS_REF, "1000000").ok
