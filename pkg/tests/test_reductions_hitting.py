from alliancelab.generators import gen_random_phs
from alliancelab.reductions.hitting import lift_phs, phs_to_oa, project_phs
from alliancelab.sources import PhsInstance, is_phs_witness, oracle_phs

PHS_REF = PhsInstance(5, (
    frozenset({(0, 0), (1, 0), (3, 3), (4, 2)}),
    frozenset({(0, 3), (2, 3), (4, 0)}),
    frozenset({(0, 0), (1, 4), (2, 1), (4, 4)}),
))


class TestConstruction:
    def test_reference_counts(self):
        ri = phs_to_oa(PhsInstance(2, (frozenset({(0, 0)}),)))
        assert ri.instance.graph.n == 202
        assert ri.instance.r == 10

    def test_bound_is_5k(self):
        for k in (2, 3, 4):
            ri = phs_to_oa(PhsInstance(k, (frozenset({(0, 0)}),)))
            assert ri.instance.r == 5 * k

    def test_family_vertex_degrees_balance(self):
        # v_F sees d_F grid vertices, 4k forced-clique vertices and
        # 4k - d_F + 1 poison vertices: total 8k + 1
        inst = PhsInstance(3, (frozenset({(0, 1), (1, 2)}), frozenset({(2, 0)})))
        ri = phs_to_oa(inst)
        g = ri.instance.graph
        for j in range(2):
            assert g.degree(ri.vertex(f"F[{j}]")) == 8 * inst.k + 1

    def test_deterministic(self):
        a = phs_to_oa(PHS_REF)
        b = phs_to_oa(PHS_REF)
        assert a.instance.graph.edges() == b.instance.graph.edges()


class TestLiftProject:
    def test_reference_instance(self):
        w = oracle_phs(PHS_REF)
        ri = phs_to_oa(PHS_REF)
        rep = lift_phs(ri, PHS_REF, w)
        assert rep.ok
        assert rep.size == 5 * PHS_REF.k  # size exactly 5k
        assert project_phs(ri, rep.solution) == w

    def test_random_planted_instances(self):
        for seed in range(10):
            inst = gen_random_phs(k=3, sets=3, seed=seed)
            w = oracle_phs(inst)
            assert w is not None
            ri = phs_to_oa(inst)
            rep = lift_phs(ri, inst, w)
            assert rep.ok and rep.size == 15
            assert is_phs_witness(inst, project_phs(ri, rep.solution))

    def test_seeded_poison_choices_do_not_break_lifting(self):
        w = oracle_phs(PHS_REF)
        for seed in (1, 5, 9):
            ri = phs_to_oa(PHS_REF, seed=seed)
            assert lift_phs(ri, PHS_REF, w).ok

    def test_non_hitting_permutation_fails(self):
        inst = PhsInstance(2, (frozenset({(0, 0)}),))
        ri = phs_to_oa(inst)
        rep = lift_phs(ri, inst, frozenset({(0, 1), (1, 0)}))  # misses the set
        assert not rep.ok
        assert {v.vertex for v in rep.verification.violations} == {ri.vertex("F[0]")}
