import pytest
from hypothesis import given
from hypothesis import strategies as st

from alliancelab.graphs import ChordDiagram
from alliancelab.sources import (
    CircleDsInstance,
    ClosestStringInstance,
    DeskScaleError,
    DsInstance,
    MrssInstance,
    PhsInstance,
    VcInstance,
    hamming,
    instance_digest,
    instance_from_json,
    instance_to_json,
    is_central_string,
    is_dominating_set,
    is_mrss_witness,
    is_phs_witness,
    is_vertex_cover,
    oracle_closest_string,
    oracle_dominating_set,
    oracle_mrss,
    oracle_phs,
    oracle_vertex_cover,
)

from .conftest import complete_graph, cycle_graph

MRSS_REF = MrssInstance(2, 2, ((2, 1), (1, 1), (1, 2)), (3, 3))
PHS_REF = PhsInstance(5, (
    frozenset({(0, 0), (1, 0), (3, 3), (4, 2)}),
    frozenset({(0, 3), (2, 3), (4, 0)}),
    frozenset({(0, 0), (1, 4), (2, 1), (4, 4)}),
))
CS_REF = ClosestStringInstance(("1011100", "1101010", "1110001"), 3)


class TestMrss:
    def test_reference_instance(self):
        w = oracle_mrss(MRSS_REF)
        assert w == frozenset({0, 2})
        assert is_mrss_witness(MRSS_REF, w)

    def test_zero_target_empty_budget(self):
        inst = MrssInstance(2, 0, ((1, 1),), (0, 0))
        assert oracle_mrss(inst) == frozenset()

    def test_unreachable_target(self):
        inst = MrssInstance(1, 1, ((1,),), (2,))
        assert oracle_mrss(inst) is None

    def test_monotone_in_target(self):
        # decreasing any target component never flips yes to no
        for lowered in ((2, 3), (3, 2), (0, 0), (3, 3)):
            inst = MrssInstance(2, 2, MRSS_REF.vectors, lowered)
            assert oracle_mrss(inst) is not None

    def test_monotone_in_target_seeded(self):
        import random

        rng = random.Random(17)
        for _ in range(40):
            vectors = tuple(tuple(rng.randint(0, 3) for _ in range(2)) for _ in range(3))
            target = tuple(rng.randint(0, 6) for _ in range(2))
            inst = MrssInstance(2, rng.randint(0, 3), vectors, target)
            if oracle_mrss(inst) is None:
                continue
            for coord in range(2):
                if target[coord] == 0:
                    continue
                lowered = tuple(t - (1 if i == coord else 0) for i, t in enumerate(target))
                assert oracle_mrss(MrssInstance(inst.k, inst.kprime, vectors, lowered)) is not None

    def test_desk_scale_caps(self):
        with pytest.raises(DeskScaleError):
            MrssInstance(2, 1, tuple(((1, 1),) * 17), (1, 1))
        with pytest.raises(DeskScaleError):
            MrssInstance(2, 1, ((1, 99),), (1, 1))

    def test_witness_canonical(self):
        # two minimum witnesses; the lexicographically least is returned
        inst = MrssInstance(1, 2, ((2,), (2,), (1,)), (2,))
        assert oracle_mrss(inst) == frozenset({0})


class TestPhs:
    def test_reference_instance(self):
        w = oracle_phs(PHS_REF)
        assert w is not None and is_phs_witness(PHS_REF, w)
        rows = sorted(i for i, _ in w)
        cols = sorted(j for _, j in w)
        assert rows == list(range(5)) and cols == list(range(5))

    def test_empty_family_identity_permutation(self):
        w = oracle_phs(PhsInstance(2, ()))
        assert w == frozenset({(0, 0), (1, 1)})

    def test_empty_set_unhittable(self):
        assert oracle_phs(PhsInstance(1, (frozenset(),))) is None

    def test_thinness_enforced(self):
        with pytest.raises(ValueError, match="thin"):
            PhsInstance(2, (frozenset({(0, 0), (0, 1)}),))


class TestClosestString:
    def test_hamming_examples(self):
        assert hamming("1011100", "1000000") == 3
        assert hamming("00", "00") == 0
        assert hamming("00", "11") == 2
        with pytest.raises(ValueError):
            hamming("0", "00")

    def test_reference_instance(self):
        assert is_central_string(CS_REF, "1000000")
        y = oracle_closest_string(CS_REF)
        assert y is not None and is_central_string(CS_REF, y)

    def test_exact_match_at_d_zero(self):
        inst = ClosestStringInstance(("0110",), 0)
        assert oracle_closest_string(inst) == "0110"

    def test_incompatible_pair(self):
        assert oracle_closest_string(ClosestStringInstance(("00", "11"), 0)) is None

    @given(st.lists(st.text(alphabet="01", min_size=4, max_size=4), min_size=1, max_size=3),
           st.integers(0, 3))
    def test_flip_symmetry(self, strings, d):
        inst = ClosestStringInstance(tuple(strings), d)
        flip = ClosestStringInstance(
            tuple(s.translate(str.maketrans("01", "10")) for s in strings), d)
        assert (oracle_closest_string(inst) is None) == (oracle_closest_string(flip) is None)

    def test_desk_cap(self):
        with pytest.raises(DeskScaleError):
            ClosestStringInstance(("0" * 21,), 1)


class TestGraphOracles:
    def test_vertex_cover_bounds(self):
        k3 = complete_graph(3)
        assert oracle_vertex_cover(VcInstance(k3, 2)) is not None
        assert oracle_vertex_cover(VcInstance(k3, 1)) is None

    def test_max_degree_flag_validated(self):
        with pytest.raises(ValueError):
            VcInstance(complete_graph(5), 2, max_degree_3=True)

    def test_dominating_set_c4(self):
        w = oracle_dominating_set(DsInstance(cycle_graph(4), 2))
        assert w is not None and len(w) == 2
        assert is_dominating_set(cycle_graph(4), w)
        # the antipodal pair is also a valid witness
        assert is_dominating_set(cycle_graph(4), frozenset({0, 2}))

    def test_dominating_set_infeasible(self):
        assert oracle_dominating_set(DsInstance(cycle_graph(8), 1)) is None

    def test_circle_instance_needs_degree_two(self):
        with pytest.raises(ValueError, match="degree"):
            CircleDsInstance(ChordDiagram((0, 1, 0, 1, 2, 2)), 1)


class TestJsonRoundtrip:
    @pytest.mark.parametrize("inst", [
        MRSS_REF,
        PHS_REF,
        CS_REF,
        VcInstance(complete_graph(3), 2, False),
        DsInstance(cycle_graph(4), 2),
        CircleDsInstance(ChordDiagram((0, 1, 3, 2, 0, 3, 1, 2)), 2),
    ])
    def test_roundtrip(self, inst):
        again = instance_from_json(instance_to_json(inst))
        assert instance_digest(again) == instance_digest(inst)
        assert type(again) is type(inst)
