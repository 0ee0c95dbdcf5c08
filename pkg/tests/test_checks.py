import json

from alliancelab.checks import (
    default_suite,
    enumerate_connected_max_deg3,
    run_equiv_check,
    run_lift_check,
    run_roundtrip_check,
    sample_source,
)
from alliancelab.reductions import REDUCTIONS
from alliancelab.solvers import SearchBudget
from alliancelab.sources import MrssInstance, VcInstance

from .conftest import complete_graph

MRSS_REF = MrssInstance(2, 2, ((2, 1), (1, 1), (1, 2)), (3, 3))


class TestLiftTier:
    def test_reference_mrss(self):
        rep = run_lift_check("mrss-soafn", MRSS_REF)
        assert rep.verdict == "pass"
        assert rep.details["size"] <= rep.details["bound"] == 44

    def test_no_instance_skipped(self):
        no = MrssInstance(1, 1, ((1,),), (2,))
        rep = run_lift_check("mrss-soafn", no)
        assert rep.verdict == "skipped"

    def test_pipeline_reports_budget_with_predicted_size(self):
        rep = run_lift_check("mrss-oa", MRSS_REF)
        assert rep.verdict == "budget"
        assert rep.details["predicted_vertices"] > 10**9

    def test_all_reductions_pass_on_sampled_sources(self):
        for name in REDUCTIONS:
            src, w = sample_source(name, 0)
            rep = run_lift_check(name, src, w, seed=0)
            expected = "budget" if name == "mrss-oa" else "pass"
            assert rep.verdict == expected, (name, rep.details)

    def test_supplied_string_witness(self):
        from alliancelab.sources import ClosestStringInstance

        ref = ClosestStringInstance(("1011100", "1101010", "1110001"), 3)
        rep = run_lift_check("cs-oa", ref, witness="1000000")
        assert rep.verdict == "pass"


class TestRoundtripTier:
    def test_reference_mrss_identity(self):
        rep = run_roundtrip_check("mrss-soafn", MRSS_REF)
        assert rep.verdict == "pass"
        assert rep.details["projected"] == rep.details["witness"]

    def test_all_reductions(self):
        for name in REDUCTIONS:
            src, w = sample_source(name, 3)
            rep = run_roundtrip_check(name, src, w, seed=3)
            expected = "budget" if name == "mrss-oa" else "pass"
            assert rep.verdict == expected, (name, rep.details)


class TestEquivTier:
    def test_vc_split_small_yes_and_no(self):
        k3 = complete_graph(3)
        yes = run_equiv_check("vc-split", VcInstance(k3, 2, True))
        assert yes.verdict == "pass" and yes.details["source_yes"] and yes.details["target_yes"]
        no = run_equiv_check("vc-split", VcInstance(k3, 1, True))
        assert no.verdict == "pass"
        assert not no.details["source_yes"] and not no.details["target_yes"]

    def test_budget_verdict_when_enumeration_too_large(self):
        src, _ = sample_source("phs-oa", 0)
        rep = run_equiv_check("phs-oa", src)
        assert rep.verdict == "budget"
        assert rep.details["cnr"] > 10**8

    def test_budget_verdict_on_candidate_exhaustion(self):
        k3 = complete_graph(3)
        rep = run_equiv_check("vc-split", VcInstance(k3, 1, True),
                              budget=SearchBudget(max_candidates=10, max_seconds=60))
        assert rep.verdict == "budget"


class TestReports:
    def test_json_shape_and_seed(self):
        src, w = sample_source("vc-split", 5)
        rep = run_lift_check("vc-split", src, w, seed=5)
        data = rep.to_json()
        assert data["seed"] == 5
        assert set(data) == {"reduction", "source_digest", "tier", "verdict",
                             "seed", "wall_time", "details"}
        json.dumps(data)  # serialisable

    def test_failure_reproducible_from_seed(self):
        # same (reduction, seed) gives the same source and digest
        a, _ = sample_source("cs-oa", 11)
        b, _ = sample_source("cs-oa", 11)
        from alliancelab.sources import instance_digest

        assert instance_digest(a) == instance_digest(b)


class TestSuite:
    def test_default_suite_has_zero_fails(self):
        reports = default_suite(seed=1, instances=1)
        assert all(r.verdict != "fail" for r in reports)
        tiers = {(r.reduction, r.tier) for r in reports}
        for name in REDUCTIONS:
            assert (name, "lift") in tiers
            assert (name, "roundtrip") in tiers
            assert (name, "equiv") in tiers


class TestDeterminismDigests:
    # frozen content digests of each construction on its seed-0 source:
    # any change to construction order, choices or formulas shows up here
    FROZEN = {
        "mrss-soafn": "48352e1e915cf482",
        "collapse": "92b0f7ee7bbfe22f",
        "soafn-oaf": "7a16760e7c861bf9",
        "oaf-oa": "f5ced0fea4017478",
        "phs-oa": "acbfad8781a114ac",
        "cs-oa": "84be56ae8bfc76e5",
        "vc-bipartite": "b59882762a6de1cd",
        "vc-split": "3abf6359b13112a9",
        "pds-apex": "79b399630eddb3a5",
        "ds-circle": "b6f474d6e440f019",
    }

    def test_builds_are_bit_identical(self):
        from alliancelab.reductions.base import reduced_digest

        for name, expected in self.FROZEN.items():
            src, _ = sample_source(name, 0)
            ri = REDUCTIONS[name].build(src)
            assert reduced_digest(ri) == expected, name


class TestEnumeration:
    def test_iso_class_counts(self):
        assert len(enumerate_connected_max_deg3(1)) == 1
        assert len(enumerate_connected_max_deg3(2)) == 1
        assert len(enumerate_connected_max_deg3(3)) == 2
        # P4, star, C4, paw, diamond, K4
        gs = enumerate_connected_max_deg3(4)
        assert len(gs) == 6
        assert sorted(g.m for g in gs) == [3, 3, 4, 4, 5, 6]
