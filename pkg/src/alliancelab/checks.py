"""Three-tier reduction testing: lift, round-trip, budgeted equivalence.

* lift: a source witness must lift to a solution with an empty violation
  report within the recorded bound;
* roundtrip: projecting the lifted solution back must give an oracle-valid
  source witness;
* equiv: where the enumeration bound C(|V|, r) is small enough, the source
  decision must equal the target's size-bounded brute-force decision, on
  no-instances too.

Gadget blowup makes full equivalence testing infeasible for most
constructions; the budget verdict states this instead of hiding it.  Every
failure report carries the seed and the violating object, so it is
reproducible from (reduction, seed, budget) alone.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Optional

from alliancelab.alliances import check_instance_solution
from alliancelab.generators import (
    gen_cycle_diagram,
    gen_random_circle,
    gen_random_mrss,
    gen_random_oaf,
    gen_random_phs,
    gen_random_planar_ds,
    gen_random_strings,
    gen_random_vc3,
)
from alliancelab.graphs import Graph, graph_from_edge_list, is_connected, max_degree
from alliancelab.reductions import REDUCTIONS, ReducedInstance
from alliancelab.reductions.base import ReductionCapacityError
from alliancelab.reductions.subsetsum import (
    collapse_necessary,
    lift_collapse,
    lift_mrss,
    mrss_to_soafn,
)
from alliancelab.solvers import (
    BUDGET_EXHAUSTED,
    SearchBudget,
    solve_bruteforce,
)
from alliancelab.sources import (
    CircleDsInstance,
    ClosestStringInstance,
    DsInstance,
    MrssInstance,
    PhsInstance,
    VcInstance,
    instance_digest,
    is_central_string,
    is_dominating_set,
    is_mrss_witness,
    is_phs_witness,
    is_vertex_cover,
    oracle_circle_ds,
    oracle_closest_string,
    oracle_dominating_set,
    oracle_mrss,
    oracle_phs,
    oracle_vertex_cover,
)

# equivalence is attempted only when C(|V|, r) stays below this
EQUIV_ENUMERATION_CAP = 10**8

DEFAULT_CHECK_BUDGET = SearchBudget(max_candidates=200_000_000, max_seconds=600.0)


@dataclass(frozen=True)
class CheckReport:
    reduction: str
    source_digest: str
    tier: str            # lift | roundtrip | equiv
    verdict: str         # pass | fail | budget | skipped
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.verdict != "fail"

    def to_json(self) -> dict:
        return {
            "reduction": self.reduction,
            "source_digest": self.source_digest,
            "tier": self.tier,
            "verdict": self.verdict,
            "seed": self.seed,
            "wall_time": round(self.wall_time, 4),
            "details": self.details,
        }


def _digest(source) -> str:
    if isinstance(source, ReducedInstance):
        from alliancelab.reductions.base import reduced_digest

        return reduced_digest(source)
    return instance_digest(source)


def source_witness(source, budget: SearchBudget):
    """Oracle witness for a source instance, or None for a no-instance."""
    if isinstance(source, MrssInstance):
        return oracle_mrss(source)
    if isinstance(source, PhsInstance):
        return oracle_phs(source)
    if isinstance(source, ClosestStringInstance):
        return oracle_closest_string(source)
    if isinstance(source, VcInstance):
        return oracle_vertex_cover(source, budget)
    if isinstance(source, CircleDsInstance):
        return oracle_circle_ds(source)
    if isinstance(source, DsInstance):
        return oracle_dominating_set(source)
    if isinstance(source, ReducedInstance):
        out = solve_bruteforce(source.instance, budget)
        if out.status == BUDGET_EXHAUSTED:
            raise TimeoutError("source oracle budget exhausted")
        return out.solution if out.found else None
    raise TypeError(f"unknown source type {type(source)!r}")


def witness_is_valid(source, witness) -> bool:
    """Independent re-validation of a witness against the defining
    predicate (no search)."""
    if witness is None:
        return False
    if isinstance(source, MrssInstance):
        return is_mrss_witness(source, frozenset(witness))
    if isinstance(source, PhsInstance):
        return is_phs_witness(source, frozenset(witness))
    if isinstance(source, ClosestStringInstance):
        return is_central_string(source, witness)
    if isinstance(source, VcInstance):
        return is_vertex_cover(source.graph, frozenset(witness)) and len(witness) <= source.k
    if isinstance(source, CircleDsInstance):
        return is_dominating_set(source.graph, frozenset(witness)) and len(witness) <= source.k
    if isinstance(source, DsInstance):
        return is_dominating_set(source.graph, frozenset(witness)) and len(witness) <= source.k
    if isinstance(source, ReducedInstance):
        return check_instance_solution(source.instance, frozenset(witness)).ok
    raise TypeError(f"unknown source type {type(source)!r}")


def _witness_json(witness):
    if witness is None:
        return None
    if isinstance(witness, str):
        return witness
    return sorted(witness)


def run_lift_check(reduction: str, source, witness=None,
                   seed: Optional[int] = None,
                   budget: SearchBudget = DEFAULT_CHECK_BUDGET) -> CheckReport:
    """Tier 1: the lifted witness must verify within the recorded bound."""
    red = REDUCTIONS[reduction]
    t0 = time.monotonic()
    digest = _digest(source)
    if witness is None:
        witness = source_witness(source, budget)
    if witness is None:
        return CheckReport(reduction, digest, "lift", "skipped",
                           {"note": "source is a no-instance"}, time.monotonic() - t0, seed)
    try:
        ri = red.build(source, seed=seed) if red.seedable else red.build(source)
    except ReductionCapacityError as err:
        return CheckReport(reduction, digest, "lift", "budget", {
            "note": "target too large to materialise",
            "predicted_vertices": err.predicted_vertices,
            "cap": err.cap,
        }, time.monotonic() - t0, seed)
    report = red.lift(ri, source, witness)
    verdict = "pass" if report.ok and report.size <= report.bound else "fail"
    details = {
        "size": report.size,
        "bound": report.bound,
        "target_vertices": ri.instance.graph.n,
    }
    if verdict == "fail":
        details["witness"] = _witness_json(witness)
        details["verification"] = report.verification.to_json()
    return CheckReport(reduction, digest, "lift", verdict, details,
                       time.monotonic() - t0, seed)


def run_roundtrip_check(reduction: str, source, witness=None,
                        seed: Optional[int] = None,
                        budget: SearchBudget = DEFAULT_CHECK_BUDGET) -> CheckReport:
    """Tier 2: project(lift(witness)) must be an oracle-valid source witness."""
    red = REDUCTIONS[reduction]
    t0 = time.monotonic()
    digest = _digest(source)
    if red.project is None:
        return CheckReport(reduction, digest, "roundtrip", "skipped",
                           {"note": "projection undefined for this reduction"},
                           time.monotonic() - t0, seed)
    if witness is None:
        witness = source_witness(source, budget)
    if witness is None:
        return CheckReport(reduction, digest, "roundtrip", "skipped",
                           {"note": "source is a no-instance"}, time.monotonic() - t0, seed)
    try:
        ri = red.build(source, seed=seed) if red.seedable else red.build(source)
    except ReductionCapacityError as err:
        return CheckReport(reduction, digest, "roundtrip", "budget", {
            "note": "target too large to materialise",
            "predicted_vertices": err.predicted_vertices,
            "cap": err.cap,
        }, time.monotonic() - t0, seed)
    lifted = red.lift(ri, source, witness)
    projected = red.project(ri, lifted.solution)
    ok = witness_is_valid(source, projected)
    details = {"witness": _witness_json(witness), "projected": _witness_json(projected)}
    return CheckReport(reduction, digest, "roundtrip", "pass" if ok else "fail",
                       details, time.monotonic() - t0, seed)


def run_equiv_check(reduction: str, source,
                    budget: SearchBudget = DEFAULT_CHECK_BUDGET,
                    seed: Optional[int] = None,
                    enumeration_cap: int = EQUIV_ENUMERATION_CAP) -> CheckReport:
    """Tier 3: compare the source decision with the target's size-bounded
    brute-force decision, when C(|V|, r) fits the enumeration cap."""
    red = REDUCTIONS[reduction]
    t0 = time.monotonic()
    digest = _digest(source)
    try:
        ri = red.build(source, seed=seed) if red.seedable else red.build(source)
    except ReductionCapacityError as err:
        return CheckReport(reduction, digest, "equiv", "budget", {
            "note": "target too large to materialise",
            "predicted_vertices": err.predicted_vertices,
        }, time.monotonic() - t0, seed)
    n, r = ri.instance.graph.n, ri.instance.r
    bound = comb(n, min(r, n))
    if bound > enumeration_cap:
        return CheckReport(reduction, digest, "equiv", "budget", {
            "note": "enumeration bound exceeds cap",
            "cnr": bound,
            "cap": enumeration_cap,
        }, time.monotonic() - t0, seed)
    sw = source_witness(source, budget)
    target = solve_bruteforce(ri.instance, budget)
    if target.status == BUDGET_EXHAUSTED:
        return CheckReport(reduction, digest, "equiv", "budget",
                           {"note": "target enumeration budget exhausted",
                            "candidates": target.candidates},
                           time.monotonic() - t0, seed)
    agree = (sw is not None) == target.found
    details = {
        "source_yes": sw is not None,
        "target_yes": target.found,
        "target_r": r,
        "target_vertices": n,
    }
    if not agree:
        details["source_witness"] = _witness_json(sw)
        details["target_solution"] = _witness_json(target.solution)
    return CheckReport(reduction, digest, "equiv", "pass" if agree else "fail",
                       details, time.monotonic() - t0, seed)


def sample_source(reduction: str, seed: int):
    """A seeded yes-instance for the reduction, with a known witness
    (None means: let the oracle find it)."""
    if reduction in ("mrss-soafn", "mrss-oa"):
        return gen_random_mrss(k=2, n=3 + seed % 2, max_entry=2, seed=seed), None
    if reduction == "collapse":
        m = gen_random_mrss(k=2, n=3, max_entry=2, seed=seed)
        s1 = mrss_to_soafn(m)
        w1 = lift_mrss(s1, m, oracle_mrss(m)).solution
        return s1, w1
    if reduction == "soafn-oaf":
        m = gen_random_mrss(k=2, n=3, max_entry=2, seed=seed)
        s1 = mrss_to_soafn(m)
        w1 = lift_mrss(s1, m, oracle_mrss(m)).solution
        s2 = collapse_necessary(s1)
        w2 = lift_collapse(s2, s1, w1).solution
        return s2, w2
    if reduction == "oaf-oa":
        return gen_random_oaf(seed)
    if reduction == "phs-oa":
        return gen_random_phs(k=2 + seed % 2, sets=2 + seed % 2, seed=seed), None
    if reduction == "cs-oa":
        return gen_random_strings(k=3, n=3 + seed % 2, d=1 + seed % 2, seed=seed), None
    if reduction in ("vc-bipartite", "vc-split"):
        return gen_random_vc3(4 + seed % 3, seed), None
    if reduction == "pds-apex":
        return gen_random_planar_ds(seed), None
    if reduction == "ds-circle":
        if seed % 2 == 0:
            return gen_cycle_diagram(4 + (seed // 2) % 4), None
        return gen_random_circle(5, seed), None
    raise KeyError(reduction)


def default_suite(seed: int = 0, instances: int = 3,
                  budget: SearchBudget = DEFAULT_CHECK_BUDGET) -> list[CheckReport]:
    """Lift and round-trip for every reduction on seeded instances, plus
    equivalence where the enumeration bound allows it."""
    reports: list[CheckReport] = []
    for name in REDUCTIONS:
        for i in range(instances):
            s = seed * 1000 + i
            source, witness = sample_source(name, s)
            reports.append(run_lift_check(name, source, witness, seed=s, budget=budget))
            reports.append(run_roundtrip_check(name, source, witness, seed=s, budget=budget))
        source, witness = sample_source(name, seed * 1000)
        reports.append(run_equiv_check(name, source, budget=budget, seed=seed * 1000))
    return reports


def enumerate_connected_max_deg3(n: int) -> list[Graph]:
    """All connected graphs on exactly n vertices with maximum degree at
    most 3, up to isomorphism (canonicalised by permutation search; n is
    tiny by design)."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    out: list[Graph] = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = graph_from_edge_list(n, edges)
        if not is_connected(g):
            continue
        if n >= 1 and max_degree(g) > 3:
            continue
        canon = min(
            tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges))
            for p in permutations(range(n))
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(g)
    return out
