"""Command line surface.

Verbs: verify, solve, reduce, check, gen, suite.  Exit codes follow the
verb: verify 0 valid / 1 invalid; solve 0 found / 3 none within bound /
4 budget exhausted; check 0 pass / 1 fail / 4 budget; suite 0 when no
check fails (budget-verdict tiers are reported, not fatal) / 1 otherwise.

Vertex sets are comma-separated 0-based identifiers.  Graphs travel as
edge-list text ("n m" header, one "u v" line per edge); instances as the
documented JSON shapes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from alliancelab.alliances import (
    AllianceInstance,
    check_defensive,
    check_instance_solution,
    validate_forbidden_structure,
)
from alliancelab.checks import (
    DEFAULT_CHECK_BUDGET,
    default_suite,
    run_equiv_check,
    run_lift_check,
    run_roundtrip_check,
    sample_source,
)
from alliancelab.generators import (
    gen_cycle_diagram,
    gen_grid,
    gen_random_circle,
    gen_random_graph,
    gen_random_mrss,
    gen_random_phs,
    gen_random_strings,
    gen_random_vc3,
)
from alliancelab.graphs import read_edge_list, write_edge_list
from alliancelab.reductions import REDUCTIONS
from alliancelab.reductions.base import reduced_from_json, reduced_to_json
from alliancelab.solvers import (
    BUDGET_EXHAUSTED,
    FOUND,
    SearchBudget,
    solve_branching,
    solve_bruteforce,
    solve_via_vertex_cover,
)
from alliancelab.sources import instance_from_json, instance_to_json


def _parse_set(text: str) -> frozenset[int]:
    if not text:
        return frozenset()
    return frozenset(int(x) for x in text.split(","))


def _load_graph(path: str):
    return read_edge_list(Path(path).read_text())


def _load_source(path: str):
    data = json.loads(Path(path).read_text())
    if data.get("kind") == "reduced":
        return reduced_from_json(data)
    return instance_from_json(data)


def _budget(args) -> SearchBudget:
    return SearchBudget(max_candidates=args.budget_nodes, max_seconds=args.budget_secs)


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    s = _parse_set(args.set)
    if args.defensive:
        report = check_defensive(g, s)
    else:
        inst = AllianceInstance(
            graph=g,
            r=args.r if args.r is not None else g.n,
            strength=args.strength,
            forbidden=_parse_set(args.forbidden),
            necessary=_parse_set(args.necessary),
            exact=args.exact,
        )
        report = check_instance_solution(inst, s)
        if args.check_forbidden_structure:
            report = report.merged(validate_forbidden_structure(g, inst.forbidden))
    _emit(args, report.to_json(), "valid" if report.ok else f"invalid: {report.to_json()}")
    return 0 if report.ok else 1


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    inst = AllianceInstance(
        graph=g,
        r=args.r,
        strength=args.strength,
        forbidden=_parse_set(args.forbidden),
        necessary=_parse_set(args.necessary),
        exact=args.exact,
    )
    budget = _budget(args)
    if args.method == "brute":
        out = solve_bruteforce(inst, budget)
    elif args.method == "branch":
        out = solve_branching(inst, budget)
    else:
        out = solve_via_vertex_cover(g, budget)
    _emit(args, out.to_json(),
          f"{out.status}" + (f": size {out.size} set {sorted(out.solution)}" if out.found else ""))
    if out.status == FOUND:
        return 0
    if out.status == BUDGET_EXHAUSTED:
        return 4
    return 3


def cmd_reduce(args) -> int:
    red = REDUCTIONS[args.name]
    source = _load_source(args.infile)
    ri = red.build(source, seed=args.seed) if red.seedable and args.seed is not None else red.build(source)
    if args.out:
        Path(args.out).write_text(write_edge_list(ri.instance.graph))
    if args.roles:
        Path(args.roles).write_text(json.dumps(ri.roles_to_json(), indent=2))
    if args.provenance:
        Path(args.provenance).write_text(json.dumps(ri.provenance.to_json(), indent=2))
    if args.reduced_json:
        Path(args.reduced_json).write_text(json.dumps(reduced_to_json(ri), indent=2))
    print(f"{args.name}: {ri.instance.graph.n} vertices, m={ri.instance.graph.m}, "
          f"r={ri.instance.r}, strength={ri.instance.strength}")
    return 0


def cmd_check(args) -> int:
    if args.infile:
        source = _load_source(args.infile)
        witness = None
    else:
        source, witness = sample_source(args.reduction, args.seed or 0)
    budget = _budget(args)
    if args.tier == "lift":
        rep = run_lift_check(args.reduction, source, witness, seed=args.seed, budget=budget)
    elif args.tier == "roundtrip":
        rep = run_roundtrip_check(args.reduction, source, witness, seed=args.seed, budget=budget)
    else:
        rep = run_equiv_check(args.reduction, source, budget=budget, seed=args.seed)
    _emit(args, rep.to_json(), f"{rep.reduction} {rep.tier}: {rep.verdict} {rep.details}")
    if rep.verdict == "fail":
        return 1
    if rep.verdict == "budget":
        return 4
    return 0


def cmd_gen(args) -> int:
    seed = args.seed or 0
    if args.kind == "graph":
        g = gen_random_graph(args.n, args.p, seed)
        payload = write_edge_list(g)
        Path(args.out).write_text(payload)
        print(f"graph: n={g.n} m={g.m} -> {args.out}")
        return 0
    if args.kind == "vc3":
        inst = gen_random_vc3(args.n, seed)
    elif args.kind == "mrss":
        inst = gen_random_mrss(args.k, args.n, args.max_entry, seed)
    elif args.kind == "phs":
        inst = gen_random_phs(args.k, args.sets, seed)
    elif args.kind == "strings":
        inst = gen_random_strings(args.k, args.n, args.d, seed)
    elif args.kind == "cycle-diagram":
        inst = gen_cycle_diagram(args.n)
    elif args.kind == "circle":
        inst = gen_random_circle(args.n, seed)
    elif args.kind == "grid":
        inst = gen_grid(args.w, args.h)
    else:
        raise KeyError(args.kind)
    Path(args.out).write_text(json.dumps(instance_to_json(inst), indent=2))
    print(f"{args.kind} -> {args.out}")
    return 0


def cmd_suite(args) -> int:
    budget = _budget(args)
    reports = default_suite(seed=args.seed or 0, instances=args.instances, budget=budget)
    fails = [r for r in reports if r.verdict == "fail"]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(f"{r.reduction:14s} {r.tier:9s} {r.verdict:7s} seed={r.seed} "
                  f"{r.wall_time:6.2f}s")
        print(f"suite: {len(reports)} checks, {len(fails)} fails")
    return 1 if fails else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="alliancelab",
                                 description="offensive alliance toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_budget_flags(p):
        p.add_argument("--budget-nodes", type=int, default=DEFAULT_CHECK_BUDGET.max_candidates)
        p.add_argument("--budget-secs", type=float, default=DEFAULT_CHECK_BUDGET.max_seconds)

    p = sub.add_parser("verify", help="check a vertex set against an instance")
    p.add_argument("--graph", required=True)
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--strength", type=int, default=1)
    p.add_argument("--defensive", action="store_true")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--forbidden", default="")
    p.add_argument("--necessary", default="")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--check-forbidden-structure", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact minimum offensive alliance")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--strength", type=int, default=1)
    p.add_argument("--forbidden", default="")
    p.add_argument("--necessary", default="")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--method", choices=("brute", "branch", "vc"), default="branch")
    add_budget_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="run a gadget construction")
    p.add_argument("name", choices=sorted(REDUCTIONS))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None, help="edge-list output")
    p.add_argument("--roles", default=None, help="roles sidecar JSON")
    p.add_argument("--provenance", default=None, help="provenance JSON")
    p.add_argument("--reduced-json", default=None,
                   help="self-contained reduced-instance JSON (chainable)")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check", help="run one reduction check tier")
    p.add_argument("tier", choices=("lift", "roundtrip", "equiv"))
    p.add_argument("--reduction", required=True, choices=sorted(REDUCTIONS))
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--seed", type=int, default=None)
    add_budget_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("kind", choices=("graph", "vc3", "mrss", "phs", "strings",
                                    "cycle-diagram", "circle", "grid"))
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--p", type=float, default=0.4)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--sets", type=int, default=2)
    p.add_argument("--max-entry", type=int, default=2)
    p.add_argument("--w", type=int, default=3)
    p.add_argument("--h", type=int, default=2)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("suite", help="run the default check suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=2)
    add_budget_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_suite)

    return ap


def main(argv=None) -> int:
    from alliancelab.graphs import GraphFormatError
    from alliancelab.reductions.base import ReductionCapacityError, ReductionInputError

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ReductionCapacityError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except TimeoutError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except (ReductionInputError, GraphFormatError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
