"""Offensive alliance from k x k permutation hitting set with thin sets.

The target graph pairs a forced clique (every vertex carrying a heavy
pendant set) against a poison clique too expensive to touch; row and column
vertices then force exactly one grid vertex per row and per column into any
small solution, and the family vertices check hitting.  The size bound is
5k and yes-instances lift to alliances of size exactly 5k.
"""

from __future__ import annotations

import random
from typing import Optional

from alliancelab.alliances import check_instance_solution
from alliancelab.reductions.base import (
    GadgetBuilder,
    LiftReport,
    Provenance,
    ReducedInstance,
    pick,
)
from alliancelab.sources import PhsInstance, instance_digest


def phs_to_oa(inst: PhsInstance, seed: Optional[int] = None) -> ReducedInstance:
    rng = random.Random(seed) if seed is not None else None
    k = inst.k
    b = GadgetBuilder()
    v_f = [b.add(f"F[{j}]") for j in range(len(inst.family))]
    w = {(i, j): b.add(f"w[{i},{j}]") for i in range(k) for j in range(k)}
    d_tri = b.add_many("Dtri[{}]", 4 * k)
    b.clique(d_tri)
    for t, d in enumerate(d_tri):
        b.pendants(d, f"Dtri[{t}].p[{{}}]", 10 * k)
    d_sq = b.add_many("Dsq[{}]", 12 * k + 1)
    b.clique(d_sq)
    for j, fam in enumerate(inst.family):
        d_f = len(fam)  # thin: at most one cell per row, so d_f <= k
        for cell in sorted(fam):
            b.connect(v_f[j], w[cell])
        b.connect_all(v_f[j], d_tri)
        b.connect_all(v_f[j], pick(d_sq, 4 * k - d_f + 1, rng))
    rows = []
    for i in range(k):
        r_i = b.add(f"row[{i}]")
        rows.append(r_i)
        b.connect_all(r_i, [w[(i, j)] for j in range(k)])
        b.connect_all(r_i, d_tri)
        b.connect_all(r_i, pick(d_sq, 3 * k + 1, rng))
    for j in range(k):
        c_j = b.add(f"col[{j}]")
        b.connect_all(c_j, [w[(i, j)] for i in range(k)])
        b.connect_all(c_j, d_tri)
        b.connect_all(c_j, pick(d_sq, 3 * k + 1, rng))

    r = 5 * k
    instance, roles = b.build(r=r, strength=1)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("phs-oa", instance_digest(inst), {
            "r": r,
            "k": k,
            "family_size": len(inst.family),
        }),
    )


def lift_phs(ri: ReducedInstance, inst: PhsInstance,
             witness: frozenset[tuple[int, int]]) -> LiftReport:
    """Forced clique plus the witness's one grid vertex per row: size 5k."""
    k = ri.provenance.params["k"]
    sol = {ri.vertex(f"Dtri[{t}]") for t in range(4 * k)}
    for (i, j) in witness:
        sol.add(ri.vertex(f"w[{i},{j}]"))
    sol = frozenset(sol)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_phs(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[tuple[int, int]]:
    k = ri.provenance.params["k"]
    cells = []
    for i in range(k):
        for j in range(k):
            if ri.vertex(f"w[{i},{j}]") in alliance:
                cells.append((i, j))
    return frozenset(cells)
