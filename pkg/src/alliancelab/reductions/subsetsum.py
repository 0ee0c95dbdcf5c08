"""Reductions from multidimensional relaxed subset sum to the alliance
problems, and the constraint-elimination stages that follow it.

The chain is

    MRSS  ->  strong offensive alliance with forbidden + necessary sets
          ->  same, with a single necessary vertex      (collapse stage)
          ->  offensive alliance with forbidden set only
          ->  unconstrained offensive alliance          (pendant-tree stage)

Each stage carries a forward solution lifter and a reverse projector.  All
stages keep the designated modulator small: deleting it leaves a forest of
trees of bounded height, which is what the structural tests check.
"""

from __future__ import annotations

import random
from typing import Optional

from alliancelab.alliances import (
    check_instance_solution,
    validate_forbidden_structure,
)
from alliancelab.reductions.base import (
    GadgetBuilder,
    LiftReport,
    Provenance,
    ReducedInstance,
    ReductionCapacityError,
    ReductionInputError,
    pick,
    reduced_digest,
)
from alliancelab.sources import MrssInstance, instance_digest

# Pendant trees grow as 16*r^2 per attachment point; refuse to materialise
# graphs beyond this many vertices (see oaf_to_oa / mrss_to_oa_pipeline).
MATERIALIZE_CAP = 2_000_000


def mrss_to_soafn(inst: MrssInstance, seed: Optional[int] = None) -> ReducedInstance:
    """Strong offensive alliance instance (forbidden + necessary sets) from
    an MRSS instance: one tree gadget per vector, one port vertex per
    coordinate, plus pendant sets sized by the column sums and targets.

    Rejects coordinates whose necessary-pendant formula would go negative
    (target too large), all-zero vectors, and all-zero columns: those
    degenerate inputs break the gadget's degree arithmetic, and zero
    vectors/columns never change the MRSS answer.
    """
    rng = random.Random(seed) if seed is not None else None
    vectors, target, k, kprime = inst.vectors, inst.target, inst.k, inst.kprime
    n = inst.n
    col = [sum(s[i] for s in vectors) for i in range(k)]
    for j, s in enumerate(vectors):
        if max(s) == 0:
            raise ReductionInputError(f"vector {j} is all zero; drop it first")
    for i in range(k):
        if 2 * col[i] - 2 * target[i] + 2 < 0:
            raise ReductionInputError(
                f"coordinate {i}: target {target[i]} exceeds column sum {col[i]} + 1")
        if col[i] == 0:
            raise ReductionInputError(f"coordinate {i} has zero column sum")

    b = GadgetBuilder()
    u = [b.add(f"u[{i}]", forbidden=True) for i in range(k)]
    a_set: dict[int, list[int]] = {}
    b_set: dict[int, list[int]] = {}
    c_set: dict[int, list[int]] = {}
    x_of: dict[int, int] = {}
    for j, s in enumerate(vectors):
        mx = max(s)
        a_set[j] = b.add_many(f"Ts[{j}].A[{{}}]", mx + 1)
        b_set[j] = b.add_many(f"Ts[{j}].B[{{}}]", mx + 1)
        asq = b.add_many(f"Ts[{j}].Asq[{{}}]", mx + 1, forbidden=True)
        bsq = b.add_many(f"Ts[{j}].Bsq[{{}}]", mx + 1, forbidden=True)
        c_set[j] = b.add_many(f"Ts[{j}].C[{{}}]", 2 * mx + 2)
        znec = b.add_many(f"Ts[{j}].Znec[{{}}]", 5, necessary=True)
        zforb = b.add(f"Ts[{j}].Zforb", forbidden=True)
        x_of[j] = b.add(f"Ts[{j}].x")
        y = b.add(f"Ts[{j}].y")
        z = b.add(f"Ts[{j}].z", forbidden=True)
        for i in range(mx + 1):
            b.connect(asq[i], bsq[i])
            b.connect(asq[i], a_set[j][i])
            b.connect(asq[i], b_set[j][i])
            b.connect(x_of[j], asq[i])
        b.connect_all(z, znec)
        b.connect(z, zforb)
        b.connect(x_of[j], z)
        b.connect(z, y)
        b.connect_all(y, c_set[j])

    a = b.add("a", forbidden=True)
    b.pendants(a, "A.nec[{}]", 3, necessary=True)
    b.pendants(a, "A.forb[{}]", 1, forbidden=True)
    for j, s in enumerate(vectors):
        for i in range(k):
            b.connect_all(u[i], pick(a_set[j], s[i], rng))
        b.connect_all(a, a_set[j] + b_set[j] + c_set[j])
    for i in range(k):
        b.pendants(u[i], f"Vu[{i}].forb[{{}}]", col[i], forbidden=True)
        b.pendants(u[i], f"Vu[{i}].nec[{{}}]", 2 * col[i] - 2 * target[i] + 2,
                   necessary=True)

    r = (
        sum(2 * (col[i] - target[i] + 1) for i in range(k))
        + sum(2 * (max(s) + 1) for s in vectors)
        + 5 * n + 3 + kprime
    )
    instance, roles = b.build(r=r, strength=2)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("mrss-soafn", instance_digest(inst), {
            "r": r,
            "k": k,
            "kprime": kprime,
            "n_vectors": n,
            "column_sums": list(col),
            "target": list(target),
            "vector_maxima": [max(s) for s in vectors],
        }),
        modulator=frozenset(u) | {a},
    )


def lift_mrss(ri: ReducedInstance, inst: MrssInstance, witness: frozenset[int]) -> LiftReport:
    """Forward witness map: all necessary vertices, A u B u {x} for chosen
    vectors, C for the rest."""
    sol = set(ri.instance.necessary)
    for j in range(inst.n):
        if j in witness:
            sol.update(ri.vertices_with_prefix(f"Ts[{j}].A["))
            sol.update(ri.vertices_with_prefix(f"Ts[{j}].B["))
            sol.add(ri.vertex(f"Ts[{j}].x"))
        else:
            sol.update(ri.vertices_with_prefix(f"Ts[{j}].C["))
    sol = frozenset(sol)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_mrss(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    """Chosen vectors are exactly those whose tree's x vertex was taken."""
    n = ri.provenance.params["n_vectors"]
    return frozenset(j for j in range(n) if ri.vertex(f"Ts[{j}].x") in alliance)


def collapse_necessary(ri: ReducedInstance, seed: Optional[int] = None) -> ReducedInstance:
    """Replace the whole necessary set by a single new necessary vertex:
    forbidden hub x adjacent to the old necessary vertices, a fresh
    necessary pendant y, and |necessary|-1 forbidden pendants on x."""
    inst = ri.instance
    nec = sorted(inst.necessary)
    if not nec:
        raise ReductionInputError("collapse stage needs at least one necessary vertex")
    b = GadgetBuilder.from_instance(inst, ri.roles, keep_forbidden=True, keep_necessary=False)
    x = b.add("collapse.x", forbidden=True)
    y = b.add("collapse.y", necessary=True)
    b.connect(x, y)
    b.connect_all(x, nec)
    b.pendants(x, "collapse.Vx[{}]", len(nec) - 1, forbidden=True)
    instance, roles = b.build(r=inst.r + 1, strength=inst.strength, exact=inst.exact)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("collapse", reduced_digest(ri), {
            "r": inst.r + 1,
            "input_r": inst.r,
            "input_n": inst.graph.n,
            "input_necessary": len(nec),
        }),
        modulator=ri.modulator | {x},
    )


def lift_collapse(ri: ReducedInstance, source: ReducedInstance,
                  witness: frozenset[int]) -> LiftReport:
    sol = frozenset(witness) | {ri.vertex("collapse.y")}
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_collapse(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    old_n = ri.provenance.params["input_n"]
    return frozenset(v for v in alliance if v < old_n)


def soafn_to_oaf(ri: ReducedInstance) -> ReducedInstance:
    """Eliminate the necessary vertex: bridge set T of 4n fresh vertices
    hanging between two forbidden hubs, pendant forbidden sets sized to
    force T and the old necessary vertex into any solution, and one hub
    adjacent to everything except the degree-one forbidden vertices.
    Output strength drops from 2 to 1."""
    inst = ri.instance
    if inst.strength != 2 or len(inst.necessary) != 1:
        raise ReductionInputError("stage needs strength 2 and exactly one necessary vertex")
    g = inst.graph
    n = g.n
    x = next(iter(inst.necessary))
    deg_one_forbidden = {v for v in inst.forbidden if g.degree(v) == 1}
    b = GadgetBuilder.from_instance(inst, ri.roles, keep_forbidden=True, keep_necessary=False)
    t_forb = b.add("bridge.t_forb", forbidden=True)
    x_forb = b.add("bridge.x_forb", forbidden=True)
    b.pendants(t_forb, "bridge.Vt[{}]", 4 * n, forbidden=True)
    b.pendants(x_forb, "bridge.Vx[{}]", n, forbidden=True)
    bridge = b.add_many("bridge.T[{}]", 4 * n)
    b.connect_all(t_forb, bridge)
    b.connect_all(x_forb, bridge)
    for v in range(n):
        if v not in deg_one_forbidden:
            b.connect(x_forb, v)
    b.connect(x, t_forb)
    instance, roles = b.build(r=inst.r + 4 * n, strength=1, exact=inst.exact)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("soafn-oaf", reduced_digest(ri), {
            "r": inst.r + 4 * n,
            "input_r": inst.r,
            "input_n": n,
        }),
        modulator=ri.modulator | {t_forb, x_forb},
    )


def lift_soafn_oaf(ri: ReducedInstance, source: ReducedInstance,
                   witness: frozenset[int]) -> LiftReport:
    sol = frozenset(witness) | frozenset(ri.vertices_with_prefix("bridge.T["))
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_soafn_oaf(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    old_n = ri.provenance.params["input_n"]
    return frozenset(v for v in alliance if v < old_n)


def oaf_to_oa(ri: ReducedInstance, cap: int = MATERIALIZE_CAP) -> ReducedInstance:
    """Eliminate the forbidden set: hang a height-2 tree with 4r children
    of 4r leaves each under every degree-one forbidden vertex.  Any tree or
    forbidden vertex entering a solution would force more than r vertices,
    so solutions of size at most r avoid them without the explicit ban."""
    inst = ri.instance
    if inst.strength != 1 or inst.necessary:
        raise ReductionInputError("stage needs strength 1 and no necessary vertices")
    structure = validate_forbidden_structure(inst.graph, inst.forbidden)
    if not structure.ok:
        raise ReductionInputError(
            f"forbidden-structure promise violated: {structure.to_json()['constraint_failures']}")
    g = inst.graph
    r = inst.r
    deg_one_forbidden = sorted(v for v in inst.forbidden if g.degree(v) == 1)
    per_gadget = 4 * r + 16 * r * r
    predicted = g.n + len(deg_one_forbidden) * per_gadget
    if predicted > cap:
        raise ReductionCapacityError(
            predicted, cap,
            f"{len(deg_one_forbidden)} pendant trees of {per_gadget} vertices each (r={r})")
    b = GadgetBuilder.from_instance(inst, ri.roles, keep_forbidden=False, keep_necessary=False)
    for v in deg_one_forbidden:
        children = b.pendants(v, f"pend[{v}].c[{{}}]", 4 * r)
        for i, ch in enumerate(children):
            b.pendants(ch, f"pend[{v}].l[{i}][{{}}]", 4 * r)
    instance, roles = b.build(r=r, strength=1, exact=inst.exact)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("oaf-oa", reduced_digest(ri), {
            "r": r,
            "input_n": g.n,
            "deg_one_forbidden": len(deg_one_forbidden),
            "gadget_vertices": per_gadget,
        }),
        modulator=ri.modulator,
    )


def lift_oaf_oa(ri: ReducedInstance, source: ReducedInstance,
                witness: frozenset[int]) -> LiftReport:
    sol = frozenset(witness)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_oaf_oa(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    old_n = ri.provenance.params["input_n"]
    return frozenset(v for v in alliance if v < old_n)


def mrss_to_oa_pipeline(inst: MrssInstance, seed: Optional[int] = None,
                        cap: int = MATERIALIZE_CAP) -> ReducedInstance:
    """Full composition down to an unconstrained offensive alliance
    instance.  The final stage multiplies the vertex count by roughly
    16 r^2 per degree-one forbidden vertex, so real MRSS inputs exceed any
    reasonable cap; the capacity error reports the exact predicted size.
    Use pipeline_stages to work with the three cheap stages."""
    s1, s2, s3, s4 = pipeline_stages(inst, seed=seed, cap=cap, materialize_last=True)
    params = dict(s4.provenance.params)
    params["r_stages"] = [s.instance.r for s in (s1, s2, s3, s4)]
    return ReducedInstance(
        instance=s4.instance,
        roles=s4.roles,
        provenance=Provenance("mrss-oa", instance_digest(inst), params),
        modulator=s4.modulator,
    )


def pipeline_stages(inst: MrssInstance, seed: Optional[int] = None,
                    cap: int = MATERIALIZE_CAP, materialize_last: bool = False):
    """The chain's stages; the last one is built only on request (it is the
    one that can exceed the materialisation cap)."""
    s1 = mrss_to_soafn(inst, seed=seed)
    s2 = collapse_necessary(s1)
    s3 = soafn_to_oaf(s2)
    s4 = oaf_to_oa(s3, cap=cap) if materialize_last else None
    return s1, s2, s3, s4


def pipeline_final_size(inst: MrssInstance, seed: Optional[int] = None) -> tuple[int, int]:
    """Predicted (vertices, r) of the final pipeline stage, without
    materialising it."""
    _, _, s3, _ = pipeline_stages(inst, seed=seed)
    r = s3.instance.r
    g = s3.instance.graph
    deg_one = sum(1 for v in s3.instance.forbidden if g.degree(v) == 1)
    return g.n + deg_one * (4 * r + 16 * r * r), r


def lift_pipeline(final: ReducedInstance, inst: MrssInstance,
                  witness: frozenset[int], seed: Optional[int] = None) -> LiftReport:
    """Compose the stage lifts: tree solution, plus the collapse pendant,
    plus the bridge set; the pendant-tree stage lifts identically."""
    s1, s2, s3, _ = pipeline_stages(inst, seed=seed)
    r1 = lift_mrss(s1, inst, witness)
    r2 = lift_collapse(s2, s1, r1.solution)
    r3 = lift_soafn_oaf(s3, s2, r2.solution)
    sol = r3.solution
    return LiftReport(sol, check_instance_solution(final.instance, sol), len(sol),
                      final.instance.r)


def project_pipeline(final: ReducedInstance, inst: MrssInstance,
                     alliance: frozenset[int], seed: Optional[int] = None) -> frozenset[int]:
    s1, s2, s3, _ = pipeline_stages(inst, seed=seed)
    a3 = project_oaf_oa(final, alliance)
    a2 = project_soafn_oaf(s3, a3)
    a1 = project_collapse(s2, a2)
    return project_mrss(s1, a1)
