"""Offensive alliance from vertex cover in graphs of maximum degree 3.

Two constructions: one whose output is bipartite (the linear reduction
behind the exponential lower bound for bipartite inputs) and one whose
output is a split graph (hence also chordal).  Both force a small hub set
into every solution via heavy pendant sets, and encode cover choices in a
copy of the original vertex set.
"""

from __future__ import annotations

from alliancelab.alliances import check_instance_solution
from alliancelab.graphs import max_degree
from alliancelab.reductions.base import (
    GadgetBuilder,
    LiftReport,
    Provenance,
    ReducedInstance,
    ReductionInputError,
)
from alliancelab.sources import VcInstance, instance_digest


def _require_max_degree_3(inst: VcInstance) -> None:
    if inst.graph.n and max_degree(inst.graph) > 3:
        raise ReductionInputError("source graph must have maximum degree 3")


def vc3_to_oa_bipartite(inst: VcInstance) -> ReducedInstance:
    """Bipartite target: two copies of V, one vertex per edge, five hubs
    a,b,c,d,e each carrying 4k' pendants, with k' = k + 5."""
    _require_max_degree_3(inst)
    g = inst.graph
    n, edges = g.n, g.edges()
    kp = inst.k + 5
    b = GadgetBuilder()
    v0 = [b.add(f"V0[{i}]") for i in range(n)]
    v1 = [b.add(f"V1[{i}]") for i in range(n)]
    e0 = [b.add(f"E0[{j}]") for j in range(len(edges))]
    for j, (x, y) in enumerate(edges):
        b.connect(v0[x], e0[j])
        b.connect(v0[y], e0[j])
    for i in range(n):
        b.connect(v0[i], v1[i])
    hubs = {name: b.add(name) for name in ("a", "b", "c", "d", "e")}
    for name, h in hubs.items():
        b.pendants(h, f"V{name}[{{}}]", 4 * kp)
    b.connect_all(hubs["a"], e0)
    b.connect_all(hubs["e"], e0)
    b.connect_all(hubs["b"], v1)
    b.connect_all(hubs["c"], v1)
    for name in ("a", "b", "c", "e"):
        b.connect(hubs["d"], hubs[name])

    instance, roles = b.build(r=kp, strength=1)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("vc-bipartite", instance_digest(inst), {
            "r": kp,
            "k": inst.k,
            "n": n,
            "m": len(edges),
        }),
    )


def stated_bipartition(ri: ReducedInstance) -> tuple[frozenset[int], frozenset[int]]:
    """The construction's bipartition: {d} with V1, E0 and the pendants of
    a, b, c, e on one side; a, b, c, e with V0 and d's pendants on the
    other."""
    side1 = {ri.vertex("d")}
    for prefix in ("V1[", "E0[", "Va[", "Vb[", "Vc[", "Ve["):
        side1.update(ri.vertices_with_prefix(prefix))
    side2 = {ri.vertex(h) for h in ("a", "b", "c", "e")}
    side2.update(ri.vertices_with_prefix("Vd["))
    side2.update(ri.vertices_with_prefix("V0["))
    return frozenset(side1), frozenset(side2)


def lift_vc_bipartite(ri: ReducedInstance, inst: VcInstance,
                      cover: frozenset[int]) -> LiftReport:
    sol = {ri.vertex(f"V0[{v}]") for v in cover}
    sol.update(ri.vertex(h) for h in ("a", "b", "c", "d", "e"))
    sol = frozenset(sol)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_vc_bipartite(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    """Normalise edge vertices out of the solution (each is swapped for its
    lowest cover-copy neighbour), then read off the chosen copies."""
    n, m = ri.provenance.params["n"], ri.provenance.params["m"]
    chosen = {i for i in range(n) if ri.vertex(f"V0[{i}]") in alliance}
    g = ri.instance.graph
    v0_index = {ri.vertex(f"V0[{i}]"): i for i in range(n)}
    for j in range(m):
        ej = ri.vertex(f"E0[{j}]")
        if ej in alliance:
            nbrs = sorted(v0_index[u] for u in g.neighbors(ej) if u in v0_index)
            if nbrs and not any(i in chosen for i in nbrs):
                chosen.add(nbrs[0])
    return frozenset(chosen)


def vc3_to_oa_split(inst: VcInstance) -> ReducedInstance:
    """Split target: edge vertices and a forcing set Y of m+1 vertices form
    a clique of size 2m+1; the original vertices and a heavy independent
    set X of 4(n+m) vertices hang off it, with k' = k + m + 1."""
    _require_max_degree_3(inst)
    g = inst.graph
    n, edges = g.n, g.edges()
    m = len(edges)
    kp = inst.k + m + 1
    b = GadgetBuilder()
    v = [b.add(f"V[{i}]") for i in range(n)]
    ve = [b.add(f"Ve[{j}]") for j in range(m)]
    for j, (x, y) in enumerate(edges):
        b.connect(v[x], ve[j])
        b.connect(v[y], ve[j])
    b.clique(ve)
    yy = b.add_many("Y[{}]", m + 1)
    b.clique(yy)
    for e in ve:
        b.connect_all(e, yy)
    xx = b.add_many("X[{}]", 4 * (n + m))
    for x in xx:
        b.connect_all(x, yy)

    instance, roles = b.build(r=kp, strength=1)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("vc-split", instance_digest(inst), {
            "r": kp,
            "k": inst.k,
            "n": n,
            "m": m,
        }),
    )


def stated_split(ri: ReducedInstance) -> tuple[frozenset[int], frozenset[int]]:
    """Clique part: edge vertices with Y; independent part: V with X."""
    clique = set(ri.vertices_with_prefix("Ve["))
    clique.update(ri.vertices_with_prefix("Y["))
    indep = set(ri.vertices_with_prefix("V["))
    indep.update(ri.vertices_with_prefix("X["))
    return frozenset(clique), frozenset(indep)


def lift_vc_split(ri: ReducedInstance, inst: VcInstance,
                  cover: frozenset[int]) -> LiftReport:
    sol = {ri.vertex(f"V[{v}]") for v in cover}
    sol.update(ri.vertices_with_prefix("Y["))
    sol = frozenset(sol)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_vc_split(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    """Normalisation then readback: swap each chosen edge vertex for its
    lowest original-vertex neighbour (unless already covered), drop X,
    intersect with the original copies."""
    n, m = ri.provenance.params["n"], ri.provenance.params["m"]
    chosen = {i for i in range(n) if ri.vertex(f"V[{i}]") in alliance}
    g = ri.instance.graph
    v_index = {ri.vertex(f"V[{i}]"): i for i in range(n)}
    for j in range(m):
        ej = ri.vertex(f"Ve[{j}]")
        if ej in alliance:
            nbrs = sorted(v_index[u] for u in g.neighbors(ej) if u in v_index)
            if nbrs and not any(i in chosen for i in nbrs):
                chosen.add(nbrs[0])
    return frozenset(chosen)
