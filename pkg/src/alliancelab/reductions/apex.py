"""Strong offensive alliance from planar dominating set, on an apex target.

Every edge of the source gets a parallel path through a fresh edge vertex
(the subdivision vertex is added directly; no multigraph is ever
materialised) with three pendants, and a single hub x is wired to all of
them, so deleting x leaves a planar graph.  The hub pair x, x' shares a
heavy pendant set that forces both into any solution.  Planarity of the
source is asserted by the caller; the artifact checks only the edge-count
necessary condition on the output minus x.
"""

from __future__ import annotations

from alliancelab.alliances import check_instance_solution
from alliancelab.graphs import is_connected
from alliancelab.reductions.base import (
    GadgetBuilder,
    LiftReport,
    Provenance,
    ReducedInstance,
    ReductionInputError,
)
from alliancelab.sources import DsInstance, instance_digest


def pds_to_soa_apex(inst: DsInstance) -> ReducedInstance:
    if not is_connected(inst.graph):
        raise ReductionInputError("source graph must be connected")
    g = inst.graph
    n, edges = g.n, g.edges()
    m = len(edges)
    b = GadgetBuilder()
    for i in range(n):
        b.add(f"V[{i}]")
    for x, y in edges:
        b.connect(x, y)
    ve = []
    hs = []
    for j, (x, y) in enumerate(edges):
        vj = b.add(f"ve[{j}]")
        ve.append(vj)
        b.connect(vj, x)
        b.connect(vj, y)
        hs.extend(b.pendants(vj, f"h[{j}][{{}}]", 3))
    hub_x = b.add("x")
    hub_xp = b.add("xp")
    shared = b.add_many("Vx[{}]", 6 * n)
    for p in shared:
        b.connect(hub_x, p)
        b.connect(hub_xp, p)
    b.connect_all(hub_x, ve)
    b.connect_all(hub_x, hs)

    r = m + inst.k + 2
    instance, roles = b.build(r=r, strength=2)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("pds-apex", instance_digest(inst), {
            "r": r,
            "k": inst.k,
            "n": n,
            "m": m,
        }),
        modulator=frozenset({hub_x}),
    )


def lift_apex(ri: ReducedInstance, inst: DsInstance,
              dominating: frozenset[int]) -> LiftReport:
    """Dominating set plus both hubs plus every edge vertex."""
    sol = {ri.vertex(f"V[{v}]") for v in dominating}
    sol.add(ri.vertex("x"))
    sol.add(ri.vertex("xp"))
    sol.update(ri.vertices_with_prefix("ve["))
    sol = frozenset(sol)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_apex(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    n = ri.provenance.params["n"]
    return frozenset(v for v in alliance if v < n)


def apex_edge_count_condition(ri: ReducedInstance) -> tuple[int, int, bool]:
    """Necessary condition for planarity of the output minus the hub x:
    edge count at most 3 * vertices - 6 (vacuously true below 3 vertices).
    Returns (edges, bound, holds)."""
    g = ri.instance.graph
    x = ri.vertex("x")
    n_rest = g.n - 1
    m_rest = sum(1 for u, v in g.edges() if u != x and v != x)
    if n_rest < 3:
        return m_rest, m_rest, True
    bound = 3 * n_rest - 6
    return m_rest, bound, m_rest <= bound
