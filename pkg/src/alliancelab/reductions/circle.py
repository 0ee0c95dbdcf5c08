"""Offensive alliance from dominating set on circle graphs, staying inside
the class: the output comes with its own chord diagram.

Per source vertex v, two cliques of floor(d(v)/2) and ceil(d(v)/2) fresh
vertices are joined to v (one bundle per endpoint of v's chord), every
clique vertex gets 2r pendants, and consecutive chord visits around the
circle link the bundles: the last chord of one bundle crosses the first
chord of the next.  The same three operations are performed on the
endpoint sequence itself, so the emitted diagram realises the output graph
edge for edge; the two routes are computed independently and tested
against each other.
"""

from __future__ import annotations

from alliancelab.alliances import check_instance_solution
from alliancelab.graphs import ChordDiagram, min_degree
from alliancelab.reductions.base import (
    GadgetBuilder,
    LiftReport,
    Provenance,
    ReducedInstance,
    ReductionInputError,
)
from alliancelab.sources import CircleDsInstance, instance_digest


def circle_ds_to_oa(inst: CircleDsInstance) -> ReducedInstance:
    g = inst.graph
    if g.n == 0 or min_degree(g) < 2:
        raise ReductionInputError("chord graph must have minimum degree 2")
    ids = inst.diagram.chord_ids()
    index = {c: i for i, c in enumerate(ids)}
    seq = [index[e] for e in inst.diagram.endpoints]
    n = g.n
    m = g.m
    r = 2 * m + inst.k

    b = GadgetBuilder()
    for i in range(n):
        b.add(f"v[{i}]")
    for u, v in g.edges():
        b.connect(u, v)
    bundles: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        d = g.degree(v)
        c1 = b.add_many(f"C1[{v}][{{}}]", d // 2)
        c2 = b.add_many(f"C2[{v}][{{}}]", (d + 1) // 2)
        bundles[(v, 1)] = c1
        bundles[(v, 2)] = c2
        b.connect_all(v, c1 + c2)
        b.clique(c1)
        b.clique(c2)

    # occurrence number of each position in the endpoint sequence
    seen: dict[int, int] = {}
    occ: list[tuple[int, int]] = []
    for e in seq:
        seen[e] = seen.get(e, 0) + 1
        occ.append((e, seen[e]))

    # one bundle-to-bundle edge per consecutive pair around the circle
    for p in range(len(seq)):
        u, fu = occ[p]
        v, fv = occ[(p + 1) % len(seq)]
        b.connect(bundles[(u, fu)][-1], bundles[(v, fv)][0])

    for v in range(n):
        for which in (1, 2):
            for i, x in enumerate(bundles[(v, which)]):
                b.pendants(x, f"C{which}[{v}][{i}].sq[{{}}]", 2 * r)

    instance, roles = b.build(r=r, strength=1)
    diagram = _build_output_diagram(occ, bundles, roles, instance.graph.n, r)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("ds-circle", instance_digest(inst), {
            "r": r,
            "k": inst.k,
            "n": n,
            "m": m,
        }),
        diagram=diagram,
    )


def _build_output_diagram(occ, bundles, roles, total_vertices: int, r: int) -> ChordDiagram:
    """The three endpoint-sequence surgeries.

    (i)   around each occurrence of chord u, insert its bundle twice in the
          same order: [b1..bc] u [b1..bc]; the bundle chords then pairwise
          cross and all cross u, and nothing else;
    (ii)  swap the two adjacent endpoints at each junction between
          consecutive occurrences, crossing the last chord of one bundle
          with the first chord of the next;
    (iii) around one endpoint of each clique chord x, insert the 2r pendant
          chords nested ([p1..p2r] x [p2r..p1]), crossing exactly x.
    """
    out: list[int] = []
    pre_start: list[int] = []
    post_end: list[int] = []
    for (u, f) in occ:
        block = bundles[(u, f)]
        pre_start.append(len(out))
        out.extend(block)
        out.append(u)
        out.extend(block)
        post_end.append(len(out) - 1)
    total = len(occ)
    for p in range(total):
        i = post_end[p]
        j = pre_start[(p + 1) % total]
        out[i], out[j] = out[j], out[i]

    # pendant chords, numbered as in the graph route: after the originals
    # and all clique vertices, grouped per clique vertex in ascending order
    clique_vertices = sorted(v for vs in bundles.values() for v in vs)
    next_vertex = max(clique_vertices) + 1 if clique_vertices else len(occ) // 2
    for x in clique_vertices:
        anchor = out.index(x)
        pend = list(range(next_vertex, next_vertex + 2 * r))
        next_vertex += 2 * r
        out[anchor:anchor + 1] = pend + [x] + pend[::-1]
    assert next_vertex == total_vertices
    return ChordDiagram(tuple(out))


def lift_circle(ri: ReducedInstance, inst: CircleDsInstance,
                dominating: frozenset[int]) -> LiftReport:
    """Every clique vertex plus the dominating set: size 2m + |S| <= r.

    The dominating set is over the realised chord graph, whose vertex ids
    (sorted chord order) match the v[i] roles here."""
    sol = {v for v, role in ri.roles.items()
           if role.startswith("C") and ".sq[" not in role}
    for v in dominating:
        sol.add(ri.vertex(f"v[{v}]"))
    sol = frozenset(sol)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_circle(ri: ReducedInstance, alliance: frozenset[int]) -> frozenset[int]:
    n = ri.provenance.params["n"]
    return frozenset(v for v in alliance if v < n)
