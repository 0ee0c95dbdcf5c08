"""Offensive alliance from closest string (binary alphabet).

Polynomial parameter transformation: letter vertices w[i,1] / w[i,2] encode
the candidate string position by position (character '1' is the first
letter, '0' the second), a forced clique of size 3n+2d+1 with heavy pendant
sets anchors every solution, and a string vertex per input checks the
Hamming-distance budget.  The size bound is 4n+2d+1, and the construction
comes with a declared vertex cover of size 18n+2d+2.
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
from alliancelab.sources import ClosestStringInstance, instance_digest

# character -> letter index in the two-letter alphabet
_LETTER = {"1": 1, "0": 2}


def closest_string_to_oa(inst: ClosestStringInstance, seed: Optional[int] = None) -> ReducedInstance:
    rng = random.Random(seed) if seed is not None else None
    n, d = inst.n, inst.d
    b = GadgetBuilder()
    v_x = [b.add(f"X[{i}]") for i in range(len(inst.strings))]
    w = {}
    for i in range(n):
        for j in (1, 2):
            w[(i, j)] = b.add(f"w[{i},{j}]")
    d_tri = b.add_many("Dtri[{}]", 3 * n + 2 * d + 1)
    b.clique(d_tri)
    for t, dd in enumerate(d_tri):
        b.pendants(dd, f"Dtri[{t}].p[{{}}]", 12 * n)
    d_sq = b.add_many("Dsq[{}]", 12 * n + 1)
    b.clique(d_sq)
    for idx, s in enumerate(inst.strings):
        for i, ch in enumerate(s):
            b.connect(v_x[idx], w[(i, _LETTER[ch])])
        b.connect_all(v_x[idx], d_tri)
        b.connect_all(v_x[idx], pick(d_sq, 4 * n, rng))
    for i in range(n):
        r_i = b.add(f"row[{i}]")
        b.connect(r_i, w[(i, 1)])
        b.connect(r_i, w[(i, 2)])
        b.connect_all(r_i, pick(d_tri, 3, rng))
        b.connect_all(r_i, pick(d_sq, 2, rng))

    r = 4 * n + 2 * d + 1
    instance, roles = b.build(r=r, strength=1)
    return ReducedInstance(
        instance=instance,
        roles=roles,
        provenance=Provenance("cs-oa", instance_digest(inst), {
            "r": r,
            "n": n,
            "d": d,
            "k_strings": len(inst.strings),
            "declared_cover_size": 18 * n + 2 * d + 2,
        }),
    )


def declared_cover(ri: ReducedInstance) -> frozenset[int]:
    """The construction's stated vertex cover: rows, letter vertices, and
    both cliques (pendants and string vertices excluded)."""
    n = ri.provenance.params["n"]
    cover = set(ri.vertices_with_prefix("row["))
    cover.update(ri.vertices_with_prefix("w["))
    cover.update(ri.vertices_with_prefix("Dsq["))
    cover.update(ri.vertex(f"Dtri[{t}]") for t in range(3 * n + 2 * ri.provenance.params["d"] + 1))
    return frozenset(cover)


def lift_closest_string(ri: ReducedInstance, inst: ClosestStringInstance,
                        y: str) -> LiftReport:
    """Forced clique plus the letter vertex selected by y at each position."""
    n, d = ri.provenance.params["n"], ri.provenance.params["d"]
    sol = {ri.vertex(f"Dtri[{t}]") for t in range(3 * n + 2 * d + 1)}
    for i, ch in enumerate(y):
        sol.add(ri.vertex(f"w[{i},{_LETTER[ch]}]"))
    sol = frozenset(sol)
    return LiftReport(sol, check_instance_solution(ri.instance, sol), len(sol), ri.instance.r)


def project_closest_string(ri: ReducedInstance, alliance: frozenset[int]) -> str:
    """Read the string back from letter-vertex membership; positions where
    neither or both letters were taken read as the second letter, which
    only matters for degenerate inputs."""
    n = ri.provenance.params["n"]
    chars = []
    for i in range(n):
        chars.append("1" if ri.vertex(f"w[{i},1]") in alliance else "0")
    return "".join(chars)
