"""Seeded instance generators for the test harness.

Everything here is deterministic per seed.  Generators that feed the lift
tier plant a witness, so the produced instances are yes-instances by
construction (the oracles re-confirm); no-instance variants are produced
by tightening the bound below the planted optimum.
"""

from __future__ import annotations

import random
from typing import Optional

from alliancelab.alliances import AllianceInstance
from alliancelab.graphs import ChordDiagram, Graph, graph_from_edge_list, is_connected
from alliancelab.reductions.base import Provenance, ReducedInstance
from alliancelab.solvers import SearchBudget, solve_bruteforce, min_vertex_cover_exact
from alliancelab.sources import (
    CircleDsInstance,
    ClosestStringInstance,
    DsInstance,
    MrssInstance,
    PhsInstance,
    VcInstance,
    oracle_dominating_set,
)

DESK_MAX_N = 20


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic per seed."""
    if n > DESK_MAX_N:
        raise ValueError(f"n={n} exceeds desk-scale cap {DESK_MAX_N}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph_from_edge_list(n, edges)


def gen_random_vc3(n: int, seed: int, k: Optional[int] = None) -> VcInstance:
    """Random graph of maximum degree 3, by rejection; k defaults to the
    exact minimum cover size, making the instance a yes-instance."""
    rng = random.Random(seed)
    for _ in range(10000):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 2.5 / max(n, 2)]
        deg = [0] * n
        ok = True
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if all(d <= 3 for d in deg):
            g = graph_from_edge_list(n, edges)
            if k is None:
                k = len(min_vertex_cover_exact(g))
            return VcInstance(g, k, max_degree_3=True)
    raise RuntimeError("rejection sampling failed to find a max-degree-3 graph")


def gen_random_mrss(k: int, n: int, max_entry: int, seed: int,
                    yes: bool = True) -> MrssInstance:
    """MRSS instance with nonzero vectors and nonzero column sums.  When
    ``yes``, the target is the sum of a planted subset (with slack), so a
    witness exists; otherwise the target is one past a column sum."""
    rng = random.Random(seed)
    while True:
        vectors = []
        for _ in range(n):
            vec = list(rng.randint(0, max_entry) for _ in range(k))
            if max(vec) == 0:
                vec[rng.randrange(k)] = 1
            vectors.append(tuple(vec))
        col = [sum(v[i] for v in vectors) for i in range(k)]
        if all(c >= 1 for c in col):
            break
        seed += 7919
        rng = random.Random(seed)
    kprime = rng.randint(1, max(1, n // 2))
    planted = rng.sample(range(n), kprime)
    target = []
    for i in range(k):
        tot = sum(vectors[j][i] for j in planted)
        target.append(max(0, tot - rng.randint(0, 1)))
    if not yes:
        bump = rng.randrange(k)
        target[bump] = col[bump] + 1
    return MrssInstance(k, kprime, tuple(vectors), tuple(target))


def gen_random_phs(k: int, sets: int, seed: int) -> PhsInstance:
    """Thin-set family built around a planted permutation, so a hitting
    permutation exists."""
    rng = random.Random(seed)
    perm = list(range(k))
    rng.shuffle(perm)
    family = []
    for _ in range(sets):
        rows = sorted(rng.sample(range(k), rng.randint(1, k)))
        hit_row = rng.choice(rows)
        cells = set()
        for i in rows:
            if i == hit_row:
                cells.add((i, perm[i]))
            else:
                cells.add((i, rng.randrange(k)))
        family.append(frozenset(cells))
    return PhsInstance(k, tuple(family))


def gen_random_strings(k: int, n: int, d: int, seed: int) -> ClosestStringInstance:
    """Strings within distance d of a planted centre."""
    rng = random.Random(seed)
    centre = [rng.choice("01") for _ in range(n)]
    strings = []
    for _ in range(k):
        s = centre[:]
        for pos in rng.sample(range(n), rng.randint(0, min(d, n))):
            s[pos] = "1" if s[pos] == "0" else "0"
        strings.append("".join(s))
    return ClosestStringInstance(tuple(strings), d)


def gen_cycle_diagram(n: int, k: Optional[int] = None) -> CircleDsInstance:
    """Chord diagram realising the cycle C_n: chord i occupies positions
    2i and 2i+3 (mod 2n); the minimum dominating set of a cycle has size
    ceil(n/3)."""
    if n < 3:
        raise ValueError("cycles need n >= 3")
    seq: list = [None] * (2 * n)
    for i in range(n):
        seq[2 * i] = i
        seq[(2 * i + 3) % (2 * n)] = i
    if k is None:
        k = -(-n // 3)
    return CircleDsInstance(ChordDiagram(tuple(seq)), k)


def gen_random_circle(n: int, seed: int) -> CircleDsInstance:
    """Random chord diagram on n chords with minimum degree >= 2 in the
    realised graph, by rejection; k is the exact minimum dominating set."""
    rng = random.Random(seed)
    from alliancelab.graphs import chord_diagram_to_graph, min_degree

    for _ in range(10000):
        seq = [i for i in range(n)] * 2
        rng.shuffle(seq)
        cd = ChordDiagram(tuple(seq))
        g = chord_diagram_to_graph(cd)
        if min_degree(g) >= 2:
            for kk in range(1, n + 1):
                if oracle_dominating_set(DsInstance(g, kk)) is not None:
                    return CircleDsInstance(cd, kk)
    raise RuntimeError("rejection sampling failed to find a min-degree-2 diagram")


def gen_grid(w: int, h: int, k: Optional[int] = None) -> DsInstance:
    """Grid graph (planar and connected) as a planar dominating-set source;
    k defaults to the exact minimum dominating set size."""
    n = w * h
    if n > DESK_MAX_N:
        raise ValueError(f"grid {w}x{h} exceeds desk-scale cap {DESK_MAX_N}")
    edges = []
    for y in range(h):
        for x in range(w):
            v = y * w + x
            if x + 1 < w:
                edges.append((v, v + 1))
            if y + 1 < h:
                edges.append((v, v + w))
    g = graph_from_edge_list(n, edges)
    if k is None:
        for kk in range(1, n + 1):
            if oracle_dominating_set(DsInstance(g, kk)) is not None:
                k = kk
                break
    return DsInstance(g, k)


def gen_random_planar_ds(seed: int) -> DsInstance:
    """Connected subgraph of a small grid (subgraphs of planar graphs stay
    planar), with the exact minimum dominating set as the bound."""
    rng = random.Random(seed)
    w, h = rng.choice([(2, 2), (3, 2), (3, 3), (4, 2)])
    base = gen_grid(w, h, k=0).graph
    edges = list(base.edges())
    for _ in range(100):
        keep = [e for e in edges if rng.random() < 0.85]
        g = graph_from_edge_list(base.n, keep)
        if is_connected(g):
            for kk in range(1, g.n + 1):
                if oracle_dominating_set(DsInstance(g, kk)) is not None:
                    return DsInstance(g, kk)
    return gen_grid(w, h)


def gen_random_oaf(seed: int) -> tuple[ReducedInstance, frozenset[int]]:
    """Small synthetic offensive-alliance instance with a forbidden set
    satisfying the structural promise, plus a brute-force witness.

    Construction: random graph, then pendant pairs (vertex + fresh leaf,
    both forbidden), which satisfies the degree-one conditions by
    construction.  The bound r is the brute-force minimum, so the instance
    is a yes-instance.  Used as the source pool for the pendant-tree stage,
    whose chained inputs are too large to materialise.
    """
    attempt = 0
    while True:
        rng = random.Random(seed * 1000003 + attempt)
        n0 = rng.randint(4, 6)
        base = gen_random_graph(n0, 0.45, rng.randrange(2**30))
        edges = list(base.edges())
        n = n0
        forbidden = set()
        hubs = rng.sample(range(n0), rng.randint(1, 2))
        for hub in hubs:
            leaf = n
            n += 1
            edges.append((hub, leaf))
            forbidden.add(hub)
            forbidden.add(leaf)
        g = graph_from_edge_list(n, edges)
        inst = AllianceInstance(g, r=n, strength=1, forbidden=frozenset(forbidden))
        out = solve_bruteforce(inst, SearchBudget(max_candidates=2_000_000, max_seconds=30))
        if out.found and out.size <= 4:
            tight = AllianceInstance(g, r=out.size, strength=1, forbidden=frozenset(forbidden))
            roles = {v: (f"pf[{v}]" if v >= n0 else f"g[{v}]") for v in range(n)}
            ri = ReducedInstance(
                instance=tight,
                roles=roles,
                provenance=Provenance("synthetic-oaf", f"seed:{seed}", {"r": out.size}),
            )
            return ri, out.solution
        attempt += 1
