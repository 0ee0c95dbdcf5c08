"""Source problems for the reductions, with brute-force decision oracles.

Every oracle is exhaustive by design and therefore capped at desk scale;
witnesses are canonicalised (least cardinality, then lexicographically
least) so tests are reproducible.  Each oracle's witness re-validates
against its defining predicate through a separate checker function that
does no search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from alliancelab.graphs import (
    ChordDiagram,
    Graph,
    _popcount,
    chord_diagram_to_graph,
    max_degree,
    min_degree,
)
from alliancelab.solvers import SearchBudget, DEFAULT_BUDGET, min_vertex_cover_exact

# Desk-scale caps: the oracles are exponential on purpose.
MAX_VECTORS = 16
MAX_DIMENSION = 4
MAX_ENTRY = 8
MAX_STRING_LENGTH = 20
MAX_GRAPH_VERTICES = 20
MAX_GRID_SIDE = 8


class DeskScaleError(ValueError):
    """Raised when an instance exceeds the configured desk-scale caps."""


@dataclass(frozen=True)
class MrssInstance:
    """Multidimensional relaxed subset sum: pick at most kprime of the
    vectors so that the componentwise sum dominates the target."""

    k: int
    kprime: int
    vectors: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(tuple(v) for v in self.vectors))
        object.__setattr__(self, "target", tuple(self.target))
        if self.k < 1 or self.kprime < 0:
            raise ValueError("k must be >= 1 and kprime >= 0")
        if self.k > MAX_DIMENSION:
            raise DeskScaleError(f"dimension {self.k} exceeds cap {MAX_DIMENSION}")
        if len(self.vectors) > MAX_VECTORS:
            raise DeskScaleError(f"{len(self.vectors)} vectors exceed cap {MAX_VECTORS}")
        if len(self.target) != self.k:
            raise ValueError("target dimension mismatch")
        for s in self.vectors:
            if len(s) != self.k:
                raise ValueError("vector dimension mismatch")
            for x in s:
                if x < 0 or x > MAX_ENTRY:
                    raise DeskScaleError(f"entry {x} outside unary-scale range 0..{MAX_ENTRY}")
        for t in self.target:
            if t < 0:
                raise ValueError("target entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.vectors)


def is_mrss_witness(inst: MrssInstance, idxs: frozenset[int]) -> bool:
    if len(idxs) > inst.kprime or any(not 0 <= i < inst.n for i in idxs):
        return False
    sums = [sum(inst.vectors[i][c] for i in idxs) for c in range(inst.k)]
    return all(sums[c] >= inst.target[c] for c in range(inst.k))


def oracle_mrss(inst: MrssInstance) -> Optional[frozenset[int]]:
    """Least-cardinality, lexicographically least index subset whose sum
    dominates the target, or None."""
    for size in range(0, inst.kprime + 1):
        for combo in combinations(range(inst.n), size):
            if is_mrss_witness(inst, frozenset(combo)):
                return frozenset(combo)
    return None


@dataclass(frozen=True)
class PhsInstance:
    """k x k permutation hitting set with thin sets.  Cells are 0-based
    (row, column) pairs; thinness means each family member has at most one
    cell per row."""

    k: int
    family: tuple[frozenset[tuple[int, int]], ...]

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(frozenset(f) for f in self.family))
        if not 1 <= self.k <= 6:
            raise DeskScaleError("grid side must be in 1..6 (oracle is factorial)")
        for f in self.family:
            rows = [i for i, _ in f]
            for i, j in f:
                if not (0 <= i < self.k and 0 <= j < self.k):
                    raise ValueError(f"cell ({i},{j}) outside [k] x [k]")
            if len(rows) != len(set(rows)):
                raise ValueError("thinness violated: a set has two cells in one row")


def is_phs_witness(inst: PhsInstance, cells: frozenset[tuple[int, int]]) -> bool:
    rows = sorted(i for i, _ in cells)
    cols = sorted(j for _, j in cells)
    if rows != list(range(inst.k)) or cols != list(range(inst.k)):
        return False
    return all(cells & f for f in inst.family)


def oracle_phs(inst: PhsInstance) -> Optional[frozenset[tuple[int, int]]]:
    """A permutation set (one cell per row, all columns distinct) hitting
    every family member; permutations tried in lexicographic order."""
    for perm in permutations(range(inst.k)):
        cells = frozenset((i, perm[i]) for i in range(inst.k))
        if is_phs_witness(inst, cells):
            return cells
    return None


@dataclass(frozen=True)
class ClosestStringInstance:
    """Closest string over a binary alphabet.  Strings use the characters
    '1' and '0' for the two letters."""

    strings: tuple[str, ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(self.strings))
        if not self.strings:
            raise ValueError("need at least one string")
        if self.d < 0:
            raise ValueError("distance bound must be nonnegative")
        n = len(self.strings[0])
        if n > MAX_STRING_LENGTH:
            raise DeskScaleError(f"string length {n} exceeds cap {MAX_STRING_LENGTH}")
        for s in self.strings:
            if len(s) != n:
                raise ValueError("strings must have equal length")
            if set(s) - {"0", "1"}:
                raise ValueError("alphabet is binary: characters '0' and '1'")

    @property
    def n(self) -> int:
        return len(self.strings[0])


def hamming(x: str, y: str) -> int:
    """Number of positions where x and y differ."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


def is_central_string(inst: ClosestStringInstance, y: str) -> bool:
    return len(y) == inst.n and all(hamming(y, x) <= inst.d for x in inst.strings)


def oracle_closest_string(inst: ClosestStringInstance) -> Optional[str]:
    """First central string in lexicographic order ('0' < '1'), scanning
    all 2^n candidates with popcount distance tests."""
    n = inst.n
    if n == 0:
        return ""
    xs = [int(s, 2) for s in inst.strings]
    for cand in range(1 << n):
        if all(_popcount(cand ^ x) <= inst.d for x in xs):
            return format(cand, f"0{n}b")
    return None


@dataclass(frozen=True)
class VcInstance:
    graph: Graph
    k: int
    max_degree_3: bool = False

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        if self.graph.n > MAX_GRAPH_VERTICES:
            raise DeskScaleError(f"graph order {self.graph.n} exceeds cap {MAX_GRAPH_VERTICES}")
        if self.max_degree_3 and self.graph.n and max_degree(self.graph) > 3:
            raise ValueError("max_degree_3 flag set but a vertex has degree > 3")


@dataclass(frozen=True)
class DsInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        if self.graph.n > MAX_GRAPH_VERTICES:
            raise DeskScaleError(f"graph order {self.graph.n} exceeds cap {MAX_GRAPH_VERTICES}")


@dataclass(frozen=True)
class CircleDsInstance:
    """Dominating set on a circle graph given by its chord diagram; the
    realised chord graph must have minimum degree at least two."""

    diagram: ChordDiagram
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        g = chord_diagram_to_graph(self.diagram)
        if g.n > MAX_GRAPH_VERTICES:
            raise DeskScaleError(f"chord count {g.n} exceeds cap {MAX_GRAPH_VERTICES}")
        if g.n == 0 or min_degree(g) < 2:
            raise ValueError("chord graph has a vertex of degree < 2")

    @property
    def graph(self) -> Graph:
        return chord_diagram_to_graph(self.diagram)


def is_vertex_cover(g: Graph, s: frozenset[int]) -> bool:
    return all(u in s or v in s for u, v in g.edges())


def is_dominating_set(g: Graph, s: frozenset[int]) -> bool:
    if not s and g.n:
        return False
    return all(v in s or (g.neighbors(v) & s) for v in range(g.n))


def oracle_vertex_cover(inst: VcInstance, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[frozenset[int]]:
    """Minimum cover if its size is within the bound, else None."""
    cover = min_vertex_cover_exact(inst.graph, budget)
    return cover if len(cover) <= inst.k else None


def oracle_dominating_set(inst: DsInstance) -> Optional[frozenset[int]]:
    """Least-cardinality, lexicographically least dominating set of size at
    most k, by exhaustive size-ordered enumeration."""
    g = inst.graph
    if g.n == 0:
        return frozenset()
    closed = [g.adjacency_bits()[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for size in range(1, min(inst.k, g.n) + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= closed[v]
            if mask == full:
                return frozenset(combo)
    return None


def oracle_circle_ds(inst: CircleDsInstance) -> Optional[frozenset[int]]:
    return oracle_dominating_set(DsInstance(inst.graph, inst.k))


# --- JSON instance files -------------------------------------------------

def instance_to_json(inst) -> dict:
    """Serialise a source instance into the documented JSON shape."""
    if isinstance(inst, MrssInstance):
        return {
            "kind": "mrss",
            "k": inst.k,
            "kprime": inst.kprime,
            "vectors": [list(v) for v in inst.vectors],
            "target": list(inst.target),
        }
    if isinstance(inst, PhsInstance):
        return {
            "kind": "phs",
            "k": inst.k,
            "family": [sorted([list(c) for c in f]) for f in inst.family],
        }
    if isinstance(inst, ClosestStringInstance):
        return {"kind": "closest_string", "strings": list(inst.strings), "d": inst.d}
    if isinstance(inst, VcInstance):
        return {
            "kind": "vertex_cover",
            "n": inst.graph.n,
            "edges": [list(e) for e in inst.graph.edges()],
            "k": inst.k,
            "max_degree_3": inst.max_degree_3,
        }
    if isinstance(inst, DsInstance):
        return {
            "kind": "dominating_set",
            "n": inst.graph.n,
            "edges": [list(e) for e in inst.graph.edges()],
            "k": inst.k,
        }
    if isinstance(inst, CircleDsInstance):
        return {
            "kind": "circle_ds",
            "diagram": list(inst.diagram.endpoints),
            "k": inst.k,
        }
    raise TypeError(f"not a source instance: {type(inst)!r}")


def instance_from_json(data: dict):
    from alliancelab.graphs import graph_from_edge_list

    kind = data.get("kind")
    if kind == "mrss":
        return MrssInstance(data["k"], data["kprime"],
                            tuple(tuple(v) for v in data["vectors"]),
                            tuple(data["target"]))
    if kind == "phs":
        return PhsInstance(data["k"],
                           tuple(frozenset(tuple(c) for c in f) for f in data["family"]))
    if kind == "closest_string":
        return ClosestStringInstance(tuple(data["strings"]), data["d"])
    if kind == "vertex_cover":
        g = graph_from_edge_list(data["n"], [tuple(e) for e in data["edges"]])
        return VcInstance(g, data["k"], data.get("max_degree_3", False))
    if kind == "dominating_set":
        g = graph_from_edge_list(data["n"], [tuple(e) for e in data["edges"]])
        return DsInstance(g, data["k"])
    if kind == "circle_ds":
        return CircleDsInstance(ChordDiagram(tuple(data["diagram"])), data["k"])
    raise ValueError(f"unknown instance kind: {kind!r}")


def instance_digest(inst) -> str:
    """Stable content digest used in reduction provenance."""
    import hashlib

    blob = json.dumps(instance_to_json(inst), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]
