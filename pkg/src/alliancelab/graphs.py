"""Simple undirected graphs, chord diagrams, and structural predicates.

Graphs are immutable after construction: vertices are the integers
``0..n-1``, adjacency is a tuple of frozensets, and every operation here is
a pure function of its inputs.  The predicates in this module are the ones
the gadget reductions make claims about their outputs: 2-colourability,
split partitions, bounded-height forests after deleting a modulator, and
circle-graph realisability via chord diagrams.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

try:
    _popcount = int.bit_count
except AttributeError:  # pragma: no cover - pre-3.11 fallback
    def _popcount(x: int) -> int:
        return bin(x).count("1")


class GraphFormatError(ValueError):
    """Raised for malformed graph input (bad endpoint, self-loop, bad text)."""


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    Invariants (checked at construction): no self-loops, symmetric
    adjacency.  ``labels`` is an optional vertex -> role-tag mapping used by
    the reductions; it does not participate in equality.
    """

    __slots__ = ("n", "_adj", "labels", "_bits", "_edge_tuple", "had_duplicate_edges")

    def __init__(
        self,
        n: int,
        adjacency: Sequence[frozenset[int]],
        labels: Optional[dict[int, str]] = None,
        had_duplicate_edges: bool = False,
    ):
        if n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        if len(adjacency) != n:
            raise GraphFormatError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(adjacency):
            if v in nbrs:
                raise GraphFormatError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphFormatError(f"neighbour {u} of {v} out of range")
                if v not in adjacency[u]:
                    raise GraphFormatError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self._adj = tuple(frozenset(s) for s in adjacency)
        self.labels = dict(labels) if labels else None
        self.had_duplicate_edges = had_duplicate_edges
        self._bits: Optional[list[int]] = None
        self._edge_tuple: Optional[tuple[tuple[int, int], ...]] = None

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        if self._edge_tuple is None:
            self._edge_tuple = tuple(
                (u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v
            )
        return self._edge_tuple

    def adjacency_bits(self) -> list[int]:
        """Neighbourhoods as bitmasks; cached, used by the exact solvers."""
        if self._bits is None:
            self._bits = [
                sum(1 << u for u in nbrs) for nbrs in self._adj
            ]
        return self._bits

    def relabel(self, labels: Optional[dict[int, str]]) -> "Graph":
        return Graph(self.n, self._adj, labels, self.had_duplicate_edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edge_list(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Optional[dict[int, str]] = None,
) -> Graph:
    """Build a simple graph from an edge list.

    Out-of-range endpoints and self-loops are rejected with the offending
    edge index; duplicate edges are collapsed and flagged on the result via
    ``had_duplicate_edges``.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    dup = False
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {i}: endpoint out of range: ({u}, {v})")
        if u == v:
            raise GraphFormatError(f"edge {i}: self-loop at vertex {u}")
        if v in adj[u]:
            dup = True
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, [frozenset(s) for s in adj], labels, had_duplicate_edges=dup)


def write_edge_list(g: Graph) -> str:
    """Serialise to the text format: first line ``n m``, then ``u v`` lines."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` text format produced by write_edge_list."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for i, ln in enumerate(lines[1:]):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line {i}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edge_list(n, edges)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphFormatError("degree extremes undefined on the empty graph")
    return min(g.degree(v) for v in range(g.n))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphFormatError("degree extremes undefined on the empty graph")
    return max(g.degree(v) for v in range(g.n))


def is_bipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Return a bipartition ``(side0, side1)`` or None when an odd cycle exists.

    Breadth-first 2-colouring, component roots coloured 0 in ascending
    vertex order; the returned partition is re-verified by a full edge scan.
    """
    color: list[int] = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    for u, v in g.edges():
        assert (u in side0) != (v in side0), "bipartition verification failed"
    return side0, side1


def is_split(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Return ``(clique, independent)`` if the vertex set splits, else None.

    Uses the degree-sequence characterisation: with degrees sorted
    non-increasingly and h = max{i : d_i >= i-1}, the graph is split iff
    sum(d_1..d_h) == h(h-1) + sum(d_{h+1}..d_n); the h largest-degree
    vertices then form the clique part.  A final explicit verification pass
    checks the returned partition.
    """
    if g.n == 0:
        return frozenset(), frozenset()
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    h = 0
    for i in range(g.n):
        if degs[i] >= i:
            h = i + 1
    if sum(degs[:h]) != h * (h - 1) + sum(degs[h:]):
        return None
    clique = frozenset(order[:h])
    indep = frozenset(order[h:])
    cl = sorted(clique)
    for i, u in enumerate(cl):
        for v in cl[i + 1:]:
            assert g.has_edge(u, v), "split verification failed: clique part"
    for u, v in g.edges():
        assert not (u in indep and v in indep), "split verification failed: independent part"
    return clique, indep


def forest_height_after_deletion(g: Graph, deleted: frozenset[int]) -> Optional[int]:
    """Max center-rooted height over tree components of ``g - deleted``.

    Returns None when a cycle survives the deletion.  Height is counted in
    edges and each component is rooted to minimise height, i.e. height =
    ceil(diameter / 2); an isolated vertex has height 0.
    """
    for v in deleted:
        if not 0 <= v < g.n:
            raise GraphFormatError(f"deleted vertex {v} out of range")
    alive = [v for v in range(g.n) if v not in deleted]
    alive_set = set(alive)
    seen: set[int] = set()
    best = 0
    for root in alive:
        if root in seen:
            continue
        comp, parent = _bfs_component(g, root, alive_set)
        seen.update(comp)
        comp_edges = sum(1 for v in comp for u in g.neighbors(v) if u in comp) // 2
        if comp_edges != len(comp) - 1:
            return None
        far, _ = _bfs_farthest(g, root, alive_set)
        _, diameter = _bfs_farthest(g, far, alive_set)
        best = max(best, -(-diameter // 2))
    return best


def _bfs_component(g: Graph, root: int, alive: set[int]) -> tuple[list[int], dict[int, int]]:
    comp = [root]
    parent = {root: root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in alive and u not in parent:
                parent[u] = v
                comp.append(u)
                queue.append(u)
    return comp, parent


def _bfs_farthest(g: Graph, root: int, alive: set[int]) -> tuple[int, int]:
    """Farthest vertex from root within ``alive`` and its distance."""
    dist = {root: 0}
    queue = deque([root])
    far, far_d = root, 0
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in alive and u not in dist:
                dist[u] = dist[v] + 1
                if dist[u] > far_d:
                    far, far_d = u, dist[u]
                queue.append(u)
    return far, far_d


@dataclass(frozen=True)
class ChordDiagram:
    """Circle-graph representation: a circular sequence of chord endpoints.

    ``endpoints`` lists chord identifiers around the circle; every chord
    identifier appears exactly twice.  Two chords are adjacent in the
    realised graph iff their endpoint pairs interleave around the circle.
    """

    endpoints: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "endpoints", tuple(self.endpoints))
        counts: dict = {}
        for e in self.endpoints:
            counts[e] = counts.get(e, 0) + 1
        bad = sorted((str(k) for k, c in counts.items() if c != 2))
        if bad:
            raise GraphFormatError(
                f"malformed chord diagram: identifiers {bad} do not appear exactly twice"
            )

    @property
    def chord_count(self) -> int:
        return len(self.endpoints) // 2

    def chord_ids(self) -> list:
        """Chord identifiers in sorted order (the vertex numbering)."""
        return sorted(set(self.endpoints))

    def positions(self) -> dict:
        """Map chord id -> (first position, second position)."""
        pos: dict = {}
        for i, e in enumerate(self.endpoints):
            pos.setdefault(e, []).append(i)
        return {k: tuple(v) for k, v in pos.items()}


def chord_diagram_to_graph(cd: ChordDiagram) -> Graph:
    """Realise a chord diagram as a graph: vertices are chords in sorted-id
    order, and two chords are adjacent iff their endpoints interleave."""
    ids = cd.chord_ids()
    index = {c: i for i, c in enumerate(ids)}
    pos = cd.positions()
    n = len(ids)
    edges = []
    for i, ci in enumerate(ids):
        a1, a2 = pos[ci]
        for cj in ids[i + 1:]:
            b1, b2 = pos[cj]
            # exactly one endpoint of cj strictly inside (a1, a2)
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                edges.append((index[ci], index[cj]))
    return graph_from_edge_list(n, edges)


def connected_components(g: Graph) -> list[frozenset[int]]:
    comps = []
    seen: set[int] = set()
    for root in range(g.n):
        if root in seen:
            continue
        comp, _ = _bfs_component(g, root, set(range(g.n)))
        seen.update(comp)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
