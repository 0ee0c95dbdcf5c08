"""Shared machinery for the gadget reductions.

Every reduction returns a ReducedInstance bundling the target alliance
instance with a total vertex -> role map (the stable interface for lifting
and projecting solutions; raw indices are never part of a contract), a
provenance record whose parameters re-evaluate to the instance's size
bound, and a designated modulator for structural checks.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from alliancelab.alliances import AllianceInstance, ViolationReport
from alliancelab.graphs import ChordDiagram, Graph


class ReductionInputError(ValueError):
    """Source instance violates a reduction precondition."""


class ReductionCapacityError(RuntimeError):
    """The construction would materialise more vertices than the cap allows.

    The message carries the exact predicted size; the construction itself is
    polynomial, but its constants can exceed desk scale (the pendant-tree
    stage in particular grows quadratically in the size bound).
    """

    def __init__(self, predicted_vertices: int, cap: int, detail: str = ""):
        self.predicted_vertices = predicted_vertices
        self.cap = cap
        super().__init__(
            f"construction would create {predicted_vertices} vertices "
            f"(cap {cap}){': ' + detail if detail else ''}"
        )


@dataclass(frozen=True)
class Provenance:
    reduction: str
    source_digest: str
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "reduction": self.reduction,
            "source_digest": self.source_digest,
            "params": self.params,
        }


@dataclass(frozen=True)
class ReducedInstance:
    instance: AllianceInstance
    roles: dict[int, str]
    provenance: Provenance
    modulator: frozenset[int] = frozenset()
    diagram: Optional[ChordDiagram] = None

    def __post_init__(self):
        if set(self.roles) != set(range(self.instance.graph.n)):
            raise ValueError("role map must be total over the vertex set")

    @cached_property
    def _by_role(self) -> dict[str, int]:
        rev = {}
        for v, role in self.roles.items():
            if role in rev:
                raise ValueError(f"duplicate role {role!r}")
            rev[role] = v
        return rev

    def vertex(self, role: str) -> int:
        return self._by_role[role]

    def vertices_with_prefix(self, prefix: str) -> list[int]:
        """Vertices whose role starts with prefix, in ascending id order."""
        return sorted(v for v, role in self.roles.items() if role.startswith(prefix))

    def roles_to_json(self) -> dict:
        return {str(v): self.roles[v] for v in sorted(self.roles)}


@dataclass(frozen=True)
class LiftReport:
    """Result of lifting a source witness into the reduced instance."""

    solution: frozenset[int]
    verification: ViolationReport
    size: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.verification.ok

    def to_json(self) -> dict:
        return {
            "solution": sorted(self.solution),
            "size": self.size,
            "bound": self.bound,
            "verification": self.verification.to_json(),
        }


class GadgetBuilder:
    """Incremental construction of a labelled constrained instance.

    Vertices are numbered in the order they are added, which fixes the
    documented construction order and makes every build deterministic.
    """

    def __init__(self):
        self._adj: list[set[int]] = []
        self._roles: list[str] = []
        self.forbidden: set[int] = set()
        self.necessary: set[int] = set()

    @classmethod
    def from_instance(cls, inst: AllianceInstance, roles: dict[int, str],
                      keep_forbidden: bool = True, keep_necessary: bool = False):
        b = cls()
        b._adj = [set(inst.graph.neighbors(v)) for v in range(inst.graph.n)]
        b._roles = [roles[v] for v in range(inst.graph.n)]
        if keep_forbidden:
            b.forbidden = set(inst.forbidden)
        if keep_necessary:
            b.necessary = set(inst.necessary)
        return b

    @property
    def n(self) -> int:
        return len(self._adj)

    def add(self, role: str, forbidden: bool = False, necessary: bool = False) -> int:
        v = len(self._adj)
        self._adj.append(set())
        self._roles.append(role)
        if forbidden:
            self.forbidden.add(v)
        if necessary:
            self.necessary.add(v)
        return v

    def add_many(self, fmt: str, count: int, forbidden: bool = False,
                 necessary: bool = False) -> list[int]:
        return [self.add(fmt.format(i), forbidden, necessary) for i in range(count)]

    def connect(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def connect_all(self, u: int, vs) -> None:
        for v in vs:
            self.connect(u, v)

    def clique(self, vs) -> None:
        vs = list(vs)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                self.connect(u, v)

    def pendants(self, u: int, fmt: str, count: int, forbidden: bool = False,
                 necessary: bool = False) -> list[int]:
        vs = self.add_many(fmt, count, forbidden, necessary)
        self.connect_all(u, vs)
        return vs

    def build(self, r: int, strength: int, exact: bool = False) -> tuple[AllianceInstance, dict[int, str]]:
        roles = dict(enumerate(self._roles))
        g = Graph(self.n, [frozenset(s) for s in self._adj], labels=roles)
        inst = AllianceInstance(
            graph=g, r=r, strength=strength,
            forbidden=frozenset(self.forbidden),
            necessary=frozenset(self.necessary),
            exact=exact,
        )
        return inst, roles


def reduced_digest(ri: ReducedInstance) -> str:
    """Stable digest of a reduced instance, for provenance of chained stages."""
    blob = json.dumps({
        "n": ri.instance.graph.n,
        "edges": [list(e) for e in ri.instance.graph.edges()],
        "r": ri.instance.r,
        "strength": ri.instance.strength,
        "forbidden": sorted(ri.instance.forbidden),
        "necessary": sorted(ri.instance.necessary),
        "exact": ri.instance.exact,
    }, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def reduced_to_json(ri: ReducedInstance) -> dict:
    """Self-contained JSON for a reduced instance, usable as the input of a
    later chain stage."""
    inst = ri.instance
    return {
        "kind": "reduced",
        "n": inst.graph.n,
        "edges": [list(e) for e in inst.graph.edges()],
        "r": inst.r,
        "strength": inst.strength,
        "forbidden": sorted(inst.forbidden),
        "necessary": sorted(inst.necessary),
        "exact": inst.exact,
        "roles": {str(v): ri.roles[v] for v in sorted(ri.roles)},
        "provenance": ri.provenance.to_json(),
        "modulator": sorted(ri.modulator),
        "diagram": list(ri.diagram.endpoints) if ri.diagram is not None else None,
    }


def reduced_from_json(data: dict) -> ReducedInstance:
    from alliancelab.graphs import graph_from_edge_list

    if data.get("kind") != "reduced":
        raise ValueError("not a reduced-instance JSON (kind != 'reduced')")
    g = graph_from_edge_list(data["n"], [tuple(e) for e in data["edges"]])
    inst = AllianceInstance(
        graph=g,
        r=data["r"],
        strength=data["strength"],
        forbidden=frozenset(data["forbidden"]),
        necessary=frozenset(data["necessary"]),
        exact=data.get("exact", False),
    )
    prov = data.get("provenance", {})
    diagram = data.get("diagram")
    return ReducedInstance(
        instance=inst,
        roles={int(v): role for v, role in data["roles"].items()},
        provenance=Provenance(prov.get("reduction", "unknown"),
                              prov.get("source_digest", ""),
                              prov.get("params", {})),
        modulator=frozenset(data.get("modulator", ())),
        diagram=ChordDiagram(tuple(diagram)) if diagram is not None else None,
    )


def pick(items: list[int], count: int, rng=None) -> list[int]:
    """Deterministic stand-in for the constructions' 'any/arbitrary' choices:
    the first ``count`` items, or a seeded sample when fuzzing choice
    invariance."""
    if count < 0 or count > len(items):
        raise ValueError(f"cannot pick {count} from {len(items)}")
    if rng is None:
        return items[:count]
    return sorted(rng.sample(items, count))
