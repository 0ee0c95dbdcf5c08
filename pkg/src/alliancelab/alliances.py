"""Degree-inequality verifiers for alliance variants.

For a vertex set S, write d_S(v) for the number of neighbours of v inside S
and d_Sc(v) = d(v) - d_S(v) for those outside.  A non-empty S is an
offensive alliance of strength ``ell`` when every boundary vertex
v in N(S) satisfies d_S(v) >= d_Sc(v) + ell (ell=1 plain, ell=2 strong),
and a defensive alliance when every v in S satisfies d_S(v)+1 >= d_Sc(v).

Constrained instances additionally carry a size bound r, a forbidden set
(barred from S), a necessary set (forced into S) and an exactness flag
(|S| == r instead of |S| <= r).  All checks return a ViolationReport whose
emptiness is equivalent to validity.
"""

from __future__ import annotations

from dataclasses import dataclass

from alliancelab.graphs import Graph

OFFENSIVE = 1
STRONG = 2


@dataclass(frozen=True)
class DegreeViolation:
    """A boundary (or member) vertex failing its degree inequality."""

    vertex: int
    in_degree: int   # d_S(v)
    out_degree: int  # d_Sc(v)
    slack: int       # required: in_degree >= out_degree + slack

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "d_S": self.in_degree,
            "d_Sc": self.out_degree,
            "required_slack": self.slack,
        }


@dataclass(frozen=True)
class ConstraintFailure:
    """A tagged non-degree failure: empty-set, size, forbidden, necessary,
    exactness, or forbidden-structure."""

    tag: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"tag": self.tag, "detail": self.detail}


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[DegreeViolation, ...] = ()
    constraint_failures: tuple[ConstraintFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations and not self.constraint_failures

    def merged(self, other: "ViolationReport") -> "ViolationReport":
        return ViolationReport(
            self.violations + other.violations,
            self.constraint_failures + other.constraint_failures,
        )

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [v.to_json() for v in self.violations],
            "constraint_failures": [c.to_json() for c in self.constraint_failures],
        }


VALID = ViolationReport()


@dataclass(frozen=True)
class AllianceInstance:
    """A constrained offensive-alliance instance.

    ``strength`` is the slack in the boundary inequality (1 = offensive,
    2 = strong offensive; arbitrary integers are accepted).  ``exact``
    switches the size constraint from |S| <= r to |S| == r.
    """

    graph: Graph
    r: int
    strength: int = OFFENSIVE
    forbidden: frozenset[int] = frozenset()
    necessary: frozenset[int] = frozenset()
    exact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "forbidden", frozenset(self.forbidden))
        object.__setattr__(self, "necessary", frozenset(self.necessary))
        if self.r < 0:
            raise ValueError("size bound r must be nonnegative")
        if self.forbidden & self.necessary:
            raise ValueError("forbidden and necessary sets intersect")
        for v in self.forbidden | self.necessary:
            if not 0 <= v < self.graph.n:
                raise ValueError(f"constraint vertex {v} out of range")


def boundary(g: Graph, s: frozenset[int]) -> frozenset[int]:
    """Open neighbourhood N(S): vertices outside S with a neighbour in S."""
    out: set[int] = set()
    for v in s:
        out.update(g.neighbors(v))
    return frozenset(out - set(s))


def check_offensive(g: Graph, s: frozenset[int], strength: int = OFFENSIVE) -> ViolationReport:
    """Check d_S(v) >= d_Sc(v) + strength for every v in N(S).

    The empty set is reported as a distinct constraint failure, never as
    valid: alliances are non-empty by definition.
    """
    s = frozenset(s)
    if not s:
        return ViolationReport(constraint_failures=(ConstraintFailure("empty-set"),))
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"solution vertex {v} out of range")
    bad = []
    for v in sorted(boundary(g, s)):
        d_in = sum(1 for u in g.neighbors(v) if u in s)
        d_out = g.degree(v) - d_in
        if d_in < d_out + strength:
            bad.append(DegreeViolation(v, d_in, d_out, strength))
    return ViolationReport(violations=tuple(bad))


def check_defensive(g: Graph, s: frozenset[int]) -> ViolationReport:
    """Check d_S(v) + 1 >= d_Sc(v) for every v in S itself."""
    s = frozenset(s)
    if not s:
        return ViolationReport(constraint_failures=(ConstraintFailure("empty-set"),))
    bad = []
    for v in sorted(s):
        d_in = sum(1 for u in g.neighbors(v) if u in s)
        d_out = g.degree(v) - d_in
        if d_in + 1 < d_out:
            bad.append(DegreeViolation(v, d_in, d_out, -1))
    return ViolationReport(violations=tuple(bad))


def check_instance_solution(inst: AllianceInstance, s: frozenset[int]) -> ViolationReport:
    """Full instance check: boundary inequalities at the instance strength,
    size window (1 <= |S| <= r, or |S| == r when exact), disjointness from
    the forbidden set, and containment of the necessary set."""
    s = frozenset(s)
    failures: list[ConstraintFailure] = []
    if inst.exact and len(s) != inst.r:
        failures.append(ConstraintFailure("exactness", f"|S|={len(s)} != r={inst.r}"))
    elif not inst.exact and len(s) > inst.r:
        failures.append(ConstraintFailure("size", f"|S|={len(s)} > r={inst.r}"))
    taken_forbidden = sorted(s & inst.forbidden)
    if taken_forbidden:
        failures.append(ConstraintFailure("forbidden", f"S contains {taken_forbidden}"))
    missing = sorted(inst.necessary - s)
    if missing:
        failures.append(ConstraintFailure("necessary", f"S misses {missing}"))
    base = check_offensive(inst.graph, s, inst.strength)
    return base.merged(ViolationReport(constraint_failures=tuple(failures)))


def validate_forbidden_structure(g: Graph, forbidden: frozenset[int]) -> ViolationReport:
    """Check the structural promise on forbidden sets: every degree-one
    forbidden vertex is adjacent to another forbidden vertex, and every
    forbidden vertex of degree greater than one is adjacent to a degree-one
    forbidden vertex."""
    forbidden = frozenset(forbidden)
    failures = []
    for v in sorted(forbidden):
        if not 0 <= v < g.n:
            raise ValueError(f"forbidden vertex {v} out of range")
        nbrs = g.neighbors(v)
        if len(nbrs) == 1:
            if not nbrs & forbidden:
                failures.append(ConstraintFailure(
                    "forbidden-structure",
                    f"degree-one forbidden vertex {v} has no forbidden neighbour"))
        elif len(nbrs) > 1:
            if not any(u in forbidden and g.degree(u) == 1 for u in nbrs):
                failures.append(ConstraintFailure(
                    "forbidden-structure",
                    f"forbidden vertex {v} has no degree-one forbidden neighbour"))
    return ViolationReport(constraint_failures=tuple(failures))
