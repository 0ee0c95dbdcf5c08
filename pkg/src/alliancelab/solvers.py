"""Exact minimum offensive-alliance search.

Three routes with one return contract:

* ``solve_bruteforce`` -- enumerate candidate subsets in nondecreasing size
  (lexicographically within a size); serves as the oracle for everything
  else in the package.
* ``solve_branching`` -- propagation-and-branching search over a tripartite
  In/Out/Free state, run under iterative deepening so the reported size is
  the minimum.  Correctness is established by oracle-equivalence testing,
  not by a complexity-bound argument.
* ``solve_via_vertex_cover`` -- exact minimum vertex cover first (any cover
  is an offensive alliance, so its size bounds the search), then branching.

All searches are deterministic: ties break toward the lowest vertex
identifier, and identical inputs and budgets yield identical outcomes.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from alliancelab.alliances import AllianceInstance, check_instance_solution
from alliancelab.graphs import Graph, _popcount

FOUND = "found"
NONE_WITHIN_BOUND = "none-within-bound"
BUDGET_EXHAUSTED = "budget-exhausted"


class BudgetExhaustedError(RuntimeError):
    """Raised by searches that report exhaustion via exception."""


class _BudgetSignal(Exception):
    pass


@dataclass(frozen=True)
class SearchBudget:
    """Work limits: candidate subsets / branch nodes, and wall-clock seconds."""

    max_candidates: int = 5_000_000
    max_seconds: float = 120.0

    def __post_init__(self):
        if self.max_candidates <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class SolveOutcome:
    status: str
    solution: Optional[frozenset[int]] = None
    size: Optional[int] = None
    candidates: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "solution": sorted(self.solution) if self.solution is not None else None,
            "size": self.size,
            "candidates": self.candidates,
        }


class _Meter:
    __slots__ = ("limit", "deadline", "count")

    def __init__(self, budget: SearchBudget):
        self.limit = budget.max_candidates
        self.deadline = time.monotonic() + budget.max_seconds
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.limit:
            raise _BudgetSignal
        if self.count % 4096 == 0 and time.monotonic() > self.deadline:
            raise _BudgetSignal


def _bits_ascending(mask: int) -> Iterator[int]:
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def solve_bruteforce(inst: AllianceInstance, budget: SearchBudget = DEFAULT_BUDGET) -> SolveOutcome:
    """Enumerate non-empty subsets of V minus forbidden, containing the
    necessary set, in nondecreasing size up to r; return the first valid
    solution (lexicographically least among minimum size).

    The boundary scan runs highest-degree-first: heavy vertices need the
    most in-neighbours, so they reject doomed subsets almost immediately,
    which is what makes exhaustion of no-instances affordable.
    """
    g = inst.graph
    n = g.n
    bits = g.adjacency_bits()
    popcount = _popcount
    # (own bit, neighbourhood, degree + strength), highest degree first
    scan = sorted(
        ((1 << v, bits[v], g.degree(v) + inst.strength) for v in range(n)),
        key=lambda t: -t[2],
    )
    necessary = sorted(inst.necessary)
    nec_mask = sum(1 << v for v in necessary)
    free = [v for v in range(n) if v not in inst.forbidden and v not in inst.necessary]
    free_bits = [(1 << v, bits[v]) for v in free]

    limit = budget.max_candidates
    deadline = time.monotonic() + budget.max_seconds
    count = 0

    lo = max(1, len(necessary))
    sizes = [inst.r] if inst.exact else range(lo, inst.r + 1)
    try:
        for size in sizes:
            extra = size - len(necessary)
            if extra < 0 or extra > len(free) or size < 1:
                continue
            for combo in combinations(free_bits, extra):
                count += 1
                if count > limit:
                    raise _BudgetSignal
                if not count & 4095 and time.monotonic() > deadline:
                    raise _BudgetSignal
                mask = nec_mask
                for b, _ in combo:
                    mask |= b
                for vb, vnb, vt in scan:
                    if vb & mask:
                        continue
                    hit = vnb & mask
                    if hit and 2 * popcount(hit) < vt:
                        break
                else:
                    sol = frozenset(_bits_ascending(mask))
                    assert check_instance_solution(inst, sol).ok
                    return SolveOutcome(FOUND, sol, len(sol), count)
    except _BudgetSignal:
        return SolveOutcome(BUDGET_EXHAUSTED, candidates=count)
    return SolveOutcome(NONE_WITHIN_BOUND, candidates=count)


def solve_branching(inst: AllianceInstance, budget: SearchBudget = DEFAULT_BUDGET) -> SolveOutcome:
    """Propagation-and-branching exact search; same contract as
    solve_bruteforce (identical decision and minimum size, tie-breaking may
    differ).

    State is a tripartition In/Out/Free.  For a vertex v outside In that is
    adjacent to In, needed(v) = ceil((d(v)+strength)/2) - d_In(v) is the
    number of further In-neighbours v requires.  Rules:

    * P1: v in Out adjacent to In with needed(v) > |Free & N(v)| -> prune.
    * P2: equality with needed(v) > 0 -> force all free neighbours into In.
    * P3: |In| > bound -> prune.
    * P4: forbidden vertices start in Out, necessary vertices in In.
    * B1: lowest free vertex adjacent to In -> branch In / Out.
    * B2: lowest out-vertex adjacent to In with needed(v) > 0 -> branch over
      each free neighbour, lowest first.

    Minimum size comes from iterative deepening on the bound: the search at
    each bound is complete, so the first bound that yields a solution is the
    minimum size.
    """
    g = inst.graph
    n = g.n
    bits = g.adjacency_bits()
    degs = [g.degree(v) for v in range(n)]
    need_total = [(degs[v] + inst.strength + 1) // 2 for v in range(n)]
    all_mask = (1 << n) - 1
    forb_mask = sum(1 << v for v in inst.forbidden)
    nec_mask = sum(1 << v for v in inst.necessary)
    meter = _Meter(budget)
    # branch depth is bounded by the vertex count, not the solution size
    if sys.getrecursionlimit() < 4 * n + 1000:
        sys.setrecursionlimit(4 * n + 1000)

    if inst.r == 0 or len(inst.necessary) > inst.r:
        return SolveOutcome(NONE_WITHIN_BOUND)

    def search(in_mask: int, out_mask: int, bound: int) -> Optional[int]:
        meter.tick()
        while True:
            if _popcount(in_mask) > bound:
                return None
            in_nbr = 0
            for v in _bits_ascending(in_mask):
                in_nbr |= bits[v]
            free_mask = all_mask & ~in_mask & ~out_mask
            forced = 0
            branch_out_v = None
            for v in _bits_ascending(out_mask & in_nbr & ~in_mask):
                needed = need_total[v] - _popcount(bits[v] & in_mask)
                if needed <= 0:
                    continue
                free_nbrs = bits[v] & free_mask
                cnt = _popcount(free_nbrs)
                if needed > cnt:
                    return None
                if needed == cnt:
                    forced |= free_nbrs
                elif branch_out_v is None:
                    branch_out_v = v
            if forced:
                in_mask |= forced
                continue
            break

        free_adj = free_mask & in_nbr & ~in_mask
        if free_adj:
            v_bit = free_adj & -free_adj
            got = search(in_mask | v_bit, out_mask, bound)
            if got is not None:
                return got
            return search(in_mask, out_mask | v_bit, bound)
        if branch_out_v is not None:
            for u in _bits_ascending(bits[branch_out_v] & free_mask):
                got = search(in_mask | (1 << u), out_mask, bound)
                if got is not None:
                    return got
            return None

        # no rule applies: In is an offensive alliance
        size = _popcount(in_mask)
        if not inst.exact:
            return in_mask
        if size == bound:
            return in_mask
        if not free_mask:
            return None
        v_bit = free_mask & -free_mask
        got = search(in_mask | v_bit, out_mask, bound)
        if got is not None:
            return got
        return search(in_mask, out_mask | v_bit, bound)

    lo = max(1, len(inst.necessary))
    bounds = [inst.r] if inst.exact else range(lo, inst.r + 1)
    seeds = [nec_mask] if nec_mask else [
        1 << v for v in range(n) if v not in inst.forbidden
    ]
    try:
        for bound in bounds:
            if bound < lo:
                continue
            for seed in seeds:
                got = search(seed, forb_mask, bound)
                if got is not None:
                    sol = frozenset(_bits_ascending(got))
                    assert check_instance_solution(inst, sol).ok
                    return SolveOutcome(FOUND, sol, len(sol), meter.count)
    except _BudgetSignal:
        return SolveOutcome(BUDGET_EXHAUSTED, candidates=meter.count)
    return SolveOutcome(NONE_WITHIN_BOUND, candidates=meter.count)


def min_vertex_cover_exact(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> frozenset[int]:
    """Exact minimum vertex cover by branching on an uncovered edge
    (include u / include v); raises BudgetExhaustedError on overrun."""
    edges = g.edges()
    meter = _Meter(budget)
    best_mask = (1 << g.n) - 1
    best_size = g.n

    def rec(cover_mask: int, size: int) -> None:
        nonlocal best_mask, best_size
        try:
            meter.tick()
        except _BudgetSignal:
            raise BudgetExhaustedError("vertex cover search budget exhausted") from None
        if size >= best_size:
            return
        for u, v in edges:
            if not (cover_mask >> u) & 1 and not (cover_mask >> v) & 1:
                rec(cover_mask | (1 << u), size + 1)
                rec(cover_mask | (1 << v), size + 1)
                return
        best_mask, best_size = cover_mask, size

    rec(0, 0)
    return frozenset(_bits_ascending(best_mask))


def solve_via_vertex_cover(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> SolveOutcome:
    """Minimum offensive alliance via the vertex cover bound: any vertex
    cover is an offensive alliance, so branching with r = vc(G) is complete."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    try:
        cover = min_vertex_cover_exact(g, budget)
    except BudgetExhaustedError:
        return SolveOutcome(BUDGET_EXHAUSTED)
    # vc = 0 (edgeless graph) still needs r >= 1: alliances are non-empty
    r = max(1, len(cover))
    return solve_branching(AllianceInstance(g, r=r, strength=1), budget)
