"""Offensive alliances in graphs: verifiers, exact solvers, and executable
hardness reductions with solution lifting/projection.

The package is organised around six pieces:

* :mod:`alliancelab.graphs` -- immutable simple graphs, chord diagrams and
  the structural predicates (bipartite, split, bounded forest height).
* :mod:`alliancelab.alliances` -- degree-inequality verifiers for offensive,
  strong offensive and defensive alliances, including the constrained
  variants with forbidden / necessary vertex sets.
* :mod:`alliancelab.solvers` -- exhaustive and propagation-and-branching
  exact solvers, plus an exact minimum vertex cover routine.
* :mod:`alliancelab.sources` -- the reduction source problems (MRSS,
  permutation hitting set, closest string, vertex cover, dominating set)
  with brute-force oracles.
* :mod:`alliancelab.reductions` -- the gadget constructions, each with a
  solution lifter and, where available, a projector.
* :mod:`alliancelab.checks` / :mod:`alliancelab.cli` -- the three-tier test
  harness (lift / round-trip / budgeted equivalence) and the command line.
"""

from alliancelab.graphs import Graph, ChordDiagram, graph_from_edge_list
from alliancelab.alliances import AllianceInstance, ViolationReport
from alliancelab.solvers import (
    SearchBudget,
    SolveOutcome,
    solve_bruteforce,
    solve_branching,
    solve_via_vertex_cover,
    min_vertex_cover_exact,
)

__all__ = [
    "Graph",
    "ChordDiagram",
    "graph_from_edge_list",
    "AllianceInstance",
    "ViolationReport",
    "SearchBudget",
    "SolveOutcome",
    "solve_bruteforce",
    "solve_branching",
    "solve_via_vertex_cover",
    "min_vertex_cover_exact",
]

__version__ = "0.1.0"
