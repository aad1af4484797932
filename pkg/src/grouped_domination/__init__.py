"""Exact solvers for r-grouped domination: every vertex is dominated by a
family of disjoint connected units of exactly r vertices."""

from .covers import CoverCertificate, min_twin_cover, min_vertex_cover, verify_cover
from .graph import Graph, parse_graph, serialize_graph
from .reductions import SolverConfig, big_r_unit, solve, strip_noncover_twin_edges
from .solution import GroupedSolution, SolveOutcome, brute_force_min_units, verify_solution
from .vcdp import solve_general, solve_r1, solve_r2, solve_r3, solve_with_cover
from .xp import enumerate_candidate_units, solve_xp

__all__ = [
    "CoverCertificate", "Graph", "GroupedSolution", "SolveOutcome", "SolverConfig",
    "big_r_unit", "brute_force_min_units", "enumerate_candidate_units", "min_twin_cover",
    "min_vertex_cover", "parse_graph", "serialize_graph", "solve", "solve_general",
    "solve_r1", "solve_r2", "solve_r3", "solve_with_cover", "solve_xp",
    "strip_noncover_twin_edges", "verify_cover", "verify_solution",
]
