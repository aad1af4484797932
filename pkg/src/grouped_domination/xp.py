"""Bounded branching over units that dominate the smallest undominated vertex."""

from __future__ import annotations

import time

from .bits import iter_bits, lowest
from .graph import Graph, connected_subsets
from .solution import (
    SolveOutcome,
    check_deadline,
    exceeds_bound,
    feasible,
    infeasible,
    verify_solution,
)


def enumerate_candidate_units(g: Graph, v: int, r: int, forbidden: int = 0) -> list[int]:
    """Connected ``r``-sets avoiding ``forbidden`` that meet ``N[v]``.

    Sets are grown from each root ``w`` in ``N[v]`` in id order; a set is
    credited to its smallest root, so each appears once.
    """
    if forbidden >> v & 1:
        raise ValueError(f"vertex {v} is forbidden")
    if r <= 0:
        raise ValueError("unit size must be positive")
    roots = g.closed(v) & ~forbidden
    allowed = g.vertices & ~forbidden
    out = []
    for w in iter_bits(roots):
        out.extend(connected_subsets(g.adj, w, r, allowed))
        allowed &= ~(1 << w)
    return out


def solve_xp(g: Graph, r: int, k: int, deadline: float | None = None,
             memo: bool = False) -> SolveOutcome:
    """Decide whether at most ``k`` units suffice; returns a verified witness.

    With ``memo`` the search skips (dominated, used, depth) signatures it
    has already refuted. The answer is the same either way.
    """
    if r <= 0:
        raise ValueError("unit size must be positive")
    if k < 0:
        raise ValueError("unit bound must be non-negative")
    start = time.perf_counter()
    everyone = g.vertices
    closed = [g.closed(v) for v in range(g.n)]
    stats = {"nodes": 0, "max_branching": 0}
    refuted: set | None = set() if memo else None
    chosen: list[int] = []

    def search(dominated: int, used: int, depth: int) -> bool:
        stats["nodes"] += 1
        if stats["nodes"] & 0x3FF == 0:
            check_deadline(deadline)
        if dominated == everyone:
            return True
        if depth == k:
            return False
        sig = (dominated, used, depth)
        if refuted is not None and sig in refuted:
            return False
        v = lowest(everyone & ~dominated)
        units = enumerate_candidate_units(g, v, r, used)
        stats["max_branching"] = max(stats["max_branching"], len(units))
        for unit in units:
            cover = dominated
            for u in iter_bits(unit):
                cover |= closed[u]
            chosen.append(unit)
            if search(cover, used | unit, depth + 1):
                return True
            chosen.pop()
        if refuted is not None:
            refuted.add(sig)
        return False

    found = search(0, 0, 0)
    stats["seconds"] = time.perf_counter() - start
    if not found:
        out = infeasible("xp", **stats)
        out.k_bound = k
        return out
    out = feasible(chosen, r, "xp", **stats)
    bad = verify_solution(g, out.solution)
    assert bad is None, f"branching produced an invalid family: {bad}"
    out.k_bound = k
    return out


def min_units_xp(g: Graph, r: int, k_max: int, deadline: float | None = None) -> SolveOutcome:
    """Smallest feasible ``k <= k_max`` by iterative deepening."""
    nodes = 0
    for k in range(k_max + 1):
        out = solve_xp(g, r, k, deadline=deadline)
        nodes += out.stats["nodes"]
        if out.feasible:
            out.stats["nodes"] = nodes
            out.k_bound = None
            return out
    if k_max >= g.n // r:
        # every family has at most n // r units, so the search was exhaustive
        return infeasible("xp", nodes=nodes)
    return exceeds_bound("xp", k_max, nodes=nodes)
