"""Twin-cover preprocessing, the large-r shortcut and the top-level solver."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .bits import iter_bits, lowest, popcount
from .covers import TWIN_COVER, CoverCertificate, min_twin_cover, min_vertex_cover, verify_cover
from .graph import Graph, connected_components, delete_edges, is_connected_induced, reach_within
from .solution import (
    EXCEEDS_BOUND,
    FEASIBLE,
    ResourceExceeded,
    SolveOutcome,
    brute_force_min_units,
    exceeds_bound,
    feasible,
    infeasible,
    verify_solution,
)
from .vcdp import DEFAULT_STATE_BUDGET, solve_with_cover
from .xp import min_units_xp

ALGORITHMS = ("auto", "brute", "vc-dp", "tc-dp", "xp", "big-r")


@dataclass(frozen=True)
class SolverConfig:
    brute_max_n: int = 12
    # cover sizes past which auto prefers bounded branching when a bound is given
    cover_limit_small_r: int = 20
    cover_limit_general: int = 11
    state_budget: int = DEFAULT_STATE_BUDGET
    time_limit: float | None = None


class ComponentResourceError(ResourceExceeded):
    def __init__(self, component: list[int], cause: ResourceExceeded):
        super().__init__(f"component {component}: {cause}")
        self.component = component
        self.cause = cause


def strip_noncover_twin_edges(g: Graph, k_cover: CoverCertificate) -> Graph:
    """Delete every edge with both ends outside the twin cover."""
    if k_cover.kind != TWIN_COVER or not verify_cover(g, k_cover):
        raise ValueError("argument is not a valid twin cover of the graph")
    outside = g.vertices & ~k_cover.members
    doomed = [(u, v) for u, v in g.edges() if outside >> u & 1 and outside >> v & 1]
    return delete_edges(g, doomed)


def anchored_twin_cover(g: Graph, cover: int) -> int:
    """Add one vertex to ``cover`` in every multi-vertex component it misses."""
    for comp in connected_components(g):
        if comp & (comp - 1) and not comp & cover:
            cover |= comp & -comp
    return cover


def big_r_unit(g: Graph, k_cover: int, r: int) -> int | None:
    """One connected dominating ``r``-set of a connected graph, grown from its twin cover."""
    if popcount(g.vertices) < r:
        return None
    if not k_cover:
        # complete graph: one vertex dominates
        k_cover = 1 if g.n else 0
    if r < 2 * popcount(k_cover) - 1:
        raise ValueError(f"r={r} is below 2*{popcount(k_cover)}-1; use the table instead")
    d = k_cover
    while not is_connected_induced(g, d):
        pieces = _components_of(g, d)
        bridge = None
        for v in iter_bits(g.vertices & ~d):
            if sum(1 for p in pieces if g.adj[v] & p) >= 2:
                bridge = v
                break
        assert bridge is not None, "no vertex joins two pieces of the cover"
        d |= 1 << bridge
    while popcount(d) < r:
        frontier = 0
        for v in iter_bits(d):
            frontier |= g.adj[v]
        d |= 1 << lowest(frontier & ~d)
    assert popcount(d) == r and is_connected_induced(g, d)
    everyone = d
    for v in iter_bits(d):
        everyone |= g.adj[v]
    assert everyone == g.vertices, "grown set does not dominate"
    return d


def _components_of(g: Graph, s: int) -> list[int]:
    out = []
    while s:
        piece = reach_within(g, s & -s, s)
        out.append(piece)
        s &= ~piece
    return out


def _solve_component(g: Graph, r: int, algo: str, k_bound, config: SolverConfig,
                     deadline) -> tuple[SolveOutcome, str, CoverCertificate | None]:
    n = g.n
    if n < r:
        return infeasible("trivial"), "trivial", None
    kw = dict(deadline=deadline, state_budget=config.state_budget)
    if algo == "auto":
        if n <= config.brute_max_n:
            algo = "brute"
        else:
            tc = min_twin_cover(g)
            tau = max(tc.size, 1)
            if r >= 2 * tau - 1:
                algo = "big-r"
            else:
                vc = min_vertex_cover(g)
                limit = config.cover_limit_small_r if r <= 3 else config.cover_limit_general
                if k_bound is not None and min(tc.size, vc.size) > limit:
                    algo = "xp"
                elif r == 1 or vc.size <= tc.size:
                    algo = "vc-dp"
                else:
                    algo = "tc-dp"
    if algo == "brute":
        return brute_force_min_units(g, r, max_n=None, deadline=deadline), algo, None
    if algo == "vc-dp":
        vc = min_vertex_cover(g)
        return solve_with_cover(g, vc.members, r, **kw), algo, vc
    if algo == "tc-dp":
        if r == 1:
            raise ValueError("the twin-cover table needs r >= 2")
        k = anchored_twin_cover(g, min_twin_cover(g).members)
        cert = CoverCertificate(TWIN_COVER, k)
        stripped = strip_noncover_twin_edges(g, cert)
        out = solve_with_cover(stripped, k, r, **kw)
        if out.feasible:
            # the stripped graph is a subgraph, so its solutions transfer
            assert verify_solution(g, out.solution) is None
        out.algorithm = "tc-dp"
        return out, algo, cert
    if algo == "big-r":
        k = min_twin_cover(g).members
        unit = big_r_unit(g, k, r)
        cert = CoverCertificate(TWIN_COVER, k or 1)
        if unit is None:
            return infeasible("big-r"), algo, cert
        return feasible([unit], r, "big-r"), algo, cert
    if algo == "xp":
        if k_bound is None:
            raise ValueError("the branching solver needs a unit bound k")
        return min_units_xp(g, r, k_bound, deadline=deadline), algo, None
    raise ValueError(f"unknown algorithm {algo!r}")


def solve(g: Graph, r: int, k_bound: int | None = None, algo: str = "auto",
          config: SolverConfig | None = None) -> SolveOutcome:
    """Minimum number of units, solved component by component.

    ``k_bound`` only filters the answer, except under ``xp`` where it
    bounds the search depth for each component.
    """
    if r <= 0:
        raise ValueError("unit size must be positive")
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    if k_bound is not None and k_bound < 0:
        raise ValueError("unit bound must be non-negative")
    config = config or SolverConfig()
    start = time.perf_counter()
    deadline = None if config.time_limit is None else time.monotonic() + config.time_limit
    comps = connected_components(g)
    units: list[int] = []
    per_component = []
    cover_members = 0
    cover_kinds = set()
    states = 0
    verdict = FEASIBLE
    for comp in comps:
        sub, old = g.induced(comp)
        try:
            out, used, cert = _solve_component(sub, r, algo, k_bound, config, deadline)
        except ResourceExceeded as exc:
            raise ComponentResourceError(old, exc) from exc
        states += out.stats.get("states", 0)
        row = {"vertices": old, "algorithm": used, "status": out.status,
               "min_units": out.min_units, "states": out.stats.get("states", 0)}
        if cert is not None:
            row["cover_kind"] = cert.kind
            row["cover_size"] = cert.size
            cover_kinds.add(cert.kind)
            for v in iter_bits(cert.members):
                cover_members |= 1 << old[v]
        per_component.append(row)
        if not out.feasible:
            verdict = out.status
            if out.status != EXCEEDS_BOUND:
                break
            continue
        for unit in out.solution.units:
            units.append(sum(1 << old[v] for v in iter_bits(unit)))
    algos = sorted({row["algorithm"] for row in per_component})
    name = algos[0] if len(algos) == 1 else ("none" if not algos else "+".join(algos))
    stats = dict(seconds=time.perf_counter() - start, states=states,
                 components=per_component)
    if verdict != FEASIBLE:
        if verdict == EXCEEDS_BOUND:
            result = exceeds_bound(name, k_bound, **stats)
        else:
            result = infeasible(name, **stats)
    else:
        result = feasible(units, r, name, **stats)
        bad = verify_solution(g, result.solution)
        assert bad is None, f"combined family invalid: {bad}"
    if len(cover_kinds) == 1:
        result.cover = CoverCertificate(cover_kinds.pop(), cover_members)
    elif cover_kinds:
        # mixed kinds: report the union under the weaker label
        result.cover = CoverCertificate(TWIN_COVER, cover_members)
    result.k_bound = k_bound
    return result
