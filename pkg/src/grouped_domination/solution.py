"""Grouped solutions, the validity checker and the brute-force oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .bits import iter_bits, lowest, mask_of, members, popcount
from .graph import Graph, connected_subsets, is_connected_induced

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
# a bounded search found nothing within its bound; the true minimum is unknown
EXCEEDS_BOUND = "exceeds-bound"

OVERLAP = "overlap"
WRONG_SIZE = "wrong-size"
DISCONNECTED = "disconnected-unit"
UNDOMINATED = "undominated-vertex"


class ResourceExceeded(RuntimeError):
    pass


class StateBudgetExceeded(ResourceExceeded):
    pass


class TimeLimitExceeded(ResourceExceeded):
    pass


def check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise TimeLimitExceeded("time limit exceeded")


@dataclass(frozen=True)
class GroupedSolution:
    r: int
    units: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.units)

    @property
    def union(self) -> int:
        out = 0
        for u in self.units:
            out |= u
        return out

    def sorted_units(self) -> list[list[int]]:
        return sorted(members(u) for u in self.units)

    def to_json(self) -> dict:
        return {"r": self.r, "units": self.sorted_units()}

    @classmethod
    def from_json(cls, data: dict) -> GroupedSolution:
        r = data["r"]
        units = data["units"]
        if not isinstance(r, int) or not isinstance(units, list):
            raise ValueError("solution needs an integer 'r' and a list 'units'")
        masks = []
        for unit in units:
            if not isinstance(unit, list) or not all(isinstance(v, int) and v >= 0 for v in unit):
                raise ValueError(f"unit {unit!r} is not a list of vertex ids")
            if len(set(unit)) != len(unit):
                raise ValueError(f"unit {unit!r} repeats a vertex")
            masks.append(mask_of(unit))
        return cls(r, tuple(masks))


@dataclass(frozen=True)
class Violation:
    kind: str
    unit: int | None = None
    vertex: int | None = None

    def __str__(self):
        where = []
        if self.unit is not None:
            where.append(f"unit {self.unit}")
        if self.vertex is not None:
            where.append(f"vertex {self.vertex}")
        return f"{self.kind} ({', '.join(where)})" if where else self.kind


def verify_solution(g: Graph, sol: GroupedSolution) -> Violation | None:
    """``None`` when ``sol`` is a valid r-grouped dominating set of ``g``."""
    seen = 0
    for i, unit in enumerate(sol.units):
        if unit & ~g.vertices:
            return Violation(WRONG_SIZE, unit=i, vertex=lowest(unit & ~g.vertices))
        if popcount(unit) != sol.r:
            return Violation(WRONG_SIZE, unit=i)
        if unit & seen:
            return Violation(OVERLAP, unit=i, vertex=lowest(unit & seen))
        if not is_connected_induced(g, unit):
            return Violation(DISCONNECTED, unit=i)
        seen |= unit
    dominated = seen
    for v in iter_bits(seen):
        dominated |= g.adj[v]
    missing = g.vertices & ~dominated
    if missing:
        return Violation(UNDOMINATED, vertex=lowest(missing))
    return None


def partition_into_connected_r_sets(g: Graph, s: int, r: int, memo: dict | None = None):
    """Split ``s`` into connected ``r``-sets, or ``None`` when impossible."""
    if r <= 0:
        raise ValueError("unit size must be positive")
    if popcount(s) % r:
        return None
    if memo is None:
        memo = {}

    def split(rest):
        if not rest:
            return ()
        if rest in memo:
            return memo[rest]
        found = None
        for unit in connected_subsets(g.adj, lowest(rest), r, rest):
            tail = split(rest & ~unit)
            if tail is not None:
                found = (unit,) + tail
                break
        memo[rest] = found
        return found

    parts = split(s)
    return None if parts is None else list(parts)


@dataclass
class SolveOutcome:
    status: str
    min_units: int | None = None
    solution: GroupedSolution | None = None
    stats: dict = field(default_factory=dict)
    algorithm: str = ""
    cover: object = None
    k_bound: int | None = None
    table: object = field(default=None, repr=False)

    def __post_init__(self):
        if (self.status == FEASIBLE) != (self.min_units is not None and self.solution is not None):
            raise ValueError("feasible outcomes carry both min_units and a solution")

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    @property
    def decision(self) -> bool | None:
        """Answer to "at most ``k_bound`` units?" when a bound was given."""
        if self.k_bound is None:
            return None
        return self.feasible and self.min_units <= self.k_bound


def infeasible(algorithm: str, **stats) -> SolveOutcome:
    return SolveOutcome(INFEASIBLE, stats=stats, algorithm=algorithm)


def exceeds_bound(algorithm: str, k_bound: int, **stats) -> SolveOutcome:
    return SolveOutcome(EXCEEDS_BOUND, stats=stats, algorithm=algorithm, k_bound=k_bound)


def feasible(units, r: int, algorithm: str, **stats) -> SolveOutcome:
    sol = GroupedSolution(r, tuple(units))
    return SolveOutcome(FEASIBLE, sol.k, sol, stats=stats, algorithm=algorithm)


BRUTE_FORCE_MAX_N = 16


def brute_force_min_units(g: Graph, r: int, k_cap: int | None = None,
                          max_n: int | None = BRUTE_FORCE_MAX_N,
                          deadline: float | None = None) -> SolveOutcome:
    """Exhaustive search: smallest k whose r·k-subsets contain a valid family.

    Candidate unions are enumerated in lexicographic order, domination is
    tested first, partitionability second.
    """
    if r <= 0:
        raise ValueError("unit size must be positive")
    if max_n is not None and g.n > max_n:
        raise ValueError(f"brute force capped at {max_n} vertices (got {g.n})")
    start = time.perf_counter()
    closed = [g.closed(v) for v in range(g.n)]
    everyone = g.vertices
    memo: dict = {}
    top = g.n // r if k_cap is None else min(k_cap, g.n // r)
    checked = 0
    for k in range(top + 1):
        for combo in combinations(range(g.n), r * k):
            checked += 1
            if checked & 0xFFF == 0:
                check_deadline(deadline)
            dom = 0
            for v in combo:
                dom |= closed[v]
            if dom != everyone:
                continue
            parts = partition_into_connected_r_sets(g, mask_of(combo), r, memo)
            if parts is not None:
                return feasible(parts, r, "brute", nodes=checked,
                                seconds=time.perf_counter() - start)
    return infeasible("brute", nodes=checked, seconds=time.perf_counter() - start)
