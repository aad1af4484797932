"""Dynamic programs over a vertex cover ``J`` with independent side ``I``.

All three table variants run forward over the independent vertices in
ascending id order. A table key labels every cover vertex as one of

* ``IN_X``  -- inside a finished unit,
* ``BLOCK`` -- inside an unfinished fragment of known current size,
* ``IN_Y``  -- outside the solution and not yet dominated,
* ``OTHER`` -- outside the solution and already dominated,

and the stored value is the number of independent vertices used so far.
Cover vertices enter the solution either in pure-cover units fixed before
the first independent vertex, or together with an independent vertex.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .bits import full, iter_bits, lowest, mask_of, members, popcount
from .covers import is_vertex_cover
from .graph import Graph, connected_subsets
from .solution import (GroupedSolution, SolveOutcome, StateBudgetExceeded, check_deadline,
                       feasible, infeasible, verify_solution)

DEFAULT_STATE_BUDGET = 1 << 26

OTHER, IN_Y, IN_X = 0, 1, 2
_FIRST_BLOCK = 3
_TEMP = 1 << 20


class Block(NamedTuple):
    level: int
    block: int


@dataclass(frozen=True)
class NestedState:
    """Per-cover-vertex labels: ``OTHER``, ``IN_Y``, ``IN_X`` or a ``Block``."""

    labels: tuple

    def blocks(self) -> dict[Block, list[int]]:
        out: dict[Block, list[int]] = {}
        for i, lab in enumerate(self.labels):
            if isinstance(lab, Block):
                out.setdefault(lab, []).append(i)
        return out

    @classmethod
    def from_key(cls, key, n_cover: int) -> NestedState:
        labels = []
        for c in key:
            if c < _FIRST_BLOCK:
                labels.append(c)
            else:
                level, bid = divmod(c - _FIRST_BLOCK, n_cover)
                labels.append(Block(level + 2, bid))
        return cls(tuple(labels))


def canonicalize(state: NestedState) -> NestedState:
    """Renumber block ids per level by first occurrence in cover order."""
    seen: dict[Block, Block] = {}
    count: dict[int, int] = {}
    out = []
    for lab in state.labels:
        if isinstance(lab, Block):
            if lab not in seen:
                seen[lab] = Block(lab.level, count.get(lab.level, 0))
                count[lab.level] = count.get(lab.level, 0) + 1
            lab = seen[lab]
        out.append(lab)
    return NestedState(tuple(out))


class TableCorruption(RuntimeError):
    pass


class _Entry(NamedTuple):
    layer: int
    value: int
    parent: object
    move: object


@dataclass
class DPTable:
    kind: str
    r: int
    cover: list[int]
    order: list[int]
    history: dict
    bases: dict
    n_cover: int

    @property
    def states(self) -> int:
        return len(self.history)

    def entry(self, key, layer: int) -> _Entry:
        for e in reversed(self.history.get(key, ())):
            if e.layer <= layer:
                return e
        raise TableCorruption(f"no entry for state at layer {layer}")


def state_bound(r: int, n_cover: int) -> int:
    return (r + 1) ** n_cover * n_cover ** n_cover


def order_independent_set(g: Graph, j_cover: int) -> list[int]:
    if not is_vertex_cover(g, j_cover):
        raise ValueError("the supplied set is not a vertex cover")
    return members(g.vertices & ~j_cover)


class _Cover:
    """Cover-local bookkeeping shared by the table variants."""

    def __init__(self, g: Graph, j_cover: int, r: int):
        self.g = g
        self.r = r
        self.order = order_independent_set(g, j_cover)
        self.cover = members(j_cover)
        nj = self.nj = len(self.cover)
        self.full = full(nj)
        pos = {v: i for i, v in enumerate(self.cover)}
        to_local = lambda m: mask_of(pos[u] for u in iter_bits(m & j_cover))
        self.nbr = [to_local(g.adj[v]) for v in self.cover]
        self.closed = [self.nbr[a] | 1 << a for a in range(nj)]
        self.n_ind = [to_local(g.adj[v]) for v in self.order]
        self.g_cover, _ = g.induced(j_cover)
        # fresh cover vertices that may still join: within distance r-2 of a
        # cover neighbour of a future independent vertex
        ball = [to_local(_ball(g, v, max(r - 2, 0))) for v in self.cover]
        self.future = []
        self.reach = []
        acc = 0
        for t in range(len(self.order), -1, -1):
            if t < len(self.order):
                acc |= self.n_ind[t]
            self.future.append(acc)
            reach = 0
            for b in iter_bits(acc):
                reach |= ball[b]
            self.reach.append(reach)
        self.future.reverse()
        self.reach.reverse()

    def y_ok(self, layer: int, y: int, fresh: int) -> bool:
        hard = y & ~self.future[layer]
        if not hard:
            return True
        helpers = fresh & self.reach[layer]
        for a in iter_bits(hard):
            if not self.nbr[a] & helpers:
                return False
        return True

    def dominates_independent(self, x: int) -> bool:
        return all(nv & x for nv in self.n_ind)

    def closed_of(self, s: int) -> int:
        out = 0
        for a in iter_bits(s):
            out |= self.closed[a]
        return out

    def units_to_global(self, local_units) -> list[int]:
        return [mask_of(self.cover[a] for a in iter_bits(u)) for u in local_units]


def _ball(g: Graph, v: int, radius: int) -> int:
    seen = 1 << v
    frontier = seen
    for _ in range(radius):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _partitionable_unions(gc: Graph, r: int) -> dict[int, tuple[int, int] | None]:
    """Every union of disjoint connected r-sets of the cover graph, with one split."""
    units = []
    everything = gc.vertices
    for root in range(gc.n):
        allowed = everything & ~((1 << root) - 1)
        units.extend(connected_subsets(gc.adj, root, r, allowed))
    found: dict[int, tuple[int, int] | None] = {0: None}
    stack = [0]
    while stack:
        s = stack.pop()
        for u in units:
            if u & s:
                continue
            t = s | u
            if t not in found:
                found[t] = (s, u)
                stack.append(t)
    return found


def _split_union(bases, s: int) -> list[int]:
    units = []
    while s:
        prev, unit = bases[s]
        units.append(unit)
        s = prev
    return units


def _run(cov: _Cover, base_keys, moves, viable, skip_ok, committed, cap, budget, deadline):
    """Layered forward relaxation with per-state improvement histories.

    ``committed(key)`` is a lower bound on the solution vertices of any
    completion (independent vertices not counted); entries whose bound plus
    value exceeds ``cap`` are dropped.
    """
    current: dict = {}
    history: dict = {}
    dead: set = set()
    for key in base_keys:
        if key in current or committed(key) > cap:
            continue
        if not viable(key, 0):
            dead.add(key)
            continue
        current[key] = 0
        history[key] = [_Entry(0, 0, None, None)]
    for t in range(len(cov.order)):
        check_deadline(deadline)
        layer = t + 1
        snapshot = list(current.items())
        for key, _ in snapshot:
            if not (skip_ok(key, layer) and viable(key, layer)):
                del current[key]
                dead.add(key)
        for key, val in snapshot:
            cand = val + 1
            for nkey, move in moves(key, t):
                if nkey in dead:
                    continue
                old = current.get(nkey)
                if old is not None and cand >= old:
                    continue
                if cand + committed(nkey) > cap:
                    continue
                if old is None:
                    if not viable(nkey, layer):
                        dead.add(nkey)
                        continue
                current[nkey] = cand
                history.setdefault(nkey, []).append(_Entry(layer, cand, key, move))
            if len(current) > budget:
                raise StateBudgetExceeded(f"more than {budget} table entries")
    return current, history


def _solve_layers(cov: _Cover, kind: str, bases, base_keys, moves, viable, skip_ok,
                  committed, terminal_x, replay, budget, deadline) -> SolveOutcome:
    """Run the table under unit bounds 1, 2, 3, ... until one admits a terminal.

    The last bound reaches n // r, where nothing is cut, so infeasibility is exact.
    """
    start = time.perf_counter()
    top = cov.g.n // cov.r
    bound, passes = 1, 0
    base_keys = list(base_keys)
    while True:
        bound = min(bound, top)
        passes += 1
        current, history = _run(cov, base_keys, moves, viable, skip_ok, committed,
                                cov.r * bound, budget, deadline)
        out = _finish(cov, kind, current, history, bases, terminal_x, replay, start)
        if out.feasible or bound >= top:
            out.stats["passes"] = passes
            out.stats["unit_bound"] = bound
            return out
        bound += 1


def _finish(cov: _Cover, kind: str, current, history, bases, terminal_x,
            replay, start: float, algorithm: str = "vc-dp") -> SolveOutcome:
    r = cov.r
    table = DPTable(kind, r, cov.cover, cov.order, history, bases, cov.nj)
    bound = state_bound(r, cov.nj)
    assert table.states <= bound, f"{table.states} states exceed bound {bound}"
    best = None
    for key, val in current.items():
        x = terminal_x(key)
        if x is None or not cov.dominates_independent(x):
            continue
        total = popcount(x) + val
        assert total % r == 0
        cand = (total // r, key)
        if best is None or cand < best:
            best = cand
    stats = dict(states=table.states, layers=len(cov.order), cover_size=cov.nj)
    if best is None:
        return infeasible(algorithm, seconds=time.perf_counter() - start, **stats)
    k, key = best
    sol = reconstruct(table, (key, len(cov.order)), cov.g, r, replay=replay)
    if sol.k != k:
        raise TableCorruption(f"reconstructed {sol.k} units, table says {k}")
    bad = verify_solution(cov.g, sol)
    if bad is not None:
        raise TableCorruption(f"reconstructed solution invalid: {bad}")
    out = feasible(sol.units, r, algorithm, seconds=time.perf_counter() - start, **stats)
    out.table = table
    return out


def _walk_back(table: DPTable, terminal) -> tuple[object, list]:
    key, layer = terminal
    moves = []
    while True:
        e = table.entry(key, layer)
        if e.parent is None:
            if e.layer != 0:
                raise TableCorruption("chain ends before the base layer")
            break
        moves.append(e.move)
        key, layer = e.parent, e.layer - 1
    moves.reverse()
    return key, moves


def reconstruct(table: DPTable, terminal, g: Graph, r: int, replay=None) -> GroupedSolution:
    """Follow back-pointers from ``terminal = (key, layer)`` and rebuild the units."""
    if replay is None:
        replay = _REPLAY[table.kind]
    base_key, moves = _walk_back(table, terminal)
    units = replay(table, base_key, moves)
    return GroupedSolution(r, tuple(units))


# -- r = 1 ----------------------------------------------------------------


def solve_r1(g: Graph, j_cover: int, deadline: float | None = None,
             state_budget: int = DEFAULT_STATE_BUDGET) -> SolveOutcome:
    """Minimum dominating set; each member is its own 1-unit."""
    start = time.perf_counter()
    cov = _Cover(g, j_cover, 1)
    nj = cov.nj
    if 1 << nj > state_budget:
        raise StateBudgetExceeded(f"{1 << nj} cover subsets exceed budget {state_budget}")
    covering_low = {}
    for a in range(nj):
        covering_low[a] = [t for t, nv in enumerate(cov.n_ind) if nv >> a & 1]
    memo = {0: (0, None)}

    def set_cover(y):
        # fewest independent vertices whose neighbourhoods cover y
        if y in memo:
            return memo[y][0]
        low = lowest(y)
        best = (None, None)
        for t in covering_low[low]:
            sub = set_cover(y & ~cov.n_ind[t])
            if sub is not None and (best[0] is None or sub + 1 < best[0]):
                best = (sub + 1, t)
        memo[y] = best
        return best[0]

    best = None
    for x in range(1 << nj):
        if x & 0x3FF == 0:
            check_deadline(deadline)
        forced = 0
        y = cov.full & ~cov.closed_of(x)
        for t, nv in enumerate(cov.n_ind):
            if not nv & x:
                forced |= 1 << t
                y &= ~nv
        need = set_cover(y)
        if need is None:
            continue
        total = popcount(x) + popcount(forced) + need
        if best is None or total < best[0]:
            best = (total, x, forced, y)
    stats = dict(states=1 << nj, cover_entries=len(memo), cover_size=nj,
                 layers=len(cov.order))
    if best is None:
        return infeasible("vc-dp", seconds=time.perf_counter() - start, **stats)
    total, x, forced, y = best
    chosen = [cov.cover[a] for a in iter_bits(x)]
    chosen += [cov.order[t] for t in iter_bits(forced)]
    while y:
        t = memo[y][1]
        chosen.append(cov.order[t])
        y &= ~cov.n_ind[t]
    sol = GroupedSolution(1, tuple(1 << v for v in sorted(chosen)))
    assert sol.k == total and verify_solution(g, sol) is None
    return feasible(sol.units, 1, "vc-dp", seconds=time.perf_counter() - start, **stats)


# -- r = 2: keys are X | Y << nj ------------------------------------------


def solve_r2(g: Graph, j_cover: int, deadline: float | None = None,
             state_budget: int = DEFAULT_STATE_BUDGET) -> SolveOutcome:
    cov = _Cover(g, j_cover, 2)
    nj, fullj = cov.nj, cov.full
    bases = _partitionable_unions(cov.g_cover, 2)
    base_keys = [x | (fullj & ~cov.closed_of(x)) << nj for x in bases]

    def viable(key, layer):
        x, y = key & fullj, key >> nj
        return cov.y_ok(layer, y, fullj & ~x)

    def skip_ok(key, layer):
        x = key & fullj
        nv = cov.n_ind[layer - 1]
        return bool(nv & (x | (~x & cov.reach[layer])))

    def moves(key, t):
        x, y = key & fullj, key >> nj
        nv = cov.n_ind[t]
        y_after = y & ~nv
        for u in iter_bits(nv & ~x):
            yield (x | 1 << u) | (y_after & ~cov.closed[u]) << nj, (t, u)

    def committed(key):
        # a pending undominated cover vertex forces one more pair
        return popcount(key & fullj) + (2 if key >> nj else 0)

    def terminal_x(key):
        return key & fullj if key >> nj == 0 else None

    return _solve_layers(cov, "r2", bases, base_keys, moves, viable, skip_ok, committed,
                         terminal_x, _replay_r2, state_budget, deadline)


def _replay_r2(table: DPTable, base_key, moves) -> list[int]:
    nj = table.n_cover
    local = _split_union(table.bases, base_key & full(nj))
    units = [mask_of(table.cover[a] for a in iter_bits(u)) for u in local]
    for t, u in moves:
        units.append(1 << table.order[t] | 1 << table.cover[u])
    return units


# -- r = 3: keys are X | F << nj | Y << 2nj --------------------------------


def solve_r3(g: Graph, j_cover: int, deadline: float | None = None,
             state_budget: int = DEFAULT_STATE_BUDGET) -> SolveOutcome:
    cov = _Cover(g, j_cover, 3)
    nj, fullj = cov.nj, cov.full
    bases = _partitionable_unions(cov.g_cover, 3)
    base_keys = [x | (fullj & ~cov.closed_of(x)) << 2 * nj for x in bases]

    def split(key):
        return key & fullj, key >> nj & fullj, key >> 2 * nj

    def pack(x, f, y):
        return x | f << nj | y << 2 * nj

    def viable(key, layer):
        x, f, y = split(key)
        if f & ~cov.future[layer]:
            return False
        return cov.y_ok(layer, y, fullj & ~x & ~f)

    def skip_ok(key, layer):
        x, f, _ = split(key)
        nv = cov.n_ind[layer - 1]
        fresh = fullj & ~x & ~f
        return bool(nv & (x | f | (fresh & cov.reach[layer])))

    def moves(key, t):
        x, f, y = split(key)
        nv = cov.n_ind[t]
        fresh = fullj & ~x & ~f
        y_v = y & ~nv
        # v completes a triple with two fresh cover vertices (>= 2 edges among the three)
        near = nv & fresh
        for a in iter_bits(near):
            partners = (near | (cov.nbr[a] & fresh)) & ~(1 << a)
            for b in iter_bits(partners):
                if b < a and near >> b & 1:
                    continue
                lo, hi = min(a, b), max(a, b)
                ny = y_v & ~cov.closed[a] & ~cov.closed[b]
                yield pack(x | 1 << a | 1 << b, f, ny), ("triple", t, lo, hi)
        # v completes a pending pair at a
        for a in iter_bits(nv & f):
            yield pack(x | 1 << a, f & ~(1 << a), y_v), ("close", t, a)
        # v opens a pair with a fresh neighbour b
        for b in iter_bits(near):
            yield pack(x, f | 1 << b, y_v & ~cov.closed[b]), ("open", t, b)

    def committed(key):
        x, f, y = split(key)
        # an open pair holds one cover vertex and still needs its closing vertex;
        # with no open pair, a pending Y forces a fresh triple
        return popcount(x) + 2 * popcount(f) + (3 if y and not f else 0)

    def terminal_x(key):
        x, f, y = split(key)
        return x if f == 0 and y == 0 else None

    return _solve_layers(cov, "r3", bases, base_keys, moves, viable, skip_ok, committed,
                         terminal_x, _replay_r3, state_budget, deadline)


def _replay_r3(table: DPTable, base_key, moves) -> list[int]:
    nj = table.n_cover
    cover, order = table.cover, table.order
    local = _split_union(table.bases, base_key & full(nj))
    units = [mask_of(cover[a] for a in iter_bits(u)) for u in local]
    pending = {}
    for move in moves:
        tag, t = move[0], move[1]
        v = 1 << order[t]
        if tag == "triple":
            units.append(v | 1 << cover[move[2]] | 1 << cover[move[3]])
        elif tag == "open":
            pending[move[2]] = v | 1 << cover[move[2]]
        elif tag == "close":
            units.append(pending.pop(move[2]) | v)
        else:
            raise TableCorruption(f"unknown move {move!r}")
    if pending:
        raise TableCorruption("unfinished pairs after the last layer")
    return units


# -- general r: nested partitions -----------------------------------------


class _Nested:
    """Key codec and merge moves for the general table."""

    def __init__(self, cov: _Cover):
        self.cov = cov
        self.nj = cov.nj
        r = cov.r
        self.compact = _FIRST_BLOCK + max(r - 2, 0) * max(self.nj, 1) <= 256

    def level_of(self, code: int) -> int:
        if code >= _TEMP:
            return code - _TEMP
        return (code - _FIRST_BLOCK) // self.nj + 2

    def canon(self, labels: list[int]):
        remap: dict[int, int] = {}
        count: dict[int, int] = {}
        out = list(labels)
        for i, c in enumerate(labels):
            if c >= _FIRST_BLOCK:
                if c not in remap:
                    level = self.level_of(c)
                    n = count.get(level, 0)
                    count[level] = n + 1
                    remap[c] = _FIRST_BLOCK + (level - 2) * self.nj + n
                out[i] = remap[c]
        key = bytes(out) if self.compact else tuple(out)
        return key, remap

    def parse(self, key):
        """(X, fresh, Y, {code: cover mask})"""
        x = fresh = y = 0
        blocks: dict[int, int] = {}
        for a, c in enumerate(key):
            bit = 1 << a
            if c == IN_X:
                x |= bit
            elif c == OTHER:
                fresh |= bit
            elif c == IN_Y:
                fresh |= bit
                y |= bit
            else:
                blocks[c] = blocks.get(c, 0) | bit
        return x, fresh, y, blocks

    def base_key(self, x: int):
        cov = self.cov
        dominated = cov.closed_of(x)
        labels = []
        for a in range(self.nj):
            if x >> a & 1:
                labels.append(IN_X)
            elif dominated >> a & 1:
                labels.append(OTHER)
            else:
                labels.append(IN_Y)
        return self.canon(labels)[0]

    def merges(self, key, t: int):
        """All (T, B) with v, T and the blocks B connected and total size <= r."""
        cov = self.cov
        nj, r = self.nj, cov.r
        x, fresh, y, blocks = self.parse(key)
        codes = sorted(blocks)
        nv = cov.n_ind[t]
        nb = len(codes)
        adj = [0] * (nj + nb)
        weight = [1] * (nj + nb)
        block_nbr = []
        root = nv & fresh
        for i, c in enumerate(codes):
            jm = blocks[c]
            weight[nj + i] = self.level_of(c)
            around = 0
            for a in iter_bits(jm):
                around |= cov.nbr[a]
            block_nbr.append(around)
            if nv & jm:
                root |= 1 << (nj + i)
        for a in iter_bits(fresh):
            row = cov.nbr[a] & fresh
            for i, c in enumerate(codes):
                if cov.nbr[a] & blocks[c]:
                    row |= 1 << (nj + i)
            adj[a] = row
        for i, c in enumerate(codes):
            row = block_nbr[i] & fresh
            for k, c2 in enumerate(codes):
                if k != i and block_nbr[i] & blocks[c2]:
                    row |= 1 << (nj + k)
            adj[nj + i] = row
        cap = r - 1
        for s, w in _weighted_connected(root, adj, weight, cap):
            tmask = s & cov.full
            chosen = [codes[i] for i in iter_bits(s >> nj)]
            yield tmask, tuple(chosen), 1 + w, (x, fresh, y, blocks)

    def apply(self, key, t: int, tmask: int, chosen, size: int, parsed):
        cov = self.cov
        x, fresh, y, blocks = parsed
        labels = list(key)
        mark = IN_X if size == cov.r else _TEMP + size
        for a in iter_bits(tmask):
            labels[a] = mark
        for c in chosen:
            for a in iter_bits(blocks[c]):
                labels[a] = mark
        newly = y & (cov.n_ind[t] | cov.closed_of(tmask)) & ~tmask
        for a in iter_bits(newly):
            labels[a] = OTHER
        return self.canon(labels)


def _weighted_connected(root_ext: int, adj, weight, cap: int):
    """Nonempty node sets connected to a virtual root, total weight <= cap."""

    def grow(s, ext, banned, w):
        while ext:
            u = lowest(ext)
            bit = 1 << u
            ext ^= bit
            wu = weight[u]
            if w + wu <= cap:
                s2 = s | bit
                yield s2, w + wu
                yield from grow(s2, ext | (adj[u] & ~s2 & ~banned & ~bit), banned, w + wu)
            banned |= bit

    yield from grow(0, root_ext, 0, 0)


def solve_general(g: Graph, j_cover: int, r: int, deadline: float | None = None,
                  state_budget: int = DEFAULT_STATE_BUDGET) -> SolveOutcome:
    if r <= 0:
        raise ValueError("unit size must be positive")
    if r == 1:
        return solve_r1(g, j_cover, deadline=deadline, state_budget=state_budget)
    cov = _Cover(g, j_cover, r)
    nest = _Nested(cov)
    bases = _partitionable_unions(cov.g_cover, r)
    base_keys = [nest.base_key(x) for x in bases]

    def viable(key, layer):
        x, fresh, y, blocks = nest.parse(key)
        reach = cov.reach[layer]
        for jm in blocks.values():
            if not jm & reach:
                return False
        return cov.y_ok(layer, y, fresh)

    def skip_ok(key, layer):
        x, fresh, y, blocks = nest.parse(key)
        inside = x
        for jm in blocks.values():
            inside |= jm
        nv = cov.n_ind[layer - 1]
        return bool(nv & (inside | (fresh & cov.reach[layer])))

    def moves(key, t):
        for tmask, chosen, size, parsed in nest.merges(key, t):
            nkey, _ = nest.apply(key, t, tmask, chosen, size, parsed)
            yield nkey, (t, tmask, chosen)

    def committed(key):
        inside = in_blocks = 0
        levels = {}
        y = False
        for c in key:
            if c == IN_X:
                inside += 1
            elif c >= _FIRST_BLOCK:
                in_blocks += 1
                levels[c] = nest.level_of(c)
            elif c == IN_Y:
                y = True
        pending = sum(levels.values())
        if pending:
            # each unit holding fragments still needs at least one more vertex;
            # the fragments' independent vertices are already in the value
            units = -(-pending // (r - 1))
            return inside + r * units - (pending - in_blocks)
        return inside + (r if y else 0)

    def terminal_x(key):
        x, fresh, y, blocks = nest.parse(key)
        return x if not blocks and not y else None

    def replay(table, base_key, path):
        return _replay_general(nest, table, base_key, path)

    return _solve_layers(cov, "general", bases, base_keys, moves, viable, skip_ok, committed,
                         terminal_x, replay, state_budget, deadline)


def _replay_general(nest: _Nested, table: DPTable, base_key, path) -> list[int]:
    cov = nest.cov
    local = _split_union(table.bases, nest.parse(base_key)[0])
    units = cov.units_to_global(local)
    key = base_key
    fragments: dict[int, int] = {}
    for t, tmask, chosen in path:
        parsed = nest.parse(key)
        size = 1 + popcount(tmask) + sum(nest.level_of(c) for c in chosen)
        piece = 1 << cov.order[t] | mask_of(cov.cover[a] for a in iter_bits(tmask))
        for c in chosen:
            piece |= fragments.pop(c)
        if popcount(piece) != size:
            raise TableCorruption("fragment size disagrees with its level")
        nkey, remap = nest.apply(key, t, tmask, chosen, size, parsed)
        if size == cov.r:
            units.append(piece)
        else:
            fragments[_TEMP + size] = piece
        fragments = {remap[c]: p for c, p in fragments.items()}
        key = nkey
    if fragments:
        raise TableCorruption("unfinished fragments after the last layer")
    return units


_REPLAY: dict[str, Callable] = {"r2": _replay_r2, "r3": _replay_r3}


def solve_with_cover(g: Graph, j_cover: int, r: int, **kw) -> SolveOutcome:
    """Dispatch to the specialised table for r <= 3, the nested one otherwise."""
    if r <= 0:
        raise ValueError("unit size must be positive")
    if r == 1:
        return solve_r1(g, j_cover, **kw)
    if r == 2:
        return solve_r2(g, j_cover, **kw)
    if r == 3:
        return solve_r3(g, j_cover, **kw)
    return solve_general(g, j_cover, r, **kw)
