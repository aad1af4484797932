"""Exact minimum vertex covers and twin covers."""

from __future__ import annotations

from dataclasses import dataclass

from .bits import iter_bits, members, popcount
from .graph import Graph, delete_edges

VERTEX_COVER = "vertex-cover"
TWIN_COVER = "twin-cover"


@dataclass(frozen=True)
class CoverCertificate:
    kind: str
    members: int

    @property
    def size(self) -> int:
        return popcount(self.members)

    def to_json(self) -> dict:
        return {"kind": self.kind, "size": self.size, "members": members(self.members)}


def twin_edges(g: Graph) -> set[tuple[int, int]]:
    # bucket by N[v] fingerprint; an edge is a twin edge iff both ends share a bucket
    bucket = {}
    for v in range(g.n):
        bucket.setdefault(g.closed(v), []).append(v)
    out = set()
    for group in bucket.values():
        for i, u in enumerate(group):
            for v in group[i + 1:]:
                if g.has_edge(u, v):
                    out.add((u, v))
    return out


def _branch_and_reduce(adj, alive: int, cap: int) -> int | None:
    """Minimum vertex cover of the graph induced on ``alive``, if its size is < ``cap``."""
    best = [cap, None]

    def search(alive, cover, size):
        # reduction: drop isolated vertices, take the neighbour of pendant vertices
        changed = True
        while changed:
            changed = False
            for v in iter_bits(alive):
                if not alive >> v & 1:
                    continue
                nb = adj[v] & alive
                if not nb:
                    alive &= ~(1 << v)
                    changed = True
                elif nb & (nb - 1) == 0:
                    cover |= nb
                    size += 1
                    alive &= ~(nb | 1 << v)
                    changed = True
            if size >= best[0]:
                return
        if not alive:
            best[0], best[1] = size, cover
            return
        top, top_deg, edge_twice = -1, -1, 0
        for v in iter_bits(alive):
            d = popcount(adj[v] & alive)
            edge_twice += d
            if d > top_deg:
                top, top_deg = v, d
        # every cover vertex takes at most top_deg edges
        bound = -(-(edge_twice // 2) // top_deg)
        if size + bound >= best[0]:
            return
        search(alive & ~(1 << top), cover | 1 << top, size + 1)
        nb = adj[top] & alive
        search(alive & ~nb & ~(1 << top), cover | nb, size + popcount(nb))

    search(alive, 0, 0)
    return best[1]


def _min_cover_mask(g: Graph) -> int:
    adj = g.adj
    everything = g.vertices
    cover = _branch_and_reduce(adj, everything, g.n + 1)
    target = popcount(cover)
    # lexicographically least member list among minimum covers: decide ids in order
    taken, decided = 0, 0
    for v in range(g.n):
        if decided >> v & 1:
            continue
        bit = 1 << v
        rest = everything & ~decided & ~bit
        budget = target - popcount(taken) - 1
        if budget >= 0 and _branch_and_reduce(adj, rest, budget + 1) is not None:
            taken |= bit
            decided |= bit
        else:
            nb = adj[v] & ~decided
            taken |= nb
            decided |= nb | bit
    residual = _branch_and_reduce(adj, everything & ~decided, target - popcount(taken) + 1)
    assert residual is not None
    taken |= residual
    assert popcount(taken) == target
    return taken


def min_vertex_cover(g: Graph) -> CoverCertificate:
    return CoverCertificate(VERTEX_COVER, _min_cover_mask(g))


def min_twin_cover(g: Graph) -> CoverCertificate:
    stripped = delete_edges(g, twin_edges(g))
    return CoverCertificate(TWIN_COVER, _min_cover_mask(stripped))


def verify_cover(g: Graph, cert: CoverCertificate) -> bool:
    s = cert.members
    if s & ~g.vertices:
        return False
    if cert.kind == VERTEX_COVER:
        ok_edge = lambda u, v: False
    elif cert.kind == TWIN_COVER:
        ok_edge = lambda u, v: g.closed(u) == g.closed(v)
    else:
        return False
    for u, v in g.edges():
        if not (s >> u & 1 or s >> v & 1 or ok_edge(u, v)):
            return False
    return True


def is_vertex_cover(g: Graph, s: int) -> bool:
    return verify_cover(g, CoverCertificate(VERTEX_COVER, s))
