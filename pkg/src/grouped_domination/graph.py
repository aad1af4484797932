"""Simple undirected graphs with bitset adjacency rows.

Vertices are ``0..n-1``; ``adj[v]`` is the int bitmask of ``N(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bits import full, iter_bits, lowest, mask_of, popcount

MAX_VERTICES = 128


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class MalformedLine(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class TooManyVertices(ParseError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(init=False)

    def __post_init__(self):
        if self.n > MAX_VERTICES:
            raise ValueError(f"{self.n} vertices exceeds capacity {MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count differs from n")
        everyone = full(self.n)
        degree_sum = 0
        for v, row in enumerate(self.adj):
            if row & ~everyone:
                raise ValueError(f"row {v} names vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
            degree_sum += popcount(row)
        object.__setattr__(self, "m", degree_sum // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> int:
        return full(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((popcount(row) for row in self.adj), default=0)

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def induced(self, s: int) -> tuple[Graph, list[int]]:
        """``g[s]`` relabelled to ``0..|s|-1``, plus the new-to-old id map."""
        old = list(iter_bits(s))
        new = {v: i for i, v in enumerate(old)}
        rows = [mask_of(new[u] for u in iter_bits(self.adj[v] & s)) for v in old]
        return Graph(len(old), tuple(rows)), old


def closed_neighborhood(g: Graph, s: int) -> int:
    out = s
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def dominates(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.vertices


def reach_within(g: Graph, start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``start`` inside ``g[allowed]``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected_induced(g: Graph, s: int) -> bool:
    # empty set counts as disconnected: units are never empty
    if not s:
        return False
    return reach_within(g, s & -s, s) == s


def connected_components(g: Graph) -> list[int]:
    comps = []
    left = g.vertices
    while left:
        comp = reach_within(g, left & -left, left)
        comps.append(comp)
        left &= ~comp
    return comps


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise ValueError("twin test needs two distinct vertices")
    return g.closed(u) == g.closed(v)


def disjoint_union(*graphs: Graph) -> Graph:
    """Side-by-side copies, relabelled in argument order."""
    rows = []
    for g in graphs:
        shift = len(rows)
        rows.extend(row << shift for row in g.adj)
    return Graph(len(rows), tuple(rows))


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.adj)
    for u, v in edges:
        if not rows[u] >> v & 1:
            raise ValueError(f"({u}, {v}) is not an edge")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def connected_subsets(adj, root: int, size: int, allowed: int) -> Iterator[int]:
    """Every connected vertex set of exactly ``size`` members containing ``root``.

    Only vertices in ``allowed`` are used; ``adj`` is any sequence of
    neighbour masks. Each set is produced once (extension/exclusion search).
    """
    if not allowed >> root & 1 or size < 1:
        return
    root_bit = 1 << root

    def grow(s, ext, banned, k):
        if k == size:
            yield s
            return
        while ext:
            u = lowest(ext)
            bit = 1 << u
            ext ^= bit
            child_ext = ext | (adj[u] & allowed & ~s & ~banned & ~bit)
            yield from grow(s | bit, child_ext, banned, k + 1)
            banned |= bit

    yield from grow(root_bit, adj[root] & allowed & ~root_bit, 0, 1)


# -- text formats ---------------------------------------------------------


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise MalformedLine(lineno, f"expected integers, got {' '.join(parts)!r}") from None


def _build(n: int, pairs: list[tuple[int, int, int]], header_line: int) -> Graph:
    if n < 0:
        raise MalformedLine(header_line, "negative vertex count")
    if n > MAX_VERTICES:
        raise TooManyVertices(header_line, f"{n} vertices exceeds capacity {MAX_VERTICES}")
    rows = [0] * n
    for lineno, u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(lineno, f"edge ({u}, {v}) outside the declared {n} vertices")
        if u == v:
            raise SelfLoop(lineno, f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    header = None
    pairs = []
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        if len(parts) != 2:
            raise MalformedLine(lineno, f"expected two fields, got {line!r}")
        a, b = _ints(parts, lineno)
        if header is None:
            header = (a, b, lineno)
        else:
            pairs.append((lineno, a, b))
    if header is None:
        raise MalformedLine(lineno, "missing 'n m' header")
    n, m, hline = header
    if len(pairs) != m:
        raise MalformedLine(lineno, f"header declares {m} edges, found {len(pairs)}")
    return _build(n, pairs, hline)


def parse_dimacs(text: str) -> Graph:
    header = None
    pairs = []
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "edge":
                raise MalformedLine(lineno, f"bad problem line {line!r}")
            n, m = _ints(parts[2:], lineno)
            header = (n, m, lineno)
        elif parts[0] == "e":
            if header is None:
                raise MalformedLine(lineno, "edge line before problem line")
            if len(parts) != 3:
                raise MalformedLine(lineno, f"bad edge line {line!r}")
            u, v = _ints(parts[1:], lineno)
            pairs.append((lineno, u - 1, v - 1))
        else:
            raise MalformedLine(lineno, f"unknown line type {parts[0]!r}")
    if header is None:
        raise MalformedLine(lineno, "missing 'p edge n m' line")
    n, m, hline = header
    if len(pairs) != m:
        raise MalformedLine(lineno, f"problem line declares {m} edges, found {len(pairs)}")
    # report ids in the file's 1-indexed convention
    for ln, u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(ln, f"edge ({u + 1}, {v + 1}) outside 1..{n}")
    return _build(n, pairs, hline)


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return to_edge_list(g)
    if fmt == "dimacs":
        return to_dimacs(g)
    raise ValueError(f"unknown graph format {fmt!r}")
