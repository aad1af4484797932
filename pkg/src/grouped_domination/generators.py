"""Instance generators: hardness constructions and planted-parameter graphs.

Randomness comes from ``random.Random(seed)`` and only its ``random()``
method is used; CPython keeps that stream fixed for a given integer seed
across releases (MT19937), so outputs are reproducible bit for bit.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations, product

from .bits import iter_bits, mask_of, members, popcount
from .graph import Graph, ParseError, MalformedLine, to_edge_list

YES, NO = "yes", "no"


# -- CNF ------------------------------------------------------------------


@dataclass(frozen=True)
class Cnf:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("negative variable count")
        clean = []
        for clause in self.clauses:
            lits = tuple(dict.fromkeys(clause))
            for lit in lits:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} outside 1..{self.num_vars}")
                if -lit in lits:
                    raise ValueError(f"clause {clause} holds both x{abs(lit)} and its negation")
            clean.append(lits)
        object.__setattr__(self, "clauses", tuple(clean))

    @property
    def restricted(self) -> bool:
        """Each variable in exactly three clauses, at most two of each sign."""
        pos = [0] * (self.num_vars + 1)
        neg = [0] * (self.num_vars + 1)
        for clause in self.clauses:
            for lit in clause:
                (pos if lit > 0 else neg)[abs(lit)] += 1
        return all(pos[x] + neg[x] == 3 and pos[x] <= 2 and neg[x] <= 2
                   for x in range(1, self.num_vars + 1))

    def satisfied_by(self, assignment) -> bool:
        return all(any((lit > 0) == assignment[abs(lit) - 1] for lit in c) for c in self.clauses)

    def to_json(self) -> dict:
        return {"num_vars": self.num_vars, "clauses": [list(c) for c in self.clauses]}


def parse_dimacs_cnf(text: str) -> Cnf:
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] in ("c", "%"):
            continue
        if parts[0] == "p":
            if num_vars is not None or len(parts) != 4 or parts[1] != "cnf":
                raise MalformedLine(lineno, f"bad problem line {line!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedLine(lineno, f"bad problem line {line!r}") from None
            continue
        if num_vars is None:
            raise MalformedLine(lineno, "clause before problem line")
        try:
            lits = [int(p) for p in parts]
        except ValueError:
            raise MalformedLine(lineno, f"expected integers, got {line!r}") from None
        for lit in lits:
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            elif abs(lit) > num_vars:
                raise ParseError(lineno, f"literal {lit} outside 1..{num_vars}")
            else:
                pending.append(lit)
    if num_vars is None:
        raise MalformedLine(lineno, "missing 'p cnf' line")
    if pending:
        clauses.append(tuple(pending))
    if len(clauses) != num_clauses:
        raise MalformedLine(lineno, f"problem line declares {num_clauses} clauses, found {len(clauses)}")
    try:
        return Cnf(num_vars, tuple(clauses))
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def to_dimacs_cnf(cnf: Cnf) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in cnf.clauses]
    return "\n".join(lines) + "\n"


def brute_force_sat(cnf: Cnf) -> tuple[bool, ...] | None:
    """First satisfying assignment in lexicographic order (False < True), if any."""
    for assignment in product((False, True), repeat=cnf.num_vars):
        if cnf.satisfied_by(assignment):
            return assignment
    return None


# A restricted formula with four variables and four clauses; satisfiable.
SAMPLE_RESTRICTED_CNF = Cnf(4, ((1, 2, -4), (-1, 2, -3), (-2, 3, 4), (-1, -3, -4)))


# -- instances ------------------------------------------------------------


@dataclass(frozen=True)
class GeneratedInstance:
    graph: Graph
    r: int | None
    k: int | None
    reduction: str
    source: dict
    seed: int | None = None
    expected: str | None = None
    provenance: dict = field(default_factory=dict)

    def sidecar(self) -> dict:
        return {"reduction": self.reduction, "r": self.r, "k": self.k, "source": self.source,
                "seed": self.seed, "expected": self.expected, **self.provenance}

    def write(self, path_stem: str) -> tuple[str, str]:
        graph_path, meta_path = f"{path_stem}.edges", f"{path_stem}.json"
        with open(graph_path, "w") as fh:
            fh.write(to_edge_list(self.graph))
        with open(meta_path, "w") as fh:
            json.dump(self.sidecar(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        return graph_path, meta_path


def planted_vc_instance(n: int, nu: int, edge_prob: float, seed: int) -> GeneratedInstance:
    g = gen_planted_vc(n, nu, edge_prob, seed)
    return GeneratedInstance(g, None, None, "planted-vc",
                             {"n": n, "nu": nu, "edge_prob": edge_prob}, seed)


def planted_tc_instance(n_cover: int, classes, edge_prob: float, seed: int) -> GeneratedInstance:
    g = gen_planted_twin_cover(n_cover, classes, edge_prob, seed)
    layout = [[size, sorted(set(attach))] for size, attach in classes]
    return GeneratedInstance(g, None, None, "planted-tc",
                             {"n_cover": n_cover, "classes": layout, "edge_prob": edge_prob}, seed)


def min_dominating_set_size(g: Graph, limit: int | None = None) -> int | None:
    """Exhaustive minimum dominating set size (``None`` past ``limit``)."""
    closed = [g.closed(v) for v in range(g.n)]
    top = g.n if limit is None else min(limit, g.n)
    for size in range(top + 1):
        for combo in combinations(range(g.n), size):
            dom = 0
            for v in combo:
                dom |= closed[v]
            if dom == g.vertices:
                return size
    return None


def is_split_partition(g: Graph, clique: int) -> bool:
    if clique & ~g.vertices:
        return False
    indep = g.vertices & ~clique
    return all((g.adj[v] | 1 << v) & clique == clique for v in iter_bits(clique)) and \
        all(not g.adj[v] & indep for v in iter_bits(indep))


def _check_split(g: Graph, clique: int) -> int:
    if not is_split_partition(g, clique):
        raise ValueError("clique part and its complement do not form a split partition")
    indep = g.vertices & ~clique
    if popcount(clique) < 2 or popcount(indep) < 2:
        raise ValueError("split source needs at least two clique and two independent vertices")
    for v in iter_bits(indep):
        if not g.adj[v]:
            # an isolated independent vertex can never sit in a connected unit
            raise ValueError(f"independent vertex {v} has no clique neighbour")
    return indep


def _split_source(g: Graph, clique: int) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()], "clique": members(clique)}


def _expect(g: Graph, bound: int) -> str:
    return YES if min_dominating_set_size(g, bound) is not None else NO


def _copies_with_joined_clique(g: Graph, clique: int, copies: int) -> Graph:
    n = g.n
    edges = [(i * n + u, i * n + v) for i in range(copies) for u, v in g.edges()]
    joined = [i * n + c for i in range(copies) for c in iter_bits(clique)]
    edges += list(combinations(joined, 2))
    return Graph.from_edges(n * copies, edges)


def gen_split_k_copies(g_split: Graph, clique_part: int, r: int, k: int,
                       seed: int | None = None) -> GeneratedInstance:
    """``k`` copies with the clique parts merged; DS of size <= r iff <= k units."""
    _check_split(g_split, clique_part)
    if r < 1 or k < 1:
        raise ValueError("r and k must be positive")
    if r > g_split.n:
        raise ValueError("unit size exceeds the source graph, units could not stay in one copy")
    out = _copies_with_joined_clique(g_split, clique_part, k)
    return GeneratedInstance(out, r, k, "split-k", _split_source(g_split, clique_part), seed,
                             _expect(g_split, r))


def gen_split_r_copies(g_split: Graph, clique_part: int, r: int, k: int,
                       seed: int | None = None) -> GeneratedInstance:
    """``r`` copies with the clique parts merged; DS of size <= k iff <= k units."""
    _check_split(g_split, clique_part)
    if r < 1 or k < 1:
        raise ValueError("r and k must be positive")
    out = _copies_with_joined_clique(g_split, clique_part, r)
    return GeneratedInstance(out, r, k, "split-r", _split_source(g_split, clique_part), seed,
                             _expect(g_split, k))


def gen_bipartite_t_gadget(g_split: Graph, clique_part: int, r: int, k: int,
                           seed: int | None = None) -> GeneratedInstance:
    """Bipartite copies with a hub ``t`` per copy; the output asks for (r+1)-units."""
    indep = _check_split(g_split, clique_part)
    if r < 2 or k < 1:
        raise ValueError("needs r >= 2 and k >= 1")
    if r > g_split.n:
        raise ValueError("unit size exceeds the source graph")
    n = g_split.n
    width = n + 3
    edges = []
    for i in range(k):
        base = i * width
        s1, s2, t = base + n, base + n + 1, base + n + 2
        for u, v in g_split.edges():
            if indep >> u & 1 or indep >> v & 1:
                edges.append((base + u, base + v))
        edges += [(s1, t), (s2, t)]
        edges += [(t, base + c) for c in iter_bits(clique_part)]
        if i + 1 < k:
            edges.append((s1, s1 + width))
    out = Graph.from_edges(k * width, edges)
    return GeneratedInstance(out, r + 1, k, "bip-t", _split_source(g_split, clique_part), seed,
                             _expect(g_split, r), {"source_r": r})


def gen_bipartite_paths(g_split: Graph, clique_part: int, r: int, k: int,
                        seed: int | None = None) -> GeneratedInstance:
    """Drop the clique edges and hang ``k`` paths of ``r`` vertices off the clique part."""
    indep = _check_split(g_split, clique_part)
    if r < 2 or k < 1:
        raise ValueError("needs r >= 2 and k >= 1")
    n = g_split.n
    edges = [(u, v) for u, v in g_split.edges() if indep >> u & 1 or indep >> v & 1]
    for i in range(k):
        base = n + i * r
        edges += [(base + j, base + j + 1) for j in range(r - 1)]
        edges += [(c, base) for c in iter_bits(clique_part)]
    out = Graph.from_edges(n + k * r, edges)
    return GeneratedInstance(out, r, k, "bip-paths", _split_source(g_split, clique_part), seed,
                             _expect(g_split, k))


def sat_vertex(kind: str, index: int, num_vars: int, r: int) -> int:
    """Id of a gadget vertex: ``pos``/``neg``/``hub`` of a variable, or a ``clause``.

    Variable ``i`` owns ids ``i*(r+2) .. i*(r+2)+r+1``: positive literal,
    negative literal, hub, then the ``r - 1`` tail vertices. Clauses follow.
    """
    width = r + 2
    offsets = {"pos": 0, "neg": 1, "hub": 2}
    if kind == "clause":
        return num_vars * width + index
    return index * width + offsets[kind]


def gen_from_3sat(cnf: Cnf, r: int, seed: int | None = None) -> GeneratedInstance:
    """Variable gadgets with a tail of ``r - 1`` vertices; k = number of variables."""
    if r < 2:
        raise ValueError("this construction needs r >= 2")
    n = cnf.num_vars
    edges = []
    for i in range(n):
        pos, neg, hub = (sat_vertex(kind, i, n, r) for kind in ("pos", "neg", "hub"))
        edges += [(pos, hub), (neg, hub)]
        path = list(range(hub, hub + r))
        edges += list(zip(path, path[1:]))
    for j, clause in enumerate(cnf.clauses):
        c = sat_vertex("clause", j, n, r)
        for lit in clause:
            edges.append((sat_vertex("pos" if lit > 0 else "neg", abs(lit) - 1, n, r), c))
    out = Graph.from_edges(n * (r + 2) + len(cnf.clauses), edges)
    expected = None
    if n <= 20:
        expected = YES if brute_force_sat(cnf) is not None else NO
    return GeneratedInstance(out, r, n, "sat", cnf.to_json(), seed, expected,
                             {"restricted": cnf.restricted})


# -- random sources -------------------------------------------------------


def random_split_source(n_clique: int, n_indep: int, edge_prob: float, seed: int) -> tuple[Graph, int]:
    """Split graph on a clique ``0..n_clique-1``; every independent vertex gets a clique neighbour."""
    rng = random.Random(seed)
    edges = list(combinations(range(n_clique), 2))
    for v in range(n_clique, n_clique + n_indep):
        nbrs = [c for c in range(n_clique) if rng.random() < edge_prob]
        if not nbrs and n_clique:
            nbrs = [int(rng.random() * n_clique)]
        edges += [(c, v) for c in nbrs]
    return Graph.from_edges(n_clique + n_indep, edges), mask_of(range(n_clique))


def random_cnf(num_vars: int, num_clauses: int, width: int, seed: int) -> Cnf:
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        size = min(width, num_vars)
        chosen: list[int] = []
        while len(chosen) < size:
            x = 1 + int(rng.random() * num_vars)
            if x not in chosen:
                chosen.append(x)
        clauses.append(tuple(x if rng.random() < 0.5 else -x for x in chosen))
    return Cnf(num_vars, tuple(clauses))


def gen_planted_vc(n: int, nu: int, edge_prob: float, seed: int) -> Graph:
    """Cover ``0..nu-1``; edges only touch the cover and every other vertex gets one."""
    if not 0 <= nu <= n:
        raise ValueError("planted cover size must lie in 0..n")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability outside [0, 1]")
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(nu):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    if nu:
        for v in range(nu, n):
            if not rows[v]:
                u = int(rng.random() * nu)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def gen_planted_twin_cover(n_cover: int, classes, edge_prob: float, seed: int) -> Graph:
    """Random graph on the cover plus twin cliques, each wired to its whole attach set."""
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge probability outside [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n_cover), 2) if rng.random() < edge_prob]
    nxt = n_cover
    for size, attach in classes:
        attach = sorted(set(attach))
        if not attach:
            raise ValueError("twin class needs a nonempty attach set")
        if size < 1:
            raise ValueError("twin class needs at least one vertex")
        if any(not 0 <= a < n_cover for a in attach):
            raise ValueError(f"attach set {attach} leaves the cover 0..{n_cover - 1}")
        block = list(range(nxt, nxt + size))
        edges += list(combinations(block, 2))
        edges += [(a, v) for v in block for a in attach]
        nxt += size
    return Graph.from_edges(nxt, edges)


def random_twin_classes(n_cover: int, n_classes: int, sizes: tuple[int, int], seed: int):
    """Class specs for ``gen_planted_twin_cover`` drawn from ``seed``."""
    rng = random.Random(seed)
    out = []
    for _ in range(n_classes):
        size = sizes[0] + int(rng.random() * (sizes[1] - sizes[0] + 1))
        attach = [a for a in range(n_cover) if rng.random() < 0.5]
        if not attach:
            attach = [int(rng.random() * n_cover)]
        out.append((size, attach))
    return out
