"""Seeded instance suites shared by the tests, the acceptance run and scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .covers import min_twin_cover
from .generators import gen_planted_twin_cover, random_twin_classes
from .graph import Graph, connected_components, disjoint_union


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@dataclass(frozen=True)
class SuiteConfig:
    count: int = 300
    max_n: int = 10
    probs: tuple[float, ...] = (0.2, 0.4, 0.7)
    seed: int = 1


def oracle_suite(cfg: SuiteConfig = SuiteConfig()) -> list[Graph]:
    """Random graphs with ``n`` uniform in 0..max_n and ``p`` drawn from ``probs``."""
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.count):
        n = int(rng.random() * (cfg.max_n + 1))
        p = cfg.probs[int(rng.random() * len(cfg.probs))]
        out.append(random_graph(n, p, rng))
    return out


def planted_twin_suite(count: int = 200, max_n: int = 12, seed: int = 2) -> list[Graph]:
    """Small graphs with a planted twin cover of 1..4 vertices and twin classes of 2..3."""
    out = []
    attempt = seed * 1_000_003
    while len(out) < count:
        attempt += 1
        rng = random.Random(attempt)
        n_cover = 1 + int(rng.random() * 4)
        n_classes = 1 + int(rng.random() * 3)
        classes = random_twin_classes(n_cover, n_classes, (2, 3), attempt)
        g = gen_planted_twin_cover(n_cover, classes, 0.5, attempt)
        if g.n <= max_n:
            out.append(g)
    return out


def _connected_planted(t: int, rng: random.Random) -> Graph:
    while True:
        seed = int(rng.random() * 2**32)
        classes = random_twin_classes(t, 1 + int(rng.random() * 3), (1, 3), seed)
        g = gen_planted_twin_cover(t, classes, 0.6, seed)
        if len(connected_components(g)) == 1:
            return g


def big_r_suite(count: int = 100, seed: int = 3) -> list[tuple[Graph, int]]:
    """Unions of 1..3 connected components with planted twin cover <= 3.

    ``r`` is drawn so that r >= 2*tau - 1 in every component while every
    component still has at least ``r`` vertices.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        comps = [_connected_planted(1 + int(rng.random() * 3), rng)
                 for _ in range(1 + int(rng.random() * 3))]
        low = max(2 * max(min_twin_cover(c).size, 1) - 1 for c in comps)
        high = min(c.n for c in comps)
        if low > high:
            continue
        r = low + int(rng.random() * (high - low + 1))
        out.append((disjoint_union(*comps), r))
    return out
