import random
import time

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouped_domination.bits import members, popcount
from grouped_domination.covers import min_vertex_cover
from grouped_domination.graph import Graph
from grouped_domination.solution import (
    StateBudgetExceeded,
    TimeLimitExceeded,
    brute_force_min_units,
    verify_solution,
)
from grouped_domination.suites import oracle_suite
from grouped_domination.vcdp import (
    IN_X,
    IN_Y,
    OTHER,
    Block,
    NestedState,
    TableCorruption,
    _Entry,
    canonicalize,
    order_independent_set,
    reconstruct,
    solve_general,
    solve_r1,
    solve_r2,
    solve_r3,
    solve_with_cover,
    state_bound,
)
from util import complete, cycle, graphs, mask, path, star, subsets, to_nx

SOLVERS = {
    1: [solve_r1, lambda g, j: solve_general(g, j, 1)],
    2: [solve_r2, lambda g, j: solve_general(g, j, 2)],
    3: [solve_r3, lambda g, j: solve_general(g, j, 3)],
    4: [lambda g, j: solve_general(g, j, 4)],
}


class TestOrder:
    def test_examples(self):
        assert order_independent_set(path(4), mask(1, 2)) == [0, 3]
        assert order_independent_set(complete(3), mask(0, 1)) == [2]
        assert order_independent_set(path(4), path(4).vertices) == []

    def test_not_a_cover(self):
        with pytest.raises(ValueError):
            order_independent_set(path(4), mask(0, 3))
        with pytest.raises(ValueError):
            solve_r2(path(4), mask(0))


class TestCanonicalize:
    def test_renumbers_by_first_occurrence(self):
        s = NestedState((Block(2, 7), IN_X, Block(2, 3), Block(3, 5)))
        assert canonicalize(s).labels == (Block(2, 0), IN_X, Block(2, 1), Block(3, 0))

    def test_no_blocks(self):
        s = NestedState((IN_X, IN_Y, OTHER))
        assert canonicalize(s) == s

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=8), st.permutations(range(8)))
    def test_invariant_under_id_permutation(self, raw, perm):
        labels = tuple(Block(2 + (x % 2), x) if x >= 2 else x for x in raw)
        renamed = tuple(Block(b.level, perm[b.block]) if isinstance(b, Block) else b for b in labels)
        a, b = canonicalize(NestedState(labels)), canonicalize(NestedState(renamed))
        assert a == b and canonicalize(a) == a

    def test_blocks_listing(self):
        s = NestedState((Block(2, 0), IN_X, Block(2, 0), Block(3, 0)))
        assert s.blocks() == {Block(2, 0): [0, 2], Block(3, 0): [3]}


class TestExamples:
    def test_r1(self):
        assert solve_r1(path(4), mask(1, 2)).min_units == 2
        assert solve_r1(star(4), mask(0)).min_units == 1
        assert solve_r1(Graph(3, (0, 0, 0)), 0).min_units == 3

    def test_r2(self):
        assert solve_r2(cycle(4), mask(0, 2)).min_units == 1
        c6 = cycle(6)
        assert solve_r2(c6, min_vertex_cover(c6).members).min_units == 2
        out = solve_r2(path(2), mask(0))
        assert out.solution.sorted_units() == [[0, 1]]

    def test_r3(self):
        out = solve_r3(path(3), mask(1))
        assert out.solution.sorted_units() == [[0, 1, 2]]
        c6 = cycle(6)
        assert solve_r3(c6, min_vertex_cover(c6).members).min_units == 2
        assert not solve_r3(Graph(1, (0,)), 0).feasible

    def test_general(self):
        spider = Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
        out = solve_general(spider, mask(0, 1, 2), 4)
        assert out.min_units == 1 and out.solution.sorted_units() == [[0, 1, 2, 3]]
        assert not solve_general(Graph(1, (0,)), 0, 2).feasible

    def test_bad_r(self):
        with pytest.raises(ValueError):
            solve_with_cover(path(3), mask(1), 0)

    def test_all_cover_graph(self):
        # J = V leaves no independent side: only pure-cover units
        assert solve_r2(path(5), path(5).vertices).min_units == 2
        assert solve_general(complete(4), complete(4).vertices, 4).min_units == 1


def test_oracle_agreement_sample():
    for g in oracle_suite()[:120]:
        j = min_vertex_cover(g).members
        for r, solvers in SOLVERS.items():
            want = brute_force_min_units(g, r).min_units
            for solve in solvers:
                out = solve(g, j)
                assert out.min_units == want
                if out.feasible:
                    assert verify_solution(g, out.solution) is None
                    assert out.stats["states"] <= state_bound(r, popcount(j))


def test_cover_choice_independence():
    rng = random.Random(9)
    for g in oracle_suite()[:150]:
        j1 = min_vertex_cover(g).members
        j2 = j1 | (rng.getrandbits(g.n) if g.n else 0)
        for r, solvers in SOLVERS.items():
            for solve in solvers:
                assert solve(g, j1).min_units == solve(g, j2).min_units


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9), st.integers(2, 4))
def test_property_vs_oracle(g, r):
    j = min_vertex_cover(g).members
    assert solve_with_cover(g, j, r).min_units == brute_force_min_units(g, r).min_units


def test_values_fall_along_histories():
    for g in oracle_suite()[:80]:
        j = min_vertex_cover(g).members
        for r in (2, 3, 4):
            out = solve_with_cover(g, j, r)
            if out.table is None:
                continue
            for chain in out.table.history.values():
                layers = [e.layer for e in chain]
                values = [e.value for e in chain]
                assert layers == sorted(layers)
                # a later improvement at a deeper prefix never raises the value
                assert all(b < a for a, b in zip(values, values[1:]))


def test_pair_bases_are_perfect_matchings():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(2, 12)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        out = solve_r2(g, g.vertices)
        if out.table is None:
            continue
        h = to_nx(g)
        for x in subsets(g.vertices):
            nodes = members(x)
            perfect = 2 * len(nx.max_weight_matching(h.subgraph(nodes), maxcardinality=True)) == len(nodes)
            assert (x in out.table.bases) == perfect


def test_reconstruct_detects_corruption():
    out = solve_r2(cycle(6), min_vertex_cover(cycle(6)).members)
    table = out.table
    terminal = next(key for key, chain in table.history.items() if chain[-1].parent is not None)
    chain = list(table.history[terminal])
    parent = chain[-1].parent
    saved = table.history.pop(parent)
    with pytest.raises(TableCorruption):
        reconstruct(table, (terminal, len(table.order)), cycle(6), 2)
    table.history[parent] = saved
    table.history[terminal] = chain[:-1] + [_Entry(chain[-1].layer, 0, None, None)]
    with pytest.raises(TableCorruption):
        reconstruct(table, (terminal, len(table.order)), cycle(6), 2)


def test_state_budget():
    g = cycle(10)
    with pytest.raises(StateBudgetExceeded):
        solve_r2(g, min_vertex_cover(g).members, state_budget=2)


def test_deadline():
    g = cycle(10)
    with pytest.raises(TimeLimitExceeded):
        solve_r3(g, min_vertex_cover(g).members, deadline=time.monotonic() - 1)


def test_nested_key_decodes():
    g = cycle(8)
    out = solve_general(g, min_vertex_cover(g).members, 4)
    nj = popcount(min_vertex_cover(g).members)
    for key in out.table.history:
        state = NestedState.from_key(key, nj)
        assert len(state.labels) == nj
        for blk, where in state.blocks().items():
            assert 2 <= blk.level <= 3
            assert 1 <= len(where) <= blk.level
