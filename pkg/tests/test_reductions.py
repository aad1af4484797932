import random

import pytest

from grouped_domination.bits import popcount
from grouped_domination.covers import TWIN_COVER, VERTEX_COVER, CoverCertificate, min_twin_cover
from grouped_domination.generators import gen_planted_twin_cover
from grouped_domination.graph import Graph, connected_components, disjoint_union, dominates, is_connected_induced
from grouped_domination.reductions import (
    ComponentResourceError,
    SolverConfig,
    anchored_twin_cover,
    big_r_unit,
    solve,
    strip_noncover_twin_edges,
)
from grouped_domination.solution import brute_force_min_units, verify_solution
from grouped_domination.suites import big_r_suite, oracle_suite, planted_twin_suite
from util import complete, cycle, mask, path


class TestStrip:
    def test_clique_with_empty_cover(self):
        g = strip_noncover_twin_edges(complete(3), CoverCertificate(TWIN_COVER, 0))
        assert g.m == 0
        # the degenerate case: stripping alone would lose the K3 answer
        assert brute_force_min_units(complete(3), 2).min_units == 1
        assert not brute_force_min_units(g, 2).feasible
        assert anchored_twin_cover(complete(3), 0) == mask(0)

    def test_twin_pair_on_a_centre(self):
        g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        stripped = strip_noncover_twin_edges(g, CoverCertificate(TWIN_COVER, mask(0)))
        assert sorted(stripped.edges()) == [(0, 1), (0, 2)]
        assert brute_force_min_units(stripped, 2).min_units == brute_force_min_units(g, 2).min_units

    def test_identity_on_p4(self):
        assert strip_noncover_twin_edges(path(4), CoverCertificate(TWIN_COVER, mask(1, 2))).adj == path(4).adj

    def test_invalid_cover(self):
        with pytest.raises(ValueError):
            strip_noncover_twin_edges(path(4), CoverCertificate(TWIN_COVER, mask(0)))
        with pytest.raises(ValueError):
            strip_noncover_twin_edges(path(4), CoverCertificate(VERTEX_COVER, mask(1, 2)))

    def test_cover_becomes_vertex_cover(self):
        from grouped_domination.covers import is_vertex_cover
        for g in planted_twin_suite(40):
            k = anchored_twin_cover(g, min_twin_cover(g).members)
            assert is_vertex_cover(strip_noncover_twin_edges(g, CoverCertificate(TWIN_COVER, k)), k)


class TestBigR:
    def test_p5(self):
        d = big_r_unit(path(5), mask(1, 3), 4)
        assert popcount(d) == 4 and is_connected_induced(path(5), d) and dominates(path(5), d)

    def test_complete(self):
        assert popcount(big_r_unit(complete(4), mask(0), 3)) == 3
        assert popcount(big_r_unit(complete(4), 0, 3)) == 3

    def test_too_small(self):
        assert big_r_unit(path(3), mask(1), 4) is None

    def test_precondition(self):
        with pytest.raises(ValueError):
            big_r_unit(path(7), mask(1, 3, 5), 4)

    def test_suite(self):
        for g, r in big_r_suite(40):
            for comp in connected_components(g):
                sub, _ = g.induced(comp)
                d = big_r_unit(sub, min_twin_cover(sub).members, r)
                assert popcount(d) == r and is_connected_induced(sub, d) and dominates(sub, d)


class TestSolve:
    def test_two_c4(self):
        assert solve(disjoint_union(cycle(4), cycle(4)), 2).min_units == 2

    def test_isolated_vertex(self):
        assert solve(disjoint_union(cycle(4), Graph(1, (0,))), 2).status == "infeasible"

    def test_clique_with_pendant(self):
        edges = [(u, v) for u in range(10) for v in range(u + 1, 10)] + [(0, 10)]
        g = Graph.from_edges(11, edges)
        assert min_twin_cover(g).members == mask(0)
        out = solve(g, 2, algo="tc-dp")
        assert out.min_units == 1 == brute_force_min_units(g, 2).min_units
        assert verify_solution(g, out.solution) is None

    def test_auto_routes(self):
        assert solve(cycle(4), 2).algorithm == "brute"
        assert solve(cycle(20), 2).algorithm == "vc-dp"
        twins = gen_planted_twin_cover(4, [(4, [0, 1]), (4, [2, 3]), (3, [1, 2])], 0.5, 1)
        assert solve(twins, 2).algorithm == "tc-dp"
        assert solve(complete(14), 5).algorithm == "big-r"
        big = Graph.from_edges(30, [(i, i + 1) for i in range(29)])
        assert solve(big, 2, k_bound=8, config=SolverConfig(cover_limit_small_r=4)).algorithm == "xp"

    def test_k_bound_is_a_filter(self):
        out = solve(cycle(6), 2, k_bound=1)
        assert out.min_units == 2 and out.decision is False
        assert solve(cycle(6), 2, k_bound=2).decision is True

    def test_xp_needs_bound(self):
        with pytest.raises(ValueError):
            solve(cycle(6), 2, algo="xp")
        assert solve(cycle(6), 2, k_bound=1, algo="xp").status == "exceeds-bound"
        assert solve(cycle(6), 2, k_bound=3, algo="xp").min_units == 2

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            solve(cycle(4), 0)
        with pytest.raises(ValueError):
            solve(cycle(4), 2, algo="ilp")
        with pytest.raises(ValueError):
            solve(cycle(4), 1, algo="tc-dp")

    def test_budget_names_component(self):
        g = disjoint_union(path(2), cycle(14))
        with pytest.raises(ComponentResourceError) as info:
            solve(g, 2, algo="vc-dp", config=SolverConfig(state_budget=3))
        assert info.value.component == list(range(2, 16))
        assert "component [2, 3" in str(info.value)

    def test_empty_graph(self):
        out = solve(Graph(0, ()), 3)
        assert out.min_units == 0

    def test_twin_soundness(self):
        for g in planted_twin_suite(80):
            for r in (2, 3, 4):
                out = solve(g, r, algo="tc-dp")
                assert out.min_units == brute_force_min_units(g, r).min_units
                if out.feasible:
                    assert verify_solution(g, out.solution) is None

    def test_component_additivity(self):
        rng = random.Random(12)
        suite = oracle_suite()
        for _ in range(100):
            parts = [suite[rng.randrange(len(suite))] for _ in range(rng.randint(1, 3))]
            parts = [p for p in parts if p.n <= 5] or [path(2)]
            g = disjoint_union(*parts)
            r = rng.randint(1, 3)
            per = [brute_force_min_units(p, r) for p in parts]
            whole = brute_force_min_units(g, r)
            out = solve(g, r, algo="vc-dp")
            assert out.min_units == whole.min_units
            if all(p.feasible for p in per):
                assert whole.min_units == sum(p.min_units for p in per)
            else:
                assert not whole.feasible
