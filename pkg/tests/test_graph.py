import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouped_domination.bits import full, iter_bits, mask_of, members, popcount
from grouped_domination.graph import (
    MAX_VERTICES,
    Graph,
    MalformedLine,
    SelfLoop,
    TooManyVertices,
    VertexOutOfRange,
    are_true_twins,
    closed_neighborhood,
    connected_components,
    connected_subsets,
    delete_edges,
    disjoint_union,
    dominates,
    is_connected_induced,
    parse_graph,
    serialize_graph,
)
from util import complete, graphs, mask, path, to_nx


class TestBits:
    def test_roundtrip(self):
        assert members(mask_of([5, 0, 3])) == [0, 3, 5]
        assert list(iter_bits(0)) == []
        assert popcount(full(7)) == 7

    @given(st.integers(0, 2**128 - 1))
    def test_iter_matches_binary(self, x):
        assert [i for i, b in enumerate(reversed(bin(x)[2:])) if b == "1"] == list(iter_bits(x))


class TestParse:
    def test_empty_graph(self):
        g = parse_graph("3 0\n", "edge-list")
        assert (g.n, g.m) == (3, 0)

    def test_triangle(self):
        g = parse_graph("3 3\n0 1\n1 2\n0 2\n", "edge-list")
        assert all(popcount(row) == 2 for row in g.adj)

    def test_dimacs_path(self):
        g = parse_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n", "dimacs")
        assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]

    def test_comments_and_duplicates(self):
        g = parse_graph("# a comment\n3 3\n0 1\n1 0\n1 2\n", "edge-list")
        assert g.m == 2

    def test_isolated_vertices_kept(self):
        assert parse_graph("5 1\n0 1\n").n == 5

    @pytest.mark.parametrize("text, err, line", [
        ("3 1\n0 x\n", MalformedLine, 2),
        ("3 1\n0 1 2\n", MalformedLine, 2),
        ("3 1\n0 3\n", VertexOutOfRange, 2),
        ("3 1\n1 1\n", SelfLoop, 2),
        ("200 0\n", TooManyVertices, 1),
        ("", MalformedLine, 0),
        ("3 2\n0 1\n", MalformedLine, 2),
    ])
    def test_edge_list_errors(self, text, err, line):
        with pytest.raises(err) as info:
            parse_graph(text, "edge-list")
        assert info.value.lineno == line
        assert f"line {line}" in str(info.value)

    @pytest.mark.parametrize("text, err, line", [
        ("p edge 3 1\ne 1 4\n", VertexOutOfRange, 2),
        ("p edge 3 1\ne 0 1\n", VertexOutOfRange, 2),
        ("p edge 3 1\ne 2 2\n", SelfLoop, 2),
        ("e 1 2\n", MalformedLine, 1),
        ("p edge 3 1\nq 1 2\n", MalformedLine, 2),
        ("p edge 129 0\n", TooManyVertices, 1),
    ])
    def test_dimacs_errors(self, text, err, line):
        with pytest.raises(err) as info:
            parse_graph(text, "dimacs")
        assert info.value.lineno == line

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse_graph("1 0\n", "graphml")

    @pytest.mark.parametrize("fmt", ["edge-list", "dimacs"])
    @given(g=graphs(max_n=14))
    def test_serialize_roundtrip(self, fmt, g):
        h = parse_graph(serialize_graph(g, fmt), fmt)
        assert (h.n, sorted(h.edges())) == (g.n, sorted(g.edges()))


class TestGraphInvariants:
    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(1, (1,))

    def test_capacity(self):
        with pytest.raises(ValueError):
            Graph(MAX_VERTICES + 1, (0,) * (MAX_VERTICES + 1))
        assert Graph(MAX_VERTICES, (0,) * MAX_VERTICES).n == MAX_VERTICES

    @given(graphs(max_n=12))
    def test_m_is_half_degree_sum(self, g):
        assert 2 * g.m == sum(g.degree(v) for v in range(g.n))
        assert g.m == to_nx(g).number_of_edges()

    def test_induced_relabels(self):
        sub, old = path(5).induced(mask(1, 2, 4))
        assert old == [1, 2, 4]
        assert list(sub.edges()) == [(0, 1)]

    def test_disjoint_union(self):
        g = disjoint_union(path(2), complete(3))
        assert g.n == 5 and sorted(g.edges()) == [(0, 1), (2, 3), (2, 4), (3, 4)]


class TestNeighbourhoods:
    def test_triangle(self):
        assert closed_neighborhood(complete(3), mask(0)) == mask(0, 1, 2)

    def test_path(self):
        assert closed_neighborhood(path(4), mask(1)) == mask(0, 1, 2)

    def test_empty(self):
        assert closed_neighborhood(path(4), 0) == 0

    def test_dominates(self):
        assert dominates(path(4), mask(1, 2)) and not dominates(path(4), mask(0, 1))


class TestConnectivity:
    @pytest.mark.parametrize("s, expected", [((0, 1), True), ((0, 3), False), ((2,), True), ((), False)])
    def test_p4(self, s, expected):
        assert is_connected_induced(path(4), mask(*s)) is expected

    def test_bfs_oracle(self):
        rng = random.Random(11)
        for _ in range(1000):
            n = rng.randint(1, 16)
            g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.25])
            s = rng.getrandbits(n)
            nodes = members(s)
            expected = bool(nodes) and nx.is_connected(to_nx(g).subgraph(nodes))
            assert is_connected_induced(g, s) is expected

    def test_components(self):
        assert connected_components(complete(3)) == [mask(0, 1, 2)]
        assert connected_components(Graph.from_edges(3, [(0, 1)])) == [mask(0, 1), mask(2)]
        assert connected_components(Graph(0, ())) == []

    @given(graphs(max_n=12))
    def test_components_match_networkx(self, g):
        ours = sorted(members(c) for c in connected_components(g))
        theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
        assert ours == theirs
        assert [min(members(c)) for c in connected_components(g)] == sorted(min(c) for c in theirs)


class TestTwins:
    def test_complete(self):
        assert are_true_twins(complete(3), 0, 1)

    def test_path(self):
        assert not are_true_twins(path(4), 0, 1)

    def test_pendant_breaks_twins(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
        assert not are_true_twins(g, 0, 1)
        assert are_true_twins(g, 1, 2)

    def test_same_vertex(self):
        with pytest.raises(ValueError):
            are_true_twins(complete(3), 1, 1)

    def test_transitive_exhaustively(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(3, 8)
            g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.6])
            for a, b, c in combinations(range(n), 3):
                if are_true_twins(g, a, b) and are_true_twins(g, b, c):
                    assert are_true_twins(g, a, c)


class TestDeleteEdges:
    def test_triangle_to_path(self):
        assert sorted(delete_edges(complete(3), [(0, 1)]).edges()) == [(0, 2), (1, 2)]

    def test_identity(self):
        assert delete_edges(path(4), []).adj == path(4).adj

    def test_splits_path(self):
        g = delete_edges(path(4), [(1, 2)])
        assert connected_components(g) == [mask(0, 1), mask(2, 3)]

    def test_non_edge(self):
        with pytest.raises(ValueError):
            delete_edges(path(4), [(0, 2)])


class TestConnectedSubsets:
    @settings(max_examples=60)
    @given(graphs(max_n=9, min_n=1), st.integers(1, 4), st.data())
    def test_matches_exhaustive(self, g, size, data):
        root = data.draw(st.integers(0, g.n - 1))
        allowed = data.draw(st.integers(0, full(g.n))) | 1 << root
        got = list(connected_subsets(g.adj, root, size, allowed))
        assert len(got) == len(set(got))
        want = {mask_of(c) for c in combinations(members(allowed), size)
                if root in c and is_connected_induced(g, mask_of(c))}
        assert set(got) == want
