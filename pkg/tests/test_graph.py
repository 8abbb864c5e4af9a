"""Graph construction, counting primitives, and the edge-list format."""
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k4cut.errors import InputError, K4FoundError
from k4cut.generators import complete_multipartite, random_gnp
from k4cut.graph import Graph, format_edge_list, mask_of, parse_edge_list


def naive_triangles(g):
    return [
        t for t in combinations(range(g.n), 3)
        if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])
    ]


def naive_has_k4(g):
    return any(
        all(g.has_edge(a, b) for a, b in combinations(quad, 2))
        for quad in combinations(range(g.n), 4)
    )


def graphs(max_n=8):
    return st.builds(
        random_gnp,
        st.integers(min_value=0, max_value=max_n),
        st.sampled_from([0.1, 0.3, 0.5, 0.8]),
        st.integers(min_value=0, max_value=2**32),
    )


class TestConstruction:
    def test_k3(self):
        g = Graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        assert g.e == 3
        assert g.triangle_count() == 1

    def test_c5(self, c5):
        assert c5.e == 5
        assert all(c5.degree(v) == 2 for v in range(5))

    def test_duplicates_collapse(self):
        g = Graph.from_edge_list(4, [(0, 1), (0, 1), (1, 0)])
        assert g.e == 1

    def test_out_of_range(self):
        with pytest.raises(InputError):
            Graph.from_edge_list(3, [(0, 3)])
        with pytest.raises(InputError):
            Graph.from_edge_list(3, [(-1, 0)])

    def test_self_loop(self):
        with pytest.raises(InputError):
            Graph.from_edge_list(3, [(1, 1)])

    def test_empty(self):
        g = Graph.from_edge_list(0, [])
        assert g.n == 0 and g.e == 0

    def test_edges_sorted(self, k333):
        edges = k333.edges()
        assert edges == sorted(edges)
        assert len(edges) == 27


class TestCommonNeighbors:
    def test_k4_pair(self, k4):
        assert k4.common_neighbors(0, 1) == [2, 3]
        assert k4.codegree(0, 1) == 2

    def test_c5_adjacent(self, c5):
        assert c5.common_neighbors(0, 1) == []

    def test_k333_cross_pair(self, k333):
        # parts are {0,1,2}, {3,4,5}, {6,7,8}; verify against direct enumeration
        expected = [w for w in range(9) if k333.has_edge(0, w) and k333.has_edge(3, w)]
        assert k333.common_neighbors(0, 3) == expected == [6, 7, 8]

    def test_rejects_equal_vertices(self, k4):
        with pytest.raises(InputError):
            k4.common_neighbors(2, 2)


class TestTriangles:
    def test_k4(self, k4):
        assert k4.triangle_count() == 4

    def test_c5(self, c5):
        assert c5.triangle_count() == 0

    def test_k333(self, k333):
        assert k333.triangle_count() == 27  # (n/3)^3 at n=9

    @given(graphs())
    @settings(max_examples=40)
    def test_matches_naive(self, g):
        assert [tuple(t) for t in g.triangles()] == naive_triangles(g)


class TestK4Free:
    def test_k4(self, k4):
        assert not k4.is_k4_free()
        assert k4.find_k4() == (0, 1, 2, 3)

    def test_k333(self, k333):
        assert k333.is_k4_free()

    def test_c5(self, c5):
        assert c5.is_k4_free()

    @given(graphs())
    @settings(max_examples=60)
    def test_matches_naive(self, g):
        assert g.is_k4_free() == (not naive_has_k4(g))

    def test_witness_is_clique(self):
        g = random_gnp(8, 0.9, 7)
        quad = g.find_k4()
        assert quad is not None
        assert all(g.has_edge(a, b) for a, b in combinations(quad, 2))


class TestTuranCheck:
    def test_k333_equality(self, k333):
        assert k333.turan_check()
        assert 3 * k333.e == k333.n**2

    def test_c5(self, c5):
        assert c5.turan_check()

    def test_single_edge(self):
        assert Graph.from_edge_list(2, [(0, 1)]).turan_check()

    def test_raises_on_k4(self, k4):
        with pytest.raises(K4FoundError):
            k4.turan_check()


class TestIdentities:
    @given(graphs(max_n=12))
    @settings(max_examples=40)
    def test_degree_sum(self, g):
        assert sum(g.degrees()) == 2 * g.e

    @given(graphs(max_n=12))
    @settings(max_examples=40)
    def test_ev_sum_is_3m(self, g):
        assert sum(g.neighborhood_edge_counts()) == 3 * g.triangle_count()

    @given(graphs(max_n=12))
    @settings(max_examples=40)
    def test_codegree_sum_over_edges_is_3m(self, g):
        total = sum(g.codegree(u, v) for u, v in g.edges())
        assert total == 3 * g.triangle_count()

    def test_local_stats_bounds(self, k333):
        for v in range(k333.n):
            stats = k333.local_stats(v)
            assert stats.degree == 6 and stats.ev == 9


class TestDerivedGraphs:
    def test_without_edges(self, k4):
        g = k4.without_edges([(0, 1)])
        assert g.e == 5 and not g.has_edge(0, 1)

    def test_without_missing_edge(self, c5):
        with pytest.raises(InputError):
            c5.without_edges([(0, 2)])

    def test_relabel_preserves_counts(self, k333):
        perm = [8, 0, 7, 1, 6, 2, 5, 3, 4]
        h = k333.relabel(perm)
        assert h.e == k333.e and h.triangle_count() == k333.triangle_count()

    def test_induced_subgraph(self, k333):
        sub, keep = k333.induced_subgraph([0, 1, 3, 6])
        assert keep == [0, 1, 3, 6]
        assert sub.e == 5  # 0,1 same part; cross edges 0-3,0-6,1-3,1-6,3-6

    def test_two_coloring(self, c5):
        assert c5.two_coloring() is None
        c6 = Graph.from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])
        colors = c6.two_coloring()
        assert colors is not None
        assert all(colors[u] != colors[v] for u, v in c6.edges())

    def test_edges_inside_and_between(self, k222):
        part = mask_of([0, 1])
        rest = k222.full_mask & ~part
        assert k222.edges_inside(part) == 0
        assert k222.edges_between(part, rest) == 8


class TestEdgeListFormat:
    def test_exact_text(self, k3):
        assert format_edge_list(k3) == "p 3 3\ne 1 2\ne 1 3\ne 2 3\n"

    def test_roundtrip(self, k333):
        assert parse_edge_list(format_edge_list(k333)) == k333

    def test_comments_ignored(self):
        g = parse_edge_list("c a comment\np 2 1\nc another\ne 1 2\n")
        assert g.e == 1

    def test_rejects_unsorted_endpoints(self):
        with pytest.raises(InputError):
            parse_edge_list("p 3 1\ne 2 1\n")

    def test_rejects_wrong_count(self):
        with pytest.raises(InputError):
            parse_edge_list("p 3 2\ne 1 2\n")

    def test_rejects_missing_header(self):
        with pytest.raises(InputError):
            parse_edge_list("e 1 2\n")

    def test_rejects_unknown_record(self):
        with pytest.raises(InputError):
            parse_edge_list("p 2 1\nx 1 2\n")

    @given(graphs(max_n=10))
    @settings(max_examples=30)
    def test_roundtrip_random(self, g):
        assert parse_edge_list(format_edge_list(g)) == g


def test_multipartite_fixture_sizes():
    g = complete_multipartite([2, 3, 4])
    assert g.n == 9 and g.e == 2 * 3 + 2 * 4 + 3 * 4
