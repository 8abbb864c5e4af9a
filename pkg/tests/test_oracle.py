"""Oracle: brute-force max cut and the labeled-graph sweep.

naive_max_cut is the independent reference: a plain subset loop that
recounts every edge for every assignment, with no Gray code, bit
tricks, or numpy.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k4cut.cuts import bipartize, k4free_cut, neighborhood_cut
from k4cut.errors import CapacityError
from k4cut.generators import complete_multipartite, random_gnp, random_tripartite
from k4cut.graph import Graph
from k4cut.oracle import (
    canonical_edge_mask,
    edge_order,
    exact_max_cut,
    exhaustive_theorem_sweep,
    graph_from_edge_mask,
)


def naive_max_cut(g):
    best = 0
    best_code = 0
    for code in range(1 << max(0, g.n - 1)):
        side = code << 1
        cut = sum(
            1 for u, v in g.edges()
            if ((side >> u) & 1) != ((side >> v) & 1)
        )
        if cut > best:
            best, best_code = cut, code
    return best, best_code


def edge_mask_of(g):
    index = {uv: i for i, uv in enumerate(edge_order(g.n))}
    m = 0
    for u, v in g.edges():
        m |= 1 << index[(u, v)]
    return m


class TestExactMaxCut:
    def test_c5(self, c5):
        res = exact_max_cut(c5)
        assert (res.max_cut, res.min_deletions) == (4, 1)

    def test_k333(self, k333):
        res = exact_max_cut(k333)
        assert (res.max_cut, res.min_deletions) == (18, 9)

    def test_k222(self, k222):
        res = exact_max_cut(k222)
        assert (res.max_cut, res.min_deletions) == (8, 4)

    def test_witness_consistency(self, k333):
        res = exact_max_cut(k333)
        assert res.witness.cut_value == res.max_cut
        s0, s1 = res.witness.sides()
        assert sorted(s0 + s1) == list(range(9))

    def test_lowest_code_witness(self):
        for seed in range(6):
            g = random_gnp(9, 0.5, seed)
            res = exact_max_cut(g)
            expected_cut, expected_code = naive_max_cut(g)
            assert res.max_cut == expected_cut
            assert res.assignment_code == expected_code

    @given(st.integers(0, 2**32), st.integers(1, 9))
    @settings(max_examples=30)
    def test_matches_naive(self, seed, n):
        g = random_gnp(n, 0.5, seed)
        assert exact_max_cut(g).max_cut == naive_max_cut(g)[0]

    @given(st.integers(0, 2**32))
    @settings(max_examples=20)
    def test_relabel_invariant(self, seed):
        g = random_tripartite(10, 0.6, seed)
        from k4cut.generators import SplitMix64

        perm = list(range(g.n))
        SplitMix64(seed ^ 99).shuffle(perm)
        assert exact_max_cut(g).max_cut == exact_max_cut(g.relabel(perm)).max_cut

    def test_capacity_error(self):
        g = complete_multipartite([10, 10, 10])
        with pytest.raises(CapacityError):
            exact_max_cut(g, limit=20)

    def test_empty_and_tiny(self):
        assert exact_max_cut(Graph.from_edge_list(0, [])).max_cut == 0
        assert exact_max_cut(Graph.from_edge_list(1, [])).max_cut == 0
        res = exact_max_cut(Graph.from_edge_list(2, [(0, 1)]))
        assert (res.max_cut, res.assignment_code) == (1, 1)

    def test_oracle_dominates_engine(self):
        for seed in range(5):
            g = random_tripartite(12, 0.5, seed)
            res = exact_max_cut(g)
            assert res.max_cut >= neighborhood_cut(g).cut_value
            assert res.max_cut >= k4free_cut(g).cut_value
            _, report = bipartize(g)
            assert res.min_deletions <= report.deletions


class TestSweep:
    def test_n3(self):
        rep = exhaustive_theorem_sweep(3)
        assert rep.num_graphs == 8
        assert rep.max_min_deletions == 1  # K3
        assert rep.bound_holds

    def test_n4_all_k4free_but_one(self):
        rep = exhaustive_theorem_sweep(4)
        assert rep.num_k4free == 63  # only K4 itself is excluded

    def test_n5(self):
        rep = exhaustive_theorem_sweep(5)
        assert rep.max_min_deletions == 2
        assert rep.bound_holds

    def test_n6_unique_extremal(self):
        rep = exhaustive_theorem_sweep(6)
        assert rep.max_min_deletions == 4
        assert rep.bound_holds
        assert len(rep.extremal_canonical_masks) == 1
        k222_mask = edge_mask_of(complete_multipartite([2, 2, 2]))
        assert rep.extremal_canonical_masks[0] == canonical_edge_mask(6, k222_mask)
        assert rep.extremal_labeled_count == 15  # 6!/|Aut(K222)| = 720/48

    def test_histogram_totals(self):
        rep = exhaustive_theorem_sweep(5)
        assert sum(rep.deletions_histogram.values()) == rep.num_k4free

    def test_capacity(self):
        with pytest.raises(CapacityError):
            exhaustive_theorem_sweep(8)
        with pytest.raises(CapacityError):
            exhaustive_theorem_sweep(0)

    def test_sweep_agrees_with_oracle_at_n4(self):
        # recompute min deletions for every K4-free graph from scratch
        rep = exhaustive_theorem_sweep(4)
        recomputed = {}
        for mask in range(1 << 6):
            g = graph_from_edge_mask(4, mask)
            if g.is_k4_free():
                recomputed[mask] = g.e - naive_max_cut(g)[0]
        assert len(recomputed) == rep.num_k4free
        assert max(recomputed.values()) == rep.max_min_deletions


class TestCanonicalForm:
    def test_relabel_invariance(self, k222):
        mask = edge_mask_of(k222)
        perm = [3, 1, 4, 0, 5, 2]
        relabeled = edge_mask_of(k222.relabel(perm))
        assert canonical_edge_mask(6, mask) == canonical_edge_mask(6, relabeled)

    def test_distinguishes_nonisomorphic(self):
        path = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        star = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert canonical_edge_mask(4, edge_mask_of(path)) != canonical_edge_mask(
            4, edge_mask_of(star)
        )
