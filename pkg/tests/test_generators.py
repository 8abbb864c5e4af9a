"""Generator families: exact counts, K4-freeness, seeded reproducibility."""
from itertools import combinations

import pytest

from k4cut.errors import InputError
from k4cut.graph import Graph
from k4cut.generators import (
    GeneratorSpec,
    SplitMix64,
    blowup,
    circulant_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    petersen_graph,
    random_gnp,
    random_k4free,
    random_k4free_process,
    random_regular,
    random_tripartite,
)


class TestSplitMix64:
    # golden values cross-checked against an independent C implementation
    def test_reference_stream_seed0(self):
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(4)] == [
            16294208416658607535,
            7960286522194355700,
            487617019471545679,
            17909611376780542444,
        ]

    def test_reference_stream_seed42(self):
        rng = SplitMix64(42)
        assert [rng.next_u64() for _ in range(4)] == [
            13679457532755275413,
            2949826092126892291,
            5139283748462763858,
            6349198060258255764,
        ]

    def test_seed_wraps_to_64_bits(self):
        assert SplitMix64(1 << 64).next_u64() == SplitMix64(0).next_u64()

    def test_below_range(self):
        rng = SplitMix64(7)
        for _ in range(100):
            assert 0 <= rng.below(13) < 13

    def test_shuffle_is_permutation(self):
        rng = SplitMix64(3)
        items = list(range(20))
        rng.shuffle(items)
        assert sorted(items) == list(range(20))

    def test_bernoulli_extremes(self):
        rng = SplitMix64(5)
        assert all(rng.bernoulli(1.0) for _ in range(20))
        assert not any(rng.bernoulli(0.0) for _ in range(20))


class TestCompleteMultipartite:
    def test_turan_9(self):
        g = complete_multipartite([3, 3, 3])
        assert (g.n, g.e, g.triangle_count()) == (9, 27, 27)

    def test_singleton_parts_make_complete(self):
        assert complete_multipartite([1, 1, 1, 1]) == complete_graph(4)

    def test_octahedron(self):
        g = complete_multipartite([2, 2, 2])
        assert g.e == 12

    def test_three_parts_k4free_four_parts_not(self):
        assert complete_multipartite([2, 3, 4]).is_k4_free()
        assert not complete_multipartite([1, 1, 1, 2]).is_k4_free()
        assert complete_multipartite([0, 2, 2, 2]).is_k4_free()  # zero part drops out

    def test_rejects_all_zero(self):
        with pytest.raises(InputError):
            complete_multipartite([0, 0])
        with pytest.raises(InputError):
            complete_multipartite([-1, 2])


class TestBlowup:
    def test_identity(self, c5):
        assert blowup(c5, 1) == c5

    def test_c5_by_2(self, c5):
        g = blowup(c5, 2)
        assert (g.n, g.e) == (10, 20)
        # triangle-freeness by exhaustive check
        assert not any(
            g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
            for a, b, c in combinations(range(10), 3)
        )

    def test_k3_by_3_is_turan(self, k3, k333):
        assert blowup(k3, 3) == k333

    def test_rejects_zero_factor(self, c5):
        with pytest.raises(InputError):
            blowup(c5, 0)


class TestRandomTripartite:
    def test_p_one_is_complete_multipartite(self):
        # replay the documented draw order to recover the parts
        seed = 11
        g = random_tripartite(12, 1.0, seed)
        rng = SplitMix64(seed)
        part = [rng.below(3) for _ in range(12)]
        for u in range(12):
            for v in range(u + 1, 12):
                assert g.has_edge(u, v) == (part[u] != part[v])

    def test_p_zero_is_empty(self):
        assert random_tripartite(12, 0.0, 5).e == 0

    def test_always_k4free(self):
        for seed in range(10):
            assert random_tripartite(15, 0.9, seed).is_k4_free()

    def test_seed_determinism(self):
        assert random_tripartite(10, 0.5, 9) == random_tripartite(10, 0.5, 9)
        assert random_tripartite(10, 0.5, 9) != random_tripartite(10, 0.5, 10)


class TestRandomK4FreeProcess:
    def test_always_k4free(self):
        for seed in (1, 7, 123):
            g = random_k4free_process(15, seed)
            assert g.is_k4_free()

    def test_determinism(self):
        assert random_k4free_process(12, 3) == random_k4free_process(12, 3)

    def test_target_edges(self):
        g = random_k4free_process(10, 4, target_edges=7)
        assert g.e == 7  # small targets are always reachable

    def test_saturates_without_target(self):
        # every pair was tried once; a rejected pair stays rejected, so
        # every remaining non-edge must close a K4
        g = random_k4free_process(8, 2)
        for u in range(8):
            for v in range(u + 1, 8):
                if g.has_edge(u, v):
                    continue
                h = Graph.from_edge_list(g.n, g.edges() + [(u, v)])
                assert not h.is_k4_free()


class TestRandomRegular:
    @pytest.mark.parametrize("n,d", [(6, 3), (10, 3), (12, 5), (18, 10), (20, 7)])
    def test_degrees(self, n, d):
        g = random_regular(n, d, seed=n * 100 + d)
        assert all(dv == d for dv in g.degrees())

    def test_determinism(self):
        assert random_regular(10, 4, 3) == random_regular(10, 4, 3)

    def test_rejects_odd_product(self):
        with pytest.raises(InputError):
            random_regular(5, 3, 0)

    def test_circulant_complete(self):
        assert circulant_graph(5, 4) == complete_graph(5)


class TestNamedGraphs:
    def test_petersen(self):
        g = petersen_graph()
        assert (g.n, g.e) == (10, 15)
        assert all(d == 3 for d in g.degrees())
        assert g.triangle_count() == 0

    def test_cycle_rejects_small(self):
        with pytest.raises(InputError):
            cycle_graph(2)


class TestDispatch:
    def test_random_k4free_tripartite(self):
        spec = GeneratorSpec("random_tripartite", {"n": 12, "p": 1.0}, seed=1)
        assert random_k4free(spec).is_k4_free()

    def test_random_k4free_rejects_gnp(self):
        with pytest.raises(InputError):
            random_k4free(GeneratorSpec("random_gnp", {"n": 10, "p": 0.5}, seed=1))

    def test_random_k4free_rejects_four_parts(self):
        spec = GeneratorSpec("complete_multipartite", {"parts": [1, 1, 1, 1]})
        with pytest.raises(InputError):
            random_k4free(spec)

    def test_gnp_determinism(self):
        assert random_gnp(10, 0.4, 2) == random_gnp(10, 0.4, 2)
