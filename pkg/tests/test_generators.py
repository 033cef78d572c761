"""
Tests for the seeded generators
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from libs.core.errors import ParameterRangeError
from libs.generators import (
    GenFamily,
    GenSpec,
    XorShift64Star,
    build,
    canonical,
    random_block_cycle,
    random_chordal,
    random_graph,
    random_k_cluster,
    random_k_tree,
    random_outerplanar,
    random_series_parallel_paths,
    random_tree,
    random_unicyclic,
)
from libs.graphs import to_graph6
from libs.structure import (
    CertificateKind,
    classify_block_cycle,
    double_path_certificate,
    is_chordal,
    is_outerplanar,
    k_cluster_certificate,
    k_tree_certificate,
)


class TestXorShift:
    def test_first_state(self):
        rng = XorShift64Star(1)
        rng.next_u64()
        assert rng.state == 0x2000001

    def test_zero_seed_is_replaced(self):
        assert XorShift64Star(0).state == 0x9E3779B97F4A7C15

    def test_same_seed_same_sequence(self):
        a, b = XorShift64Star(42), XorShift64Star(42)
        assert [a.next_u64() for _ in range(20)] == [b.next_u64() for _ in range(20)]

    @given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(min_value=1, max_value=1000))
    @settings(max_examples=50)
    def test_below_in_range(self, seed, n):
        rng = XorShift64Star(seed)
        assert all(0 <= rng.below(n) < n for _ in range(10))

    def test_between_and_random(self):
        rng = XorShift64Star(7)
        values = [rng.between(3, 5) for _ in range(200)]
        assert set(values) == {3, 4, 5}
        assert all(0.0 <= rng.random() < 1.0 for _ in range(100))

    def test_below_rejects_empty_range(self):
        with pytest.raises(ParameterRangeError):
            XorShift64Star(1).below(0)

    def test_shuffle_and_sample(self):
        rng = XorShift64Star(9)
        items = list(range(10))
        rng.shuffle(items)
        assert sorted(items) == list(range(10))
        picked = rng.sample(range(10), 4)
        assert len(set(picked)) == 4


class TestCanonical:
    @pytest.mark.parametrize(
        "family, params, n, m",
        [
            ("path", (5,), 5, 4),
            ("cycle", (6,), 6, 6),
            ("complete", (5,), 5, 10),
            ("complete_bipartite", (2, 3), 5, 6),
            ("grid", (3, 4), 12, 17),
            ("star", (4,), 5, 4),
            ("fan", (5,), 6, 9),
        ],
    )
    def test_sizes(self, family, params, n, m):
        g = canonical(family, *params)
        assert (g.n, g.edge_count) == (n, m)

    def test_grid_is_row_major(self):
        g = canonical("grid", 2, 3)
        assert g.has_edge(0, 1) and g.has_edge(0, 3) and not g.has_edge(2, 3)

    @pytest.mark.parametrize("family, params", [("cycle", (2,)), ("fan", (1,)), ("wheel", (5,))])
    def test_rejects(self, family, params):
        with pytest.raises(ParameterRangeError):
            canonical(family, *params)


class TestRandomFamilies:
    @pytest.mark.parametrize("seed", range(5))
    def test_trees(self, seed):
        g = random_tree(9, seed)
        assert g.is_connected() and g.edge_count == 8

    def test_gnp_extremes(self):
        assert random_graph(6, 0.0, 1).edge_count == 0
        assert random_graph(6, 1.0, 1).edge_count == 15

    @pytest.mark.parametrize("seed", range(5))
    def test_block_cycle(self, seed):
        cert = classify_block_cycle(random_block_cycle(5, 6, seed))
        assert cert.kind in (CertificateKind.BLOCK_CYCLE, CertificateKind.UNICYCLIC)

    @pytest.mark.parametrize("seed", range(5))
    def test_unicyclic(self, seed):
        g = random_unicyclic(8, 4, seed)
        assert g.edge_count == 8
        assert classify_block_cycle(g).kind is CertificateKind.UNICYCLIC

    @pytest.mark.parametrize("seed", range(5))
    def test_outerplanar(self, seed):
        assert random_outerplanar(8, 1.0, seed).edge_count == 13
        assert random_outerplanar(8, 0.0, seed).edge_count == 8
        g = random_outerplanar(9, 0.5, seed, outer_drop=0.5)
        assert g.is_connected() and is_outerplanar(g)

    @pytest.mark.parametrize("seed", range(5))
    def test_k_trees(self, seed):
        g = random_k_tree(8, 2, False, seed)
        assert g.edge_count == 3 + 5 * 2
        assert k_tree_certificate(g, 2) is not None
        assert k_cluster_certificate(random_k_tree(8, 2, True, seed), 2) is not None

    @pytest.mark.parametrize("attachments", [0, 1, 2, 3, 4])
    def test_k_cluster_attachment_count(self, attachments):
        g = random_k_cluster(3, attachments, attachments + 1 if attachments else 0, 5)
        cert = k_cluster_certificate(g, 3)
        assert len(cert.evidence.s_sets) == attachments

    def test_k_cluster_rejects(self):
        with pytest.raises(ParameterRangeError):
            random_k_cluster(2, 4, 4, 1)
        with pytest.raises(ParameterRangeError):
            random_k_cluster(2, 3, 2, 1)

    @pytest.mark.parametrize("seed", range(5))
    def test_chordal(self, seed):
        g = random_chordal(9, 3, 4, seed)
        assert g.is_connected() and is_chordal(g)
        assert g.edge_count <= 6 + 5 * 3

    def test_aligned_series_is_a_grid(self):
        g = random_series_parallel_paths(3, [3, 3, 3], 1, aligned=True)
        assert g == canonical("grid", 3, 3)

    @pytest.mark.parametrize("seed", range(5))
    def test_series_recognised(self, seed):
        g = random_series_parallel_paths(2, [4, 3], seed)
        assert double_path_certificate(g).kind is CertificateKind.DOUBLE_PATH

    def test_series_rejects_single_vertex_pairs(self):
        with pytest.raises(ParameterRangeError):
            random_series_parallel_paths(2, [1, 1], 0)
        with pytest.raises(ParameterRangeError):
            random_series_parallel_paths(1, [3], 0)


class TestGenSpec:
    def test_same_spec_same_graph(self):
        spec = GenSpec(family=GenFamily.OUTERPLANAR, n=10, inner_keep=0.4, seed=3)
        assert to_graph6(build(spec)) == to_graph6(build(spec.model_copy()))

    def test_json_round_trip(self):
        spec = GenSpec(family=GenFamily.SERIES_PATHS, lengths=[2, 3, 2], seed=11)
        again = GenSpec.model_validate_json(spec.model_dump_json())
        assert build(again) == build(spec)

    def test_default_seed_from_settings(self, configure):
        configure(default_seed=99)
        assert GenSpec(family=GenFamily.TREE, n=5).seed == 99

    def test_missing_parameters(self):
        with pytest.raises(ParameterRangeError):
            build(GenSpec(family=GenFamily.GRID, n=3))

    def test_p2_interval(self):
        g = build(GenSpec(family=GenFamily.P2_INTERVAL, m=3, n=3, k=2))
        assert g.n == 6
