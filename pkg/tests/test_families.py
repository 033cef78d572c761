"""
Tests for the constructive family algorithms
"""

import pytest

from libs.core.errors import (
    CertificateError,
    FamilyConstructionError,
    ParameterRangeError,
    RecognitionError,
)
from libs.families import (
    Family,
    block_cycle_solution,
    check_double_tree,
    chordal_psd_identity,
    compose_vertex_sum,
    consecutive_or_pendant_trees,
    double_path_solution,
    double_tree_cut_pair,
    fallback_counts,
    k_cluster_parameters,
    k_tree_tree_cover_odd,
    outerplanar_solution,
    p2_interval_witness,
    reset_fallbacks,
    rooted_at,
    series_paths_solution,
    tree_solution,
)
from libs.families.double_paths import left_to_right, orient_parallel
from libs.forcing import CoverKind, Rule, is_forcing_set, make_cover, validate_cover
from libs.generators import (
    canonical,
    random_block_cycle,
    random_k_cluster,
    random_k_tree,
    random_outerplanar,
    random_tree,
)
from libs.graphs import component_masks, from_edge_list, parse_graph6
from libs.solvers import (
    path_cover_number,
    psd_forcing_number,
    tree_cover_number,
    zero_forcing_number,
)
from libs.structure import (
    chordal_peo,
    classify_block_cycle,
    double_path_certificate,
    k_cluster_certificate,
    k_tree_certificate,
    outerplanar_embedding,
)


def assert_consistent(solution):
    """The forcing set forces, and its roots are the cover's roots"""
    assert is_forcing_set(solution.graph, solution.forcing_set, solution.rule)
    assert solution.cover.roots == solution.forcing_set
    assert solution.run.complete


class TestBlockCycle:
    def test_bowtie(self, bowtie):
        solution = block_cycle_solution(bowtie, classify_block_cycle(bowtie))
        assert solution.value == 3
        assert solution.family is Family.BLOCK_CYCLE
        assert_consistent(solution)

    def test_cycle(self, c5):
        solution = block_cycle_solution(c5, classify_block_cycle(c5))
        assert solution.value == 2
        assert solution.family is Family.UNICYCLIC

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_exact_values(self, seed):
        g = random_block_cycle(3, 4, seed)
        solution = block_cycle_solution(g, classify_block_cycle(g))
        assert solution.value == zero_forcing_number(g).value == path_cover_number(g).value
        assert_consistent(solution)

    def test_wrong_certificate(self, fan6):
        with pytest.raises(CertificateError):
            block_cycle_solution(fan6, chordal_peo(fan6))


class TestDoublePaths:
    def test_ladder(self):
        ladder = canonical("grid", 2, 3)
        solution = double_path_solution(ladder, double_path_certificate(ladder))
        assert solution.value == 2
        assert solution.cover.kind is CoverKind.PATH_COVER
        assert_consistent(solution)

    def test_left_ends_start_the_chains(self):
        ladder = canonical("grid", 2, 3)
        assert orient_parallel(ladder.adjacency, [0, 1, 2], [5, 4, 3]) == [3, 4, 5]
        assert left_to_right(ladder.adjacency, [[2, 1, 0], [3, 4, 5]]) == [[2, 1, 0], [5, 4, 3]]
        cert = double_path_certificate(ladder)
        reset_fallbacks()
        solution = double_path_solution(ladder, cert)
        oriented = left_to_right(ladder.adjacency, cert.evidence.paths)
        assert solution.forcing_set == tuple(sorted(p[0] for p in oriented))
        assert fallback_counts() == {}

    def test_crossing_rungs_have_no_direction(self):
        # rungs 0-4, 1-3 and 1-5 cross whichever way 3-4-5 runs
        g = from_edge_list(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 4), (1, 3), (1, 5)])
        assert orient_parallel(g.adjacency, [0, 1, 2], [3, 4, 5]) is None

    def test_grid_series(self, grid3):
        cert = double_path_certificate(grid3)
        solution = series_paths_solution(grid3, cert)
        assert solution.value == 3
        assert solution.family is Family.SERIES_OF_PARALLEL_PATHS

    def test_series_needs_series_certificate(self, c5):
        with pytest.raises(CertificateError):
            series_paths_solution(c5, double_path_certificate(c5))


class TestDoubleTrees:
    def test_check(self):
        c4 = canonical("cycle", 4)
        m1, m2 = check_double_tree(c4, [0, 1], [2, 3])
        assert (m1, m2) == (0b0011, 0b1100)

    def test_rejects_trees_and_bad_splits(self, p5):
        with pytest.raises(CertificateError):
            check_double_tree(p5, [0, 1], [2, 3, 4])
        with pytest.raises(CertificateError):
            check_double_tree(canonical("cycle", 4), [0, 2], [1, 3])

    def test_cut_pair(self):
        c4 = canonical("cycle", 4)
        u, solution = double_tree_cut_pair(c4, [0, 1], [2, 3], 0)
        assert u in (2, 3)
        assert solution.forcing_set == tuple(sorted((0, u)))
        assert solution.rule is Rule.POSITIVE

    def test_inner_vertex_pairs_with_a_cut(self):
        ladder = canonical("grid", 2, 3)
        reset_fallbacks()
        u, solution = double_tree_cut_pair(ladder, [0, 1, 2], [3, 4, 5], 1)
        assert u in (3, 4, 5)
        rest = ladder.full_mask & ~(1 << 1) & ~(1 << u)
        assert len(component_masks(ladder.adjacency, rest)) > 1
        assert solution.forcing_set == tuple(sorted((1, u)))
        assert_consistent(solution)
        assert fallback_counts() == {}

    def test_hanging_branch(self):
        # C4 on 0..3 split as [0, 1] / [2, 3], with a branch 4 - 5 hanging off 1
        g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5)])
        reset_fallbacks()
        for v in (0, 1, 4, 5):
            u, solution = double_tree_cut_pair(g, [0, 1, 4, 5], [2, 3], v)
            assert u in (2, 3)
            assert_consistent(solution)
        assert fallback_counts() == {}

    def test_vertex_must_be_in_first_tree(self):
        with pytest.raises(CertificateError):
            double_tree_cut_pair(canonical("cycle", 4), [0, 1], [2, 3], 2)


class TestOuterplanar:
    def test_pendant_tree(self):
        c6 = canonical("cycle", 6)
        cover = make_cover(c6, CoverKind.TREE_COVER, [[0, 1, 2], [3, 4, 5]])
        shape = consecutive_or_pendant_trees(c6, outerplanar_embedding(c6), cover)
        assert shape.pendant == 0
        assert shape.pendant_neighbour == 1

    def test_non_minimum_cover_rejected(self):
        c6 = canonical("cycle", 6)
        cover = make_cover(c6, CoverKind.TREE_COVER, [[0, 1], [2, 3], [4, 5]])
        with pytest.raises(CertificateError):
            consecutive_or_pendant_trees(c6, outerplanar_embedding(c6), cover)

    def test_small_values(self, c5, fan6):
        assert outerplanar_solution(c5).value == 2
        assert outerplanar_solution(fan6).value == 2

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_tree_cover_number(self, seed):
        g = random_outerplanar(8, 0.5, seed, outer_drop=0.3)
        solution = outerplanar_solution(g)
        assert solution.value == tree_cover_number(g).value == psd_forcing_number(g).value
        validate_cover(g, solution.cover)
        assert_consistent(solution)

    def test_not_outerplanar(self):
        with pytest.raises(RecognitionError):
            outerplanar_solution(canonical("complete", 4))

    def test_trees(self, p5, c5):
        assert tree_solution(p5).value == 1
        with pytest.raises(RecognitionError):
            tree_solution(c5)


class TestVertexSum:
    def test_triangles(self):
        k3 = canonical("complete", 3)
        sol = outerplanar_solution(k3)
        composed = compose_vertex_sum(sol, sol, 0, 0)
        assert composed.value == 3
        assert composed.graph.n == 5

    def test_trees(self):
        g, h = random_tree(5, 1), random_tree(4, 2)
        composed = compose_vertex_sum(tree_solution(g), tree_solution(h), 3, 1)
        assert composed.value == 1

    def test_cycle_and_path(self):
        composed = compose_vertex_sum(
            outerplanar_solution(canonical("cycle", 4)),
            tree_solution(canonical("path", 3)),
            2,
            1,
        )
        assert composed.value == 2
        assert composed.value == psd_forcing_number(composed.graph).value

    @pytest.mark.parametrize("g6, h6", [("EjeG", "GhKGKC"), ("Bw", "EjeG"), ("Dhc", "Dhc")])
    def test_every_identification(self, g6, h6):
        g, h = parse_graph6(g6), parse_graph6(h6)
        sol_g, sol_h = outerplanar_solution(g), outerplanar_solution(h)
        for v_g in g.vertices():
            for v_h in h.vertices():
                composed = compose_vertex_sum(sol_g, sol_h, v_g, v_h)
                assert_consistent(composed)
                assert composed.value == sol_g.value + sol_h.value - 1
                assert composed.value == psd_forcing_number(composed.graph).value

    def test_rooted_at_keeps_the_count(self):
        g = parse_graph6("GhKGKC")
        sol = outerplanar_solution(g)
        for x in g.vertices():
            trees = rooted_at(sol, x)
            assert len(trees) == sol.value
            assert any(tree[0] == x for tree in trees)
            assert is_forcing_set(g, [tree[0] for tree in trees], Rule.POSITIVE)

    def test_standard_rule_input(self, c5, p5):
        standard = block_cycle_solution(c5, classify_block_cycle(c5))
        with pytest.raises(CertificateError):
            compose_vertex_sum(standard, tree_solution(p5), 0, 0)


class TestKTrees:
    @pytest.mark.parametrize(
        "k, attachments, extra, z_plus, t",
        [(2, 3, 3, 3, 3), (2, 1, 1, 2, 2), (3, 2, 3, 3, 2), (1, 1, 2, 1, 1)],
    )
    def test_cluster_formulas(self, k, attachments, extra, z_plus, t):
        g = random_k_cluster(k, attachments, extra, seed=k * 10 + attachments)
        params = k_cluster_parameters(k_cluster_certificate(g, k))
        assert params.s_size == attachments
        assert (params.z_plus, params.t) == (z_plus, t)
        assert psd_forcing_number(g).value == z_plus
        assert tree_cover_number(g).value == t

    def test_three_cluster_with_two_attachment_sets(self):
        # K4 on 0..3; vertex 4 sees {0, 1, 2} and vertex 5 sees {0, 1, 3}
        edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
        edges += [(4, 0), (4, 1), (4, 2), (5, 0), (5, 1), (5, 3)]
        g = from_edge_list(6, edges)
        params = k_cluster_parameters(k_cluster_certificate(g, 3))
        assert params.s_size == 2
        assert (params.z_plus, params.t) == (3, 2)
        assert psd_forcing_number(g).value == 3
        assert tree_cover_number(g).value == 2

    def test_formulas_need_a_cluster(self, fan6):
        with pytest.raises(CertificateError):
            k_cluster_parameters(k_tree_certificate(fan6, 2))

    def test_odd_cover(self):
        k4 = canonical("complete", 4)
        cover = k_tree_tree_cover_odd(k4, k_tree_certificate(k4, 3), 3)
        assert cover.size == 2
        validate_cover(k4, cover)

    @pytest.mark.parametrize("seed", range(4))
    def test_odd_cover_on_three_trees(self, seed):
        g = random_k_tree(7, 3, False, seed)
        cover = k_tree_tree_cover_odd(g, k_tree_certificate(g, 3), 3)
        validate_cover(g, cover)
        assert cover.size == 2 == tree_cover_number(g).value

    def test_odd_cover_on_a_tree(self):
        g = random_tree(7, 3)
        cover = k_tree_tree_cover_odd(g, k_tree_certificate(g, 1), 1)
        assert cover.size == 1

    def test_even_k_rejected(self, fan6):
        with pytest.raises(FamilyConstructionError):
            k_tree_tree_cover_odd(fan6, k_tree_certificate(fan6, 2), 2)

    @pytest.mark.parametrize("seed", range(4))
    def test_chordal_identity_on_two_trees(self, seed):
        g = random_k_tree(8, 2, False, seed)
        assert chordal_psd_identity(g, chordal_peo(g)) == psd_forcing_number(g).value

    def test_chordal_identity(self, p5):
        k4 = canonical("complete", 4)
        assert chordal_psd_identity(k4, chordal_peo(k4)) == 3
        p4 = canonical("path", 4)
        assert chordal_psd_identity(p4, chordal_peo(p4)) == 1
        assert chordal_psd_identity(p5, chordal_peo(p5)) == psd_forcing_number(p5).value


class TestWitnesses:
    @pytest.mark.parametrize(
        "m, n, k", [(4, 4, 1), (2, 2, 1), (2, 2, 2)] + [(5, 5, k) for k in range(1, 6)]
    )
    def test_two_paths(self, m, n, k):
        g = p2_interval_witness(m, n, k)
        assert g.n == m + n
        assert g.edge_count == (m - 1) + (n - 1) + k * n
        assert path_cover_number(g).value == 2
        assert zero_forcing_number(g).value == k + 1

    def test_k_out_of_range(self):
        with pytest.raises(ParameterRangeError):
            p2_interval_witness(3, 3, 4)
        with pytest.raises(ParameterRangeError):
            p2_interval_witness(3, 3, 0)
