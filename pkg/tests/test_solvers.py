"""
Tests for the exact parameter searches
"""

import pytest
from hypothesis import given, settings

from libs.core.errors import SearchBudgetExceeded
from libs.forcing import CoverKind, Rule, is_forcing_set, validate_cover
from libs.generators import canonical, random_tree
from libs.graphs import empty_graph, from_edge_list, parse_graph6
from libs.solvers import (
    Parameter,
    compute_parameters,
    covers_of_size,
    edge_clique_cover_number,
    induced_parts,
    path_cover_number,
    psd_forcing_number,
    tree_cover_number,
    zero_forcing_number,
)

from .strategies import graphs


class TestNamedValues:
    def test_triangle_from_graph6(self):
        assert zero_forcing_number(parse_graph6("Bw")).value == 2

    @pytest.mark.parametrize("n", range(1, 9))
    def test_path(self, n):
        g = canonical("path", n)
        assert zero_forcing_number(g).value == 1
        assert path_cover_number(g).value == 1
        assert psd_forcing_number(g).value == 1
        assert tree_cover_number(g).value == 1

    @pytest.mark.parametrize("n", range(2, 9))
    def test_complete(self, n):
        g = canonical("complete", n)
        assert zero_forcing_number(g).value == n - 1
        assert psd_forcing_number(g).value == n - 1
        assert path_cover_number(g).value == -(-n // 2)

    def test_grid(self, grid3):
        assert zero_forcing_number(grid3).value == 3
        assert path_cover_number(grid3).value == 2

    def test_cycle(self, c5):
        assert zero_forcing_number(c5).value == 2
        assert psd_forcing_number(c5).value == 2
        assert tree_cover_number(c5).value == 2

    def test_six_cycle(self):
        c6 = canonical("cycle", 6)
        assert zero_forcing_number(c6).value == 2
        assert path_cover_number(c6).value == 2

    def test_complete_bipartite(self):
        k23 = canonical("complete_bipartite", 2, 3)
        assert psd_forcing_number(k23).value == 2
        assert tree_cover_number(k23).value == 2

    def test_tree_covers(self):
        # induced trees of K5 are single edges
        assert tree_cover_number(canonical("complete", 5)).value == 3
        assert tree_cover_number(canonical("cycle", 4)).value == 2

    def test_bowtie(self, bowtie):
        assert zero_forcing_number(bowtie).value == 3
        assert path_cover_number(bowtie).value == 3
        assert psd_forcing_number(bowtie).value == 3

    def test_random_trees(self):
        for seed in range(10):
            g = random_tree(9, seed)
            assert psd_forcing_number(g).value == 1
            assert tree_cover_number(g).value == 1

    def test_components_add(self):
        g = from_edge_list(5, [(0, 1), (2, 3)])
        assert zero_forcing_number(g).value == 3
        assert path_cover_number(g).value == 3
        result = tree_cover_number(g)
        assert result.stats.components == 3

    def test_empty(self):
        g = empty_graph(0)
        assert zero_forcing_number(g).value == 0
        assert path_cover_number(g).value == 0


class TestCliqueCover:
    def test_values(self, bowtie):
        assert edge_clique_cover_number(canonical("complete", 4)).value == 1
        assert edge_clique_cover_number(canonical("path", 4)).value == 3
        assert edge_clique_cover_number(bowtie).value == 2
        assert edge_clique_cover_number(empty_graph(3)).value == 0

    def test_triangle_free(self):
        assert edge_clique_cover_number(canonical("cycle", 4)).value == 4
        assert edge_clique_cover_number(canonical("path", 3)).value == 2

    def test_cover_is_valid(self, fan6):
        result = edge_clique_cover_number(fan6)
        validate_cover(fan6, result.cover)
        assert result.value == 4

    def test_vertex_guard(self, configure):
        configure(clique_cover_max_vertices=3)
        with pytest.raises(SearchBudgetExceeded):
            edge_clique_cover_number(canonical("complete", 4))


class TestBudget:
    def test_forcing_search_stops(self, grid3):
        with pytest.raises(SearchBudgetExceeded) as info:
            zero_forcing_number(grid3, node_limit=1)
        assert info.value.limit == 1

    def test_settings_limit_applies(self, grid3, configure):
        configure(search_node_limit=1)
        with pytest.raises(SearchBudgetExceeded):
            zero_forcing_number(grid3)


class TestCertificates:
    def test_forcing_sets_force(self, grid3):
        z = zero_forcing_number(grid3)
        assert is_forcing_set(grid3, z.forcing_set, Rule.STANDARD)
        assert z.stats.lower_bound == 2
        zp = psd_forcing_number(grid3)
        assert is_forcing_set(grid3, zp.forcing_set, Rule.POSITIVE)

    def test_certificate_type_guard(self, grid3):
        with pytest.raises(TypeError):
            zero_forcing_number(grid3).cover
        with pytest.raises(TypeError):
            path_cover_number(grid3).forcing_set

    def test_record(self, p5):
        record = path_cover_number(p5).to_record()
        assert record["parameter"] == "P"
        assert record["certificate"]["parts"] == [[0, 1, 2, 3, 4]]

    def test_induced_paths_through_seed(self, c5):
        parts = list(induced_parts(c5.adjacency, c5.full_mask, 0, True))
        # single vertex, 2 edges, 3 two-edge paths, 2 three-edge paths through 0
        assert len(parts) == len(set(parts))
        assert all(p & 1 for p in parts)
        assert c5.full_mask not in parts

    def test_every_cover_of_a_size(self):
        c4 = canonical("cycle", 4)
        covers = list(covers_of_size(c4, CoverKind.PATH_COVER, 2))
        # any two of the four edges dropped leave two arcs
        assert len(covers) == 6
        assert len({c.as_sets() for c in covers}) == 6
        assert list(covers_of_size(c4, CoverKind.PATH_COVER, 1)) == []


@given(graphs(max_n=7))
@settings(max_examples=50, deadline=None)
def test_inequality_chain(g):
    results = compute_parameters(g, [Parameter.Z, Parameter.Z_PLUS, Parameter.P, Parameter.T])
    z, zp = results[Parameter.Z].value, results[Parameter.Z_PLUS].value
    p, t = results[Parameter.P].value, results[Parameter.T].value
    assert t <= zp <= z
    assert t <= p <= z
    validate_cover(g, results[Parameter.P].cover)
    validate_cover(g, results[Parameter.T].cover)
    assert results[Parameter.P].cover.size == p
