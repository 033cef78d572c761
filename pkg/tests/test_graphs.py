"""
Tests for graph construction, formats and operations
"""

import pytest
from hypothesis import given, settings

from libs.core.errors import GraphFormatError, VertexRangeError
from libs.generators import canonical
from libs.graphs import (
    components,
    from_edge_list,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    read_graph,
    to_dot,
    to_edge_list,
    to_graph6,
    vertex_sum,
)

from .strategies import graphs


class TestGraph:
    def test_edges_are_sorted_and_deduplicated(self):
        g = from_edge_list(4, [(2, 1), (1, 2), (0, 3), (3, 2)])
        assert g.edges() == [(0, 3), (1, 2), (2, 3)]
        assert g.edge_count == 3

    def test_degree_and_neighbours(self, p5):
        assert p5.degree(0) == 1
        assert p5.degree(2) == 2
        assert p5.neighbours(2) == [1, 3]
        assert p5.min_degree() == 1

    def test_self_loop_rejected(self):
        with pytest.raises(VertexRangeError):
            from_edge_list(3, [(1, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(VertexRangeError):
            from_edge_list(3, [(0, 3)])

    def test_vertex_check(self, k3):
        with pytest.raises(ValueError):
            k3.neighbours(5)

    def test_connectivity(self):
        assert from_edge_list(0, []).is_connected()
        assert not from_edge_list(3, [(0, 1)]).is_connected()

    def test_networkx_round_trip(self, grid3):
        assert type(grid3).from_networkx(grid3.to_networkx()) == grid3


class TestGraph6:
    def test_triangle(self):
        g = parse_graph6("Bw")
        assert g.n == 3
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_path_on_three(self):
        assert parse_graph6("Bg").edges() == [(0, 1), (1, 2)]

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count == 0

    def test_header_is_accepted(self):
        assert parse_graph6(">>graph6<<Bw") == parse_graph6("Bw")

    def test_encode(self, k3):
        assert to_graph6(k3) == "Bw"

    @pytest.mark.parametrize("text", ["", "B w", "~?@c", "Bww"])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_graph6(text)

    @pytest.mark.parametrize("text", ["Bé", "é", "Bÿ", "Bw–"])
    def test_non_ascii_rejected(self, text):
        with pytest.raises(GraphFormatError, match="not ASCII"):
            parse_graph6(text)

    def test_too_large_to_encode(self):
        with pytest.raises(GraphFormatError):
            to_graph6(canonical("path", 63))

    @given(graphs(min_n=0, max_n=9))
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g


class TestEdgeList:
    def test_parse_with_comments(self):
        text = "# a path\n3\n0 1  # first\n\n1 2\n"
        assert parse_edge_list(text).edges() == [(0, 1), (1, 2)]

    def test_bad_count(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("x\n0 1\n")

    def test_bad_line(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("3\n0 1 2\n")

    def test_out_of_range_endpoint(self):
        with pytest.raises(VertexRangeError):
            parse_edge_list("2\n0 2\n")

    def test_emit(self, p5):
        assert to_edge_list(p5) == "5\n0 1\n1 2\n2 3\n3 4\n"
        assert parse_edge_list(to_edge_list(p5)) == p5

    def test_read_graph_detects_format(self, k3):
        assert read_graph("Bw\n") == k3
        assert read_graph("3\n0 1\n0 2\n1 2\n") == k3

    def test_empty_input(self):
        with pytest.raises(GraphFormatError):
            read_graph("  \n")


class TestDot:
    def test_black_vertices_and_parts(self, p5):
        text = to_dot(p5, black=[0], parts=[(0, 1, 2), (3, 4)])
        assert text.startswith("graph G {")
        assert "0 [style=filled, fillcolor=black" in text
        assert "0 -- 1 [color=red" in text
        assert "2 -- 3;" in text

    def test_black_vertex_out_of_range(self, p5):
        with pytest.raises(VertexRangeError):
            to_dot(p5, black=[7])


class TestOperations:
    def test_induced_subgraph_relabels_in_order(self, c5):
        sub, relabel = induced_subgraph(c5, [4, 0, 1])
        assert relabel == {0: 0, 1: 1, 4: 2}
        assert sub.edges() == [(0, 1), (0, 2)]

    def test_vertex_sum_of_triangles(self, k3, bowtie):
        total, map_g, map_h = vertex_sum(k3, k3, 2, 0)
        assert total.n == 5
        assert total.edge_count == 6
        assert map_h[0] == 2
        assert map_g == {0: 0, 1: 1, 2: 2}
        assert sorted(total.degree(v) for v in total.vertices()) == sorted(
            bowtie.degree(v) for v in bowtie.vertices()
        )

    def test_components_ordered_by_smallest_member(self):
        g = from_edge_list(6, [(4, 5), (0, 3), (1, 2)])
        assert components(g) == [(0, 3), (1, 2), (4, 5)]

    @given(graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_components_partition_vertices(self, g):
        found = components(g)
        assert sorted(v for comp in found for v in comp) == list(g.vertices())
        for comp in found:
            sub, _ = induced_subgraph(g, comp)
            assert sub.is_connected()
