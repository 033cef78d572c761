"""
Tests for the colour-change engine and cover helpers
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from libs.core.errors import CertificateError, IncompleteRunError
from libs.forcing import (
    CoverKind,
    Rule,
    closure,
    derived_mask,
    extract_cover,
    guided_closure,
    is_forcing_set,
    make_cover,
    replay,
    reverse_chains,
    terminal_set,
    validate_cover,
)
from libs.generators import canonical
from libs.graphs import from_edge_list, mask_of

from .strategies import graphs


class TestStandardRule:
    def test_path_from_endpoint(self, p5):
        run = closure(p5, [0], Rule.STANDARD)
        assert run.complete
        assert run.rounds == 4
        assert [(f.forcer, f.forced) for f in run.forces] == [(0, 1), (1, 2), (2, 3), (3, 4)]

    def test_triangle_needs_two(self, k3):
        assert not is_forcing_set(k3, [0], Rule.STANDARD)
        assert is_forcing_set(k3, [0, 1], Rule.STANDARD)

    def test_smallest_forcer_wins(self):
        g = canonical("path", 3)
        run = closure(g, [0, 2], Rule.STANDARD)
        assert [(f.forcer, f.forced, f.round) for f in run.forces] == [(0, 1, 0)]

    def test_star_centre_stalls(self):
        run = closure(canonical("star", 3), [0], Rule.STANDARD)
        assert run.derived == (0,)
        assert not run.complete


class TestPositiveRule:
    def test_star_centre_forces_every_leaf(self):
        run = closure(canonical("star", 3), [0], Rule.POSITIVE)
        assert run.complete
        assert run.rounds == 1
        assert all(len(f.component_witness) == 1 for f in run.forces)

    def test_cycle_needs_two(self, c5):
        assert not is_forcing_set(c5, [0], Rule.POSITIVE)
        assert is_forcing_set(c5, [0, 1], Rule.POSITIVE)

    def test_any_tree_vertex_forces(self):
        tree = from_edge_list(7, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (0, 6)])
        for v in tree.vertices():
            assert is_forcing_set(tree, [v], Rule.POSITIVE)


@given(graphs(max_n=8), st.data())
@settings(max_examples=80, deadline=None)
def test_closure_monotone_and_idempotent(g, data):
    small = data.draw(st.sets(st.sampled_from(range(g.n)))) if g.n else set()
    extra = data.draw(st.sets(st.sampled_from(range(g.n)))) if g.n else set()
    for rule in Rule:
        a = derived_mask(g.adjacency, mask_of(small), rule)
        b = derived_mask(g.adjacency, mask_of(small | extra), rule)
        assert a & ~b == 0
        assert derived_mask(g.adjacency, a, rule) == a
    standard = derived_mask(g.adjacency, mask_of(small), Rule.STANDARD)
    positive = derived_mask(g.adjacency, mask_of(small), Rule.POSITIVE)
    assert standard & ~positive == 0


@given(graphs(max_n=8), st.data())
@settings(max_examples=60, deadline=None)
def test_runs_replay(g, data):
    black = data.draw(st.sets(st.sampled_from(range(g.n)), min_size=1))
    for rule in Rule:
        run = closure(g, black, rule)
        assert replay(run)
        assert run.derived == tuple(
            v for v in g.vertices() if derived_mask(g.adjacency, mask_of(black), rule) >> v & 1
        )


class TestRunRecords:
    def test_replay_detects_tampering(self, p5):
        run = closure(p5, [0], Rule.STANDARD)
        forces = list(run.forces)
        forces[2] = forces[2].model_copy(update={"round": 1})
        assert not replay(run.model_copy(update={"forces": forces}))

    def test_extract_chains(self, p5):
        cover = extract_cover(closure(p5, [2, 0], Rule.STANDARD))
        assert cover.kind is CoverKind.PATH_COVER
        assert cover.parts == [(0, 1), (2, 3, 4)]

    def test_extract_trees(self):
        cover = extract_cover(closure(canonical("star", 3), [0], Rule.POSITIVE))
        assert cover.kind is CoverKind.TREE_COVER
        assert cover.parts == [(0, 1, 2, 3)]

    def test_extract_incomplete(self, k3):
        with pytest.raises(IncompleteRunError):
            extract_cover(closure(k3, [0], Rule.STANDARD))

    def test_terminal_set(self, p5):
        assert terminal_set(closure(p5, [0], Rule.STANDARD)) == (4,)

    def test_record(self, p5):
        record = closure(p5, [0], Rule.STANDARD).to_record()
        assert record["rule"] == "standard"
        assert record["forces"][0] == [0, 1, 0]


class TestGuidedClosure:
    def test_follows_prescribed_chains(self, c5):
        run = guided_closure(c5, [0, 1], Rule.STANDARD, [[0, 4, 3], [1, 2]])
        assert run.complete
        assert extract_cover(run).as_sets() == {frozenset({0, 3, 4}), frozenset({1, 2})}

    def test_roots_must_match(self, c5):
        with pytest.raises(CertificateError):
            guided_closure(c5, [0, 2], Rule.STANDARD, [[0, 4, 3], [1, 2]])

    def test_disconnected_part(self, c5):
        with pytest.raises(CertificateError):
            guided_closure(c5, [0, 1], Rule.STANDARD, [[0, 2], [1, 3, 4]])


class TestCovers:
    def test_make_cover_roots_first(self, p5):
        cover = make_cover(p5, CoverKind.PATH_COVER, [[2, 1, 0], [4, 3]], roots=[0, 4])
        assert cover.parts == [(0, 1, 2), (4, 3)]
        assert cover.roots == (0, 4)

    def test_reverse_chains(self, p5):
        cover = make_cover(p5, CoverKind.PATH_COVER, [[0, 1, 2], [3, 4]])
        assert reverse_chains(cover).parts == [(2, 1, 0), (4, 3)]

    def test_triangle_is_not_a_path(self, k3):
        with pytest.raises(CertificateError):
            make_cover(k3, CoverKind.PATH_COVER, [[0, 1, 2]])

    def test_overlap_rejected(self, p5):
        cover = make_cover(p5, CoverKind.PATH_COVER, [[0, 1, 2], [2, 3, 4]])
        with pytest.raises(CertificateError):
            validate_cover(p5, cover)

    def test_uncovered_vertex(self, p5):
        cover = make_cover(p5, CoverKind.TREE_COVER, [[0, 1, 2]])
        with pytest.raises(CertificateError):
            validate_cover(p5, cover)

    def test_clique_cover(self, bowtie):
        good = make_cover(bowtie, CoverKind.CLIQUE_EDGE_COVER, [[0, 1, 2], [2, 3, 4]])
        validate_cover(bowtie, good)
        partial = make_cover(bowtie, CoverKind.CLIQUE_EDGE_COVER, [[0, 1, 2]])
        with pytest.raises(CertificateError):
            validate_cover(bowtie, partial)
