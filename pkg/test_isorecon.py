"""Tests for atom detection and ring isomorphism reconstruction"""

import networkx as nx
import pytest

from zdgraph_mcp.core import isorecon
from zdgraph_mcp.core.isorecon import AbstractGraph, AtomRegime, PointBijection, RingIsoDescription
from zdgraph_mcp.core.ring import FinSuppFn
from zdgraph_mcp.core.setalg import PeriodicSet
from zdgraph_mcp.utils.errors import (
    DegenerateModelError,
    ReconstructionError,
    RegimeMismatchError,
    RingMembershipError,
)
from zdgraph_mcp.utils.parser import parse_model


def finite_blowup(blowup_of, n):
    return blowup_of(parse_model(f"finite:{n}", "all"))


def by_text(g):
    return {g.function(v).to_text(): v for v in g.graph.nodes}


# Atom detection

@pytest.mark.parametrize("n", [2, 3, 4])
def test_finite_regime_finds_one_class_per_point(blowup_of, n):
    g = finite_blowup(blowup_of, n)
    classes = isorecon.detect_atom_classes(AbstractGraph.from_explicit(g))
    assert len(classes) == n
    for members in classes:
        points = {g.function(v).values[0][0] for v in members}
        assert len(points) == 1
        assert all(len(g.function(v).values) == 1 for v in members)


def test_infinite_regime_finds_singletons(blowup_of, naturals_finite):
    g = blowup_of(naturals_finite, window=PeriodicSet.interval(0, 3))
    classes = isorecon.detect_atom_classes(AbstractGraph.from_explicit(g), AtomRegime.INFINITE)
    points = sorted(g.function(members[0]).values[0][0] for members in classes)
    assert points == [0, 1, 2, 3]
    assert all(len(g.function(v).values) == 1 for members in classes for v in members)


def test_detection_rejects_graphs_outside_the_regime():
    with pytest.raises(RegimeMismatchError):
        isorecon.detect_atom_classes(AbstractGraph(nx.Graph([(0, 1), (2, 3)])))
    with pytest.raises(RegimeMismatchError):
        isorecon.detect_atom_classes(AbstractGraph(nx.path_graph(5)))
    # every vertex of a pentagon looks like an atom, but atoms must be mutually adjacent
    with pytest.raises(RegimeMismatchError):
        isorecon.detect_atom_classes(AbstractGraph(nx.cycle_graph(5)))


def test_empty_graph_is_degenerate():
    with pytest.raises(DegenerateModelError):
        isorecon.detect_atom_classes(AbstractGraph(nx.Graph()))
    with pytest.raises(DegenerateModelError):
        isorecon.reconstruct(AbstractGraph(nx.Graph()), AbstractGraph(nx.Graph()), {})


def test_abstract_graph_rejects_loops():
    with pytest.raises(ReconstructionError):
        AbstractGraph(nx.Graph([(0, 0)]))


# Reconstruction

def test_identity_psi_gives_identity_phi(blowup_of):
    g = finite_blowup(blowup_of, 3)
    gx = AbstractGraph.from_explicit(g)
    desc = isorecon.reconstruct(gx, gx, {v: v for v in g.graph.nodes})
    assert desc.point_map == {0: 0, 1: 1, 2: 2}
    assert isorecon.verify_ring_iso(desc, sample_budget=50).verified


@pytest.mark.parametrize("n", [2, 3, 4])
def test_random_automorphisms_are_recovered(blowup_of, rng, n):
    g = finite_blowup(blowup_of, n)
    gx = AbstractGraph.from_explicit(g)
    for _ in range(3):
        psi, point_map = isorecon.random_automorphism_psi(g, rng)
        desc = isorecon.reconstruct(gx, gx, psi)
        assert desc.point_map == point_map
        assert isorecon.verify_ring_iso(desc, sample_budget=50).verified


def test_infinite_regime_reconstruction(blowup_of, naturals_finite, rng):
    g = blowup_of(naturals_finite, window=PeriodicSet.interval(0, 3))
    gx = AbstractGraph.from_explicit(g)
    psi, point_map = isorecon.random_automorphism_psi(g, rng)
    desc = isorecon.reconstruct(gx, gx, psi, AtomRegime.INFINITE)
    assert desc.point_map == point_map


def test_reconstruction_ignores_vertex_names(blowup_of):
    g = finite_blowup(blowup_of, 3)
    gx = AbstractGraph.from_explicit(g)
    gy = AbstractGraph.from_explicit(g, relabel=lambda v: f"y{v}")
    desc = isorecon.reconstruct(gx, gy, {v: f"y{v}" for v in g.graph.nodes})
    assert desc.point_map == {0: 0, 1: 1, 2: 2}


def test_cross_size_is_rejected_by_chromatic_number(blowup_of):
    gx = AbstractGraph.from_explicit(finite_blowup(blowup_of, 2))
    gy = AbstractGraph.from_explicit(finite_blowup(blowup_of, 3))
    with pytest.raises(ReconstructionError, match="chromatic mismatch: 2 != 3"):
        isorecon.reconstruct(gx, gy, {})


def test_non_isomorphism_is_rejected(blowup_of):
    g = finite_blowup(blowup_of, 2)
    names = by_text(g)
    psi = {v: v for v in g.graph.nodes}
    psi[names["{0:2}"]], psi[names["{1:1}"]] = names["{1:1}"], names["{0:2}"]
    gx = AbstractGraph.from_explicit(g)
    with pytest.raises(ReconstructionError, match="not a graph isomorphism"):
        isorecon.reconstruct(gx, gx, psi)
    with pytest.raises(ReconstructionError, match="exactly the vertices"):
        isorecon.reconstruct(gx, gx, {names["{0:1}"]: names["{0:1}"]})


# Ring isomorphisms

def test_description_applies_pointwise():
    desc = RingIsoDescription(point_map={0: 2, 1: 0, 2: 1}, codomain=(0, 1, 2))
    f = FinSuppFn.of({0: 3, 2: 1})
    assert desc.apply(f) == FinSuppFn.of({2: 3, 1: 1})
    assert desc.preimage(desc.apply(f)) == f
    assert desc.to_document() == {"phi": [[0, 2], [1, 0], [2, 1]]}
    with pytest.raises(RingMembershipError):
        desc.apply(FinSuppFn.unit(7))
    assert desc.preimage(FinSuppFn.unit(9)) is None


def test_verification_reports_injectivity_first():
    desc = RingIsoDescription(point_map={0: 0, 1: 0}, codomain=(0, 1))
    result = isorecon.verify_ring_iso(desc)
    assert not result.verified
    assert result.counterexample.startswith("injectivity")
    assert result.to_document()["counterexample"] == result.counterexample


def test_verification_reports_missing_target():
    desc = RingIsoDescription(point_map={0: 0, 1: 1}, codomain=(0, 1, 2))
    result = isorecon.verify_ring_iso(desc)
    assert not result.verified
    assert result.counterexample.startswith("surjectivity")


def test_point_bijection():
    phi = PointBijection(mapping={0: 1, 1: 0})
    assert phi.inverse().mapping == {1: 0, 0: 1}
    assert phi.domain == (0, 1)
    with pytest.raises(ReconstructionError):
        PointBijection(mapping={0: 1, 1: 1})


def test_psi_from_pairs():
    assert isorecon.psi_from_pairs([[0, 3], [1, 2]]) == {0: 3, 1: 2}
    with pytest.raises(ReconstructionError):
        isorecon.psi_from_pairs([[0, 3], [0, 2]])
    with pytest.raises(ReconstructionError):
        isorecon.psi_from_pairs([[0, 1, 2]])
