"""Tests for the class-level decision procedures"""

import pytest

from zdgraph_mcp.core import zdgraph
from zdgraph_mcp.core.setalg import Cardinal, PeriodicSet
from zdgraph_mcp.core.zdgraph import GraphFlavor, VertexClass
from zdgraph_mcp.utils.errors import (
    EmptyGraphError,
    FlavorMismatchError,
    NotAVertexError,
    WitnessError,
)
from zdgraph_mcp.utils.parser import parse_model

CP = GraphFlavor.CP
CPINF = GraphFlavor.CP_INFINITY


def vc(model, points, flavor=CP):
    return VertexClass.of(model, flavor, points)


# Vertices

def test_is_vertex_reasons(naturals_finite, powerset_model):
    assert zdgraph.is_vertex(naturals_finite, CP, PeriodicSet.from_points([0, 1]))
    assert not zdgraph.is_vertex(naturals_finite, CP, PeriodicSet.empty())
    assert not zdgraph.is_vertex(naturals_finite, CP, PeriodicSet.residue_class(2, [0]))
    # any subset of X_P is admissible for the infinite flavor
    assert zdgraph.is_vertex(naturals_finite, CPINF, PeriodicSet.residue_class(2, [0]))
    model = powerset_model(2)
    check = zdgraph.is_vertex(model, CP, PeriodicSet.from_points([0, 1]))
    assert not check.is_vertex
    assert "covers X_P" in check.reason


def test_vertex_class_rejects_non_vertices(naturals_finite):
    with pytest.raises(NotAVertexError):
        vc(naturals_finite, [])
    with pytest.raises(NotAVertexError):
        VertexClass.of(naturals_finite, CP, PeriodicSet.naturals())


def test_all_nonzero_are_vertices(naturals_finite, naturals_all, finite_three):
    assert zdgraph.all_nonzero_are_vertices(naturals_finite, CP)
    assert not zdgraph.all_nonzero_are_vertices(naturals_all, CP)
    assert not zdgraph.all_nonzero_are_vertices(finite_three, CP)


def test_adjacency(naturals_finite):
    a, b, c = vc(naturals_finite, [0]), vc(naturals_finite, [1, 2]), vc(naturals_finite, [0, 2])
    assert zdgraph.adjacent(a, b)
    assert not zdgraph.adjacent(b, c)
    assert not zdgraph.adjacent(a, a)


def test_adjacency_across_models(naturals_finite, naturals_all):
    with pytest.raises(FlavorMismatchError):
        zdgraph.adjacent(vc(naturals_finite, [0]), vc(naturals_all, [1]))
    with pytest.raises(FlavorMismatchError):
        zdgraph.adjacent(vc(naturals_finite, [0]), vc(naturals_finite, [1], CPINF))


# Distances and eccentricity

def test_distance_trichotomy(finite_three, naturals_finite):
    m = finite_three
    assert zdgraph.distance(vc(m, [0]), vc(m, [1, 2])) == 1
    assert zdgraph.distance(vc(m, [0]), vc(m, [0, 1])) == 2
    assert zdgraph.distance(vc(m, [0, 1]), vc(m, [0, 2])) == 3
    assert zdgraph.distance(vc(m, [0, 1]), vc(m, [0, 1]), same_class=True) == 2
    n = naturals_finite
    assert zdgraph.distance(vc(n, [0, 1]), vc(n, [0, 2])) == 2


def test_distance_same_class_needs_equal_supports(finite_three):
    with pytest.raises(WitnessError):
        zdgraph.distance(vc(finite_three, [0]), vc(finite_three, [1]), same_class=True)


def test_common_neighbor(finite_three):
    witness = zdgraph.common_neighbor(vc(finite_three, [0]), vc(finite_three, [0, 1]))
    assert witness.support == PeriodicSet.from_points([2])
    assert zdgraph.common_neighbor(vc(finite_three, [0, 1]), vc(finite_three, [2])) is None


def test_eccentricity(finite_three, naturals_finite, naturals_all):
    assert zdgraph.eccentricity(vc(finite_three, [0])).value == 2
    ecc = zdgraph.eccentricity(vc(finite_three, [0, 1]))
    assert ecc.value == 3
    assert ecc.witness.support == PeriodicSet.from_points([0, 2])
    assert zdgraph.eccentricity(vc(naturals_finite, [0, 1, 5])).value == 2
    ecc = zdgraph.eccentricity(VertexClass.of(naturals_all, CP, PeriodicSet.cofinite([0])))
    assert ecc.value == 3
    assert ecc.witness.support == PeriodicSet.from_points([0, 1])


@pytest.mark.parametrize(
    "ground,ideal,flavor,diameter,girth",
    [
        ("countable", "finite", CP, 2, 3),
        ("countable", "finite", CPINF, 3, 3),
        ("countable", "all", CP, 3, 3),
        ("finite:2", "all", CP, 2, 4),
        ("finite:3", "all", CP, 3, 3),
        ("countable", "powerset:{0,1}", CP, 2, 4),
        ("countable", "powerset:{0,1,2,3}", CP, 3, 3),
    ],
)
def test_diameter_and_girth_table(ground, ideal, flavor, diameter, girth):
    model = parse_model(ground, ideal)
    metric = zdgraph.diameter_and_radius(model, flavor)
    assert metric.diameter == diameter
    assert metric.radius == 2
    assert zdgraph.girth(model, flavor) == girth


def test_diameter_witness_is_at_distance_three(finite_three):
    metric = zdgraph.diameter_and_radius(finite_three, CP)
    u, v = metric.witness
    assert zdgraph.distance(u, v) == 3
    assert "singleton" in metric.center_description


def test_empty_graph(naturals_finite):
    model = parse_model("finite:5", "powerset:{3}")
    with pytest.raises(EmptyGraphError, match=r"\|X_P\| >= 2"):
        zdgraph.analyze(model, CP)
    with pytest.raises(EmptyGraphError):
        zdgraph.girth(parse_model("finite:1", "all"), CP)


# Cycles and triangles

def test_smallest_cycle_through(finite_three, naturals_finite):
    m = finite_three
    assert zdgraph.smallest_cycle_through(vc(m, [0]), vc(m, [1])) == 3
    assert zdgraph.smallest_cycle_through(vc(m, [0]), vc(m, [1, 2])) == 4
    assert zdgraph.smallest_cycle_through(vc(m, [0]), vc(m, [0, 1])) == 4
    assert zdgraph.smallest_cycle_through(vc(m, [0, 1]), vc(m, [0, 2])) == 6
    assert zdgraph.smallest_cycle_through(vc(m, [1, 2]), vc(m, [1, 2]), same_class=True) == 4
    n = naturals_finite
    assert zdgraph.smallest_cycle_through(vc(n, [0, 1]), vc(n, [1, 2])) == 4


def test_triangulated(naturals_finite, finite_three, naturals_all):
    assert zdgraph.is_triangulated(naturals_finite, CP)
    verdict = zdgraph.is_triangulated(finite_three, CP)
    assert not verdict
    assert verdict.witness.support == PeriodicSet.from_points([1, 2])
    assert not zdgraph.on_triangle(verdict.witness)
    assert not zdgraph.is_triangulated(naturals_all, CP)
    assert not zdgraph.is_triangulated(naturals_finite, CPINF)


def test_hypertriangulated(naturals_finite, finite_three, naturals_all):
    assert zdgraph.is_hypertriangulated(naturals_finite, CP)
    verdict = zdgraph.is_hypertriangulated(naturals_all, CP)
    assert not verdict
    s, t = verdict.edge
    assert s.support == PeriodicSet.residue_class(2, [0])
    assert t.support == PeriodicSet.residue_class(2, [1])
    assert not zdgraph.is_hypertriangulated(finite_three, CP)
    assert not zdgraph.is_hypertriangulated(naturals_finite, CPINF)


# Complements

def test_orthogonal_and_complement(finite_three, naturals_finite):
    a, b = vc(finite_three, [0]), vc(finite_three, [1, 2])
    assert zdgraph.orthogonal(a, b)
    assert not zdgraph.orthogonal(a, vc(finite_three, [1]))
    assert zdgraph.complement_class(a) == b
    assert zdgraph.complement_class(vc(naturals_finite, [0])) is None


@pytest.mark.parametrize(
    "ground,ideal,flavor,complemented",
    [
        ("countable", "finite", CP, False),
        ("countable", "finite", CPINF, True),
        ("countable", "all", CP, True),
        ("finite:4", "all", CP, True),
        ("countable", "powerset:{0,1,2}", CP, True),
    ],
)
def test_complemented(ground, ideal, flavor, complemented):
    model = parse_model(ground, ideal)
    assert zdgraph.is_complemented(model, flavor) == complemented
    assert zdgraph.is_uniquely_complemented(model, flavor) == complemented


# Cardinal invariants

def test_clique_chromatic_domination(naturals_finite, powerset_model):
    model = powerset_model(3)
    assert zdgraph.clique_number(model, CP) == 3
    assert zdgraph.chromatic_number(model, CP) == 3
    dominating = zdgraph.dominating_set(model, CP)
    assert dominating.upper_bound == 3
    assert [m.support.min() for m in dominating.members(model)] == [0, 1, 2]
    assert zdgraph.chromatic_number(naturals_finite, CP) == Cardinal.countable()
    chromatic = zdgraph.chromatic_number(naturals_finite, CP)
    assert zdgraph.chromatic_number(naturals_finite, CPINF) == chromatic
    assert len(zdgraph.dominating_set(naturals_finite, CP).members(naturals_finite, limit=5)) == 5


def test_color_of_separates_adjacent_classes(finite_three):
    a, b = vc(finite_three, [1]), vc(finite_three, [0, 2])
    assert zdgraph.adjacent(a, b)
    assert zdgraph.color_of(a) != zdgraph.color_of(b)


def test_dominating_neighbor(naturals_all):
    u = VertexClass.of(naturals_all, CP, PeriodicSet.cofinite([3]))
    neighbor = zdgraph.dominating_neighbor(u)
    assert neighbor.support == PeriodicSet.from_points([3])
    assert zdgraph.adjacent(u, neighbor)


def test_vertex_classes_window_order(powerset_model):
    model = powerset_model(3)
    classes = zdgraph.vertex_classes(model, CP, PeriodicSet.from_points([0, 1, 2]))
    assert [c.to_text() for c in classes] == ["{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}"]


def test_analyze_report(naturals_finite):
    report = zdgraph.analyze(naturals_finite, CP)
    assert report.diameter == 2
    assert report.girth == 3
    assert report.triangulated
    assert not report.complemented
    document = report.to_document()
    assert document["chromatic"] == "countably-infinite"
    assert document["locality"] == "naturals"
    assert report.notes == ()
    assert document["notes"] == []


def test_analyze_cpinf_records_deviation(naturals_finite):
    report = zdgraph.analyze(naturals_finite, CPINF)
    assert not report.triangulated and not report.hypertriangulated
    assert len(report.notes) == 2
    assert report.notes[0].startswith("Th 5.3 predicts triangulated")
    assert report.notes[1].startswith("Th 5.4 predicts hypertriangulated")


def test_analyze_finite_three(finite_three):
    report = zdgraph.analyze(finite_three, CP)
    assert (report.diameter, report.girth, report.chromatic) == (3, 3, 3)
    assert report.clique <= report.chromatic
