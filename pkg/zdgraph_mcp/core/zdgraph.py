"""Class-level semantics of the zero-divisor graphs of C_P(X) and C^P_inf(X)

Functions sharing a support are interchangeable in the graph, apart from
never being adjacent to each other. Every decision procedure here therefore
works on supports ("vertex classes") and returns a witness where one exists.

Admissible supports per flavor:

* CP: supports in the ideal.
* CPInfinity: any subset of X_P. For the finite-sets ideal on the naturals a
  function decaying to zero along the support (e.g. 1/(n+1)) has every level
  set finite; for the all-closed ideal every subset is already a support; for
  a power-set ideal X_P is finite and C^P_inf coincides with C_P.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ..utils.errors import EmptyGraphError, FlavorMismatchError, NotAVertexError, WitnessError
from .setalg import Cardinal, PeriodicSet
from .topology import SpaceModel, closure_of_locality_in_ideal, locality_region, validate_model


class GraphFlavor(str, Enum):
    CP = "cp"
    CP_INFINITY = "cpinf"


def admissible(model: SpaceModel, flavor: GraphFlavor, s: PeriodicSet) -> bool:
    """Whether s is the support of some element of the flavor's ring"""
    if flavor is GraphFlavor.CP:
        return model.ideal.contains(s)
    return s.issubset(locality_region(model))


class VertexCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    is_vertex: bool
    reason: str

    def __bool__(self) -> bool:
        return self.is_vertex


class VertexClass(BaseModel):
    """All vertices of one model and flavor sharing a support"""

    model_config = ConfigDict(frozen=True)

    model: SpaceModel
    flavor: GraphFlavor
    support: PeriodicSet

    @classmethod
    def of(
        cls,
        model: SpaceModel,
        flavor: GraphFlavor,
        support: PeriodicSet | List[int] | Tuple[int, ...],
    ) -> "VertexClass":
        """Build a class, rejecting supports that are not vertices"""
        if not isinstance(support, PeriodicSet):
            support = PeriodicSet.from_points(support)
        check = is_vertex(model, flavor, support)
        if not check.is_vertex:
            raise NotAVertexError(f"{support.to_text()} is not a vertex support: {check.reason}")
        return cls(model=model, flavor=flavor, support=support)

    @property
    def locality(self) -> PeriodicSet:
        return locality_region(self.model)

    def to_text(self) -> str:
        return self.support.to_text()


class Eccentricity(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    witness: Optional[VertexClass] = None


class DiameterRadius(BaseModel):
    model_config = ConfigDict(frozen=True)

    diameter: int
    radius: int
    center_description: str
    witness: Optional[Tuple[VertexClass, VertexClass]] = None


class TriangulationVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    triangulated: bool
    witness: Optional[VertexClass] = None

    def __bool__(self) -> bool:
        return self.triangulated


class HypertriangulationVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    hypertriangulated: bool
    edge: Optional[Tuple[VertexClass, VertexClass]] = None

    def __bool__(self) -> bool:
        return self.hypertriangulated


class DominatingSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    canonical_set_description: str
    upper_bound: Cardinal
    points: PeriodicSet

    def members(self, model: SpaceModel, limit: Optional[int] = None) -> List[VertexClass]:
        """Singleton classes 1_x; the first ``limit`` of them for infinite X_P"""
        if limit is None:
            chosen = list(self.points.finite_members())
        else:
            chosen = self.points.first(limit)
        return [VertexClass.of(model, GraphFlavor.CP, [x]) for x in chosen]


class GraphReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    model: str
    flavor: str
    locality: str
    diameter: int
    radius: int
    girth: int
    triangulated: bool
    hypertriangulated: bool
    complemented: bool
    uniquely_complemented: bool
    clique: Cardinal
    chromatic: Cardinal
    dominating_upper_bound: Cardinal
    notes: Tuple[str, ...] = ()

    def to_document(self) -> Dict[str, Any]:
        """Flat key-value form with JSON-ready values"""
        document = self.model_dump()
        document["notes"] = list(self.notes)
        for key in ("clique", "chromatic", "dominating_upper_bound"):
            document[key] = getattr(self, key).to_json()
        return document


def _require_graph(model: SpaceModel) -> PeriodicSet:
    check = validate_model(model)
    if not check.vertex_set_nonempty:
        raise EmptyGraphError(
            f"X_P has {check.locality_size} point(s) for {model.to_text()}; "
            "the zero-divisor graph is empty unless |X_P| >= 2"
        )
    return locality_region(model)


def _check_pair(u: VertexClass, v: VertexClass) -> None:
    if u.model != v.model or u.flavor != v.flavor:
        raise FlavorMismatchError(
            f"Cannot combine classes of ({u.model}, {u.flavor.value}) "
            f"and ({v.model}, {v.flavor.value})"
        )


def _singleton(model: SpaceModel, flavor: GraphFlavor, x: int) -> VertexClass:
    return VertexClass(model=model, flavor=flavor, support=PeriodicSet.from_points([x]))


# Vertices and adjacency

def is_vertex(model: SpaceModel, flavor: GraphFlavor, s: PeriodicSet) -> VertexCheck:
    """Nonzero admissible functions are zero divisors iff their support misses a point of X_P"""
    if not s.issubset(model.points):
        return VertexCheck(is_vertex=False, reason="support is not contained in the ground set")
    if s.is_empty:
        return VertexCheck(is_vertex=False, reason="the zero function is not a vertex")
    if not admissible(model, flavor, s):
        return VertexCheck(
            is_vertex=False,
            reason=(
                f"support is not admissible for flavor {flavor.value} "
                f"under {model.ideal.to_text()}"
            ),
        )
    xp = locality_region(model)
    if not s.issubset(xp):
        return VertexCheck(is_vertex=False, reason=f"support leaves X_P = {xp.to_text()}")
    rest = xp.difference(s)
    if rest.is_empty:
        return VertexCheck(
            is_vertex=False,
            reason="support covers X_P, so no nonzero function annihilates it",
        )
    return VertexCheck(is_vertex=True, reason=f"X_P minus support = {rest.to_text()} is nonempty")


def all_nonzero_are_vertices(model: SpaceModel, flavor: GraphFlavor) -> bool:
    """True iff X_P itself is not an admissible support"""
    _require_graph(model)
    return not admissible(model, flavor, locality_region(model))


def adjacent(u: VertexClass, v: VertexClass) -> bool:
    """f.g = 0 iff the supports are disjoint; one class is never adjacent to itself"""
    _check_pair(u, v)
    if u.support == v.support:
        return False
    return u.support.isdisjoint(v.support)


def common_neighbor(u: VertexClass, v: VertexClass) -> Optional[VertexClass]:
    """The singleton class on the smallest point of X_P outside both supports"""
    _check_pair(u, v)
    rest = u.locality.difference(u.support.union(v.support))
    if rest.is_empty:
        return None
    return _singleton(u.model, u.flavor, rest.min())


def distance(u: VertexClass, v: VertexClass, same_class: bool = False) -> int:
    """Distance between a vertex of u and a distinct vertex of v

    Equal supports mean two distinct functions of one class, which are
    always at distance 2 through a common annihilator.
    """
    _check_pair(u, v)
    if same_class and u.support != v.support:
        raise WitnessError("same_class pairs must share a support")
    if u.support == v.support:
        return 2
    if u.support.isdisjoint(v.support):
        return 1
    if common_neighbor(u, v) is not None:
        return 2
    return 3


def eccentricity(u: VertexClass) -> Eccentricity:
    """e = 3 iff some vertex meets the support and jointly covers X_P

    The smallest such candidate is (X_P - S) + {min S}; it is a vertex iff
    |S| >= 2 and it is admissible.
    """
    support = u.support
    if support.has_at_least(2):
        x = support.min()
        candidate = u.locality.difference(support).with_point(x)
        if admissible(u.model, u.flavor, candidate):
            witness = VertexClass(model=u.model, flavor=u.flavor, support=candidate)
            return Eccentricity(value=3, witness=witness)
    return Eccentricity(value=2)


def diameter_and_radius(model: SpaceModel, flavor: GraphFlavor) -> DiameterRadius:
    xp = _require_graph(model)
    diameter = 2
    witness = None
    if xp.has_at_least(3):
        probe = PeriodicSet.from_points(xp.first(2))
        if admissible(model, flavor, probe):
            ecc = eccentricity(VertexClass(model=model, flavor=flavor, support=probe))
            if ecc.witness is not None:
                diameter = ecc.value
                witness = (VertexClass(model=model, flavor=flavor, support=probe), ecc.witness)
    # singleton classes always have eccentricity 2
    radius = 2
    if diameter == radius:
        center = "all vertex classes (self-centric)"
    else:
        center = "singleton-support classes r*1_x for x in X_P"
    return DiameterRadius(
        diameter=diameter, radius=radius, center_description=center, witness=witness
    )


# Cycles and triangles

def girth(model: SpaceModel, flavor: GraphFlavor) -> int:
    xp = _require_graph(model)
    return 3 if xp.has_at_least(3) else 4


def smallest_cycle_through(u: VertexClass, v: VertexClass, same_class: bool = False) -> int:
    """Length of the shortest cycle through a vertex of u and a distinct vertex of v"""
    _check_pair(u, v)
    if same_class and u.support != v.support:
        raise WitnessError("same_class pairs must share a support")
    disjoint = u.support != v.support and u.support.isdisjoint(v.support)
    uncovered = common_neighbor(u, v) is not None
    if disjoint:
        return 3 if uncovered else 4
    return 4 if uncovered else 6


def on_triangle(u: VertexClass) -> bool:
    return u.locality.difference(u.support).has_at_least(2)


def is_triangulated(model: SpaceModel, flavor: GraphFlavor) -> TriangulationVerdict:
    """Fails exactly when X_P minus one point is an admissible support"""
    xp = _require_graph(model)
    candidate = xp.without(xp.min())
    if admissible(model, flavor, candidate):
        witness = VertexClass(model=model, flavor=flavor, support=candidate)
        return TriangulationVerdict(triangulated=False, witness=witness)
    return TriangulationVerdict(triangulated=True)


def _covering_partitions(xp: PeriodicSet) -> Iterator[Tuple[PeriodicSet, PeriodicSet]]:
    if not xp.is_finite:
        evens = xp.intersection(PeriodicSet.residue_class(2, [0]))
        yield evens, xp.difference(evens)
    head = PeriodicSet.from_points([xp.min()])
    yield head, xp.difference(head)


def is_hypertriangulated(model: SpaceModel, flavor: GraphFlavor) -> HypertriangulationVerdict:
    """Fails exactly when X_P splits into two admissible supports"""
    xp = _require_graph(model)
    for s, t in _covering_partitions(xp):
        if s.is_empty or t.is_empty:
            continue
        if admissible(model, flavor, s) and admissible(model, flavor, t):
            edge = (
                VertexClass(model=model, flavor=flavor, support=s),
                VertexClass(model=model, flavor=flavor, support=t),
            )
            return HypertriangulationVerdict(hypertriangulated=False, edge=edge)
    return HypertriangulationVerdict(hypertriangulated=True)


# Orthogonality and complements

def orthogonal(u: VertexClass, v: VertexClass) -> bool:
    """Adjacent with no common neighbour: disjoint supports covering X_P"""
    return adjacent(u, v) and common_neighbor(u, v) is None


def complement_class(u: VertexClass) -> Optional[VertexClass]:
    rest = u.locality.difference(u.support)
    if not admissible(u.model, u.flavor, rest):
        return None
    return VertexClass(model=u.model, flavor=u.flavor, support=rest)


def is_complemented(model: SpaceModel, flavor: GraphFlavor) -> bool:
    """Every class has a complement iff the complement of one singleton is admissible"""
    xp = _require_graph(model)
    return complement_class(_singleton(model, flavor, xp.min())) is not None


def is_uniquely_complemented(model: SpaceModel, flavor: GraphFlavor) -> bool:
    # orthogonal partners of a class all share the support X_P - S
    return is_complemented(model, flavor)


# Cardinal invariants

def clique_number(model: SpaceModel, flavor: GraphFlavor) -> Cardinal:
    """Singletons of X_P form a maximum clique; cellularity of a discrete space is its size"""
    return _require_graph(model).cardinality


def chromatic_number(model: SpaceModel, flavor: GraphFlavor) -> Cardinal:
    return _require_graph(model).cardinality


def color_of(u: VertexClass) -> int:
    """Colour by the smallest support point; adjacent classes have disjoint supports"""
    return u.support.min()


def dominating_set(model: SpaceModel, flavor: GraphFlavor) -> DominatingSet:
    xp = _require_graph(model)
    return DominatingSet(
        canonical_set_description="{1_x : x in X_P}",
        upper_bound=xp.cardinality,
        points=xp,
    )


def dominating_neighbor(u: VertexClass) -> VertexClass:
    """A C_P singleton class adjacent to u, for either flavor"""
    rest = u.locality.difference(u.support)
    return _singleton(u.model, GraphFlavor.CP, rest.min())


# Enumeration and reporting

def vertex_classes(
    model: SpaceModel, flavor: GraphFlavor, window: PeriodicSet
) -> List[VertexClass]:
    """All vertex classes with support inside a finite window, smallest supports first"""
    points = window.finite_members()
    classes = []
    for size in range(1, len(points) + 1):
        for subset in combinations(points, size):
            support = PeriodicSet.from_points(subset)
            if is_vertex(model, flavor, support).is_vertex:
                classes.append(VertexClass(model=model, flavor=flavor, support=support))
    return classes


def _infinity_notes(
    model: SpaceModel,
    triangulation: TriangulationVerdict,
    hypertriangulation: HypertriangulationVerdict,
) -> Tuple[str, ...]:
    """Where cpinf verdicts differ from the sufficient conditions of Th 5.3 and Th 5.4"""
    if closure_of_locality_in_ideal(model):
        return ()
    notes = []
    if triangulation.witness is not None:
        support = triangulation.witness.support.to_text()
        notes.append(
            f"Th 5.3 predicts triangulated, but the support {support} is admissible in "
            "C^P_inf (for example f(n) = 1/n on it) and misses one point of X_P, "
            "so its vertices lie on no triangle (Th 5.2)"
        )
    if hypertriangulation.edge is not None:
        u, v = hypertriangulation.edge
        notes.append(
            f"Th 5.4 predicts hypertriangulated, but the edge {u.support.to_text()} -- "
            f"{v.support.to_text()} covers X_P and lies on no triangle"
        )
    return tuple(notes)


def analyze(model: SpaceModel, flavor: GraphFlavor) -> GraphReport:
    xp = _require_graph(model)
    metric = diameter_and_radius(model, flavor)
    triangulation = is_triangulated(model, flavor)
    hypertriangulation = is_hypertriangulated(model, flavor)
    notes: Tuple[str, ...] = ()
    if flavor is GraphFlavor.CP_INFINITY:
        notes = _infinity_notes(model, triangulation, hypertriangulation)
    return GraphReport(
        model=model.to_text(),
        flavor=flavor.value,
        locality=xp.to_text(),
        diameter=metric.diameter,
        radius=metric.radius,
        girth=girth(model, flavor),
        triangulated=triangulation.triangulated,
        hypertriangulated=hypertriangulation.hypertriangulated,
        complemented=is_complemented(model, flavor),
        uniquely_complemented=is_uniquely_complemented(model, flavor),
        clique=clique_number(model, flavor),
        chromatic=chromatic_number(model, flavor),
        dominating_upper_bound=dominating_set(model, flavor).upper_bound,
        notes=notes,
    )
