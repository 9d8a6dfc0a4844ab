"""Explicit blow-up graphs and the brute-force oracle

A blow-up materializes every vertex whose support lies in a finite window
and whose values come from a finite alphabet. The oracle computes graph
invariants by exhaustive search on it, and ``cross_check`` compares those
against the class-level closed forms in ``zdgraph``.

Vertices of one support class have identical neighbourhoods, so every exact
search here runs on neighbourhood groups instead of single vertices.
"""

from __future__ import annotations

import json
import logging
import random
import time
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..utils.errors import CapExceededError, ConfigurationError, InvalidSetError, NotASubsetError
from . import ring, zdgraph
from .ring import FinSuppFn
from .setalg import PeriodicSet
from .topology import SpaceModel, locality_region
from .zdgraph import GraphFlavor, VertexClass

logger = logging.getLogger(__name__)

DEFAULT_ALPHABET: Tuple[Fraction, ...] = (Fraction(1), Fraction(2))
DEFAULT_CAP = 200
DEFAULT_WINDOW_SIZE = 4

# check tag -> result tags it confirms; the first is cited in reports
CHECK_REFERENCES: Dict[str, Tuple[str, ...]] = {
    "vertex": ("Th 2.3", "Cor 2.4", "Th 6.1"),
    "vertex-count": ("Th 2.12",),
    "distance": ("Th 2.7", "Th 2.6", "Th 5.5"),
    "eccentricity": ("Th 2.10", "Th 6.2"),
    "diameter": ("Th 2.9",),
    "girth": ("Th 3.2", "Th 3.1", "Th 5.6"),
    "cycle": ("Th 3.4", "Th 5.7"),
    "chordless": ("Cor 3.5",),
    "edge-cycle": ("Cor 3.5",),
    "triangle": ("Th 2.13", "Th 2.14", "Th 5.2", "Th 5.3"),
    "hypertriangle": ("Th 2.19", "Th 2.20", "Th 5.4"),
    "orthogonal": ("Th 4.5",),
    "complement": ("Th 4.15", "Th 4.14"),
    "unique-complement": ("Th 4.20", "Th 5.8"),
    "clique": ("Th 4.1", "Th 5.9"),
    "chromatic": ("Th 6.3", "Th 4.3", "Th 5.12"),
    "domination": ("Th 4.4", "Th 5.10", "Th 5.11"),
    "compactness": ("Th 4.16",),
    "hull": ("Th 4.7", "Th 4.8"),
}
CHECK_TAGS: Tuple[str, ...] = tuple(CHECK_REFERENCES)

# checks whose truncated picture needs two values per support
_NEEDS_TWO_VALUES = frozenset(
    {"eccentricity", "diameter", "girth", "cycle", "edge-cycle", "unique-complement", "domination"}
)


class BlowupSpec(BaseModel):
    """Which finite piece of the zero-divisor graph to materialize"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    model: SpaceModel
    flavor: GraphFlavor = GraphFlavor.CP
    window: PeriodicSet
    alphabet: Tuple[Fraction, ...] = DEFAULT_ALPHABET
    cap: int = DEFAULT_CAP
    mutate: bool = False

    @field_validator("alphabet", mode="before")
    @classmethod
    def _to_fractions(cls, value: Any) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v) for v in value)

    @model_validator(mode="after")
    def _check(self) -> "BlowupSpec":
        if not self.alphabet:
            raise ConfigurationError("Alphabet must contain at least one value")
        if any(v == 0 for v in self.alphabet):
            raise ConfigurationError("Alphabet values must be nonzero")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ConfigurationError(
                f"Alphabet has repeated values: {list(map(str, self.alphabet))}"
            )
        if not self.window.is_finite:
            raise InvalidSetError(f"Window must be finite, got {self.window.to_text()}")
        xp = locality_region(self.model)
        if not self.window.issubset(xp):
            raise NotASubsetError(
                f"Window {self.window.to_text()} is not inside X_P = {xp.to_text()}"
            )
        if self.cap < 1:
            raise ConfigurationError(f"Vertex cap must be positive, got {self.cap}")
        return self

    @classmethod
    def for_model(
        cls,
        model: SpaceModel,
        flavor: GraphFlavor = GraphFlavor.CP,
        window: Optional[PeriodicSet] = None,
        alphabet: Optional[Iterable[Fraction | int]] = None,
        cap: int = DEFAULT_CAP,
        mutate: bool = False,
    ) -> "BlowupSpec":
        """Default window: all of X_P when finite, else its first few points"""
        if window is None:
            xp = locality_region(model)
            if xp.is_finite:
                window = xp
            else:
                window = PeriodicSet.from_points(xp.first(DEFAULT_WINDOW_SIZE))
        return cls(
            model=model,
            flavor=flavor,
            window=window,
            alphabet=tuple(alphabet) if alphabet is not None else DEFAULT_ALPHABET,
            cap=cap,
            mutate=mutate,
        )

    @property
    def faithful(self) -> bool:
        """Two values per support are needed to reproduce same-class distances and 4-cycles"""
        return len(self.alphabet) >= 2

    @property
    def complete(self) -> bool:
        """Whether the window is all of X_P, so the blow-up holds every class"""
        return self.window == locality_region(self.model)

    def to_document(self) -> Dict[str, Any]:
        return {
            "model": self.model.model_dump(mode="json"),
            "flavor": self.flavor.value,
            "window": list(self.window.finite_members()),
            "alphabet": [str(v) for v in self.alphabet],
            "cap": self.cap,
            "mutate": self.mutate,
        }

    @classmethod
    def from_document(cls, document: Dict[str, Any]) -> "BlowupSpec":
        return cls(
            model=SpaceModel.model_validate(document["model"]),
            flavor=GraphFlavor(document["flavor"]),
            window=PeriodicSet.from_points(document["window"]),
            alphabet=document["alphabet"],
            cap=document["cap"],
            mutate=document.get("mutate", False),
        )


class ExplicitGraph:
    """A generated blow-up; vertices are 0..n-1 carrying their function and class"""

    def __init__(self, graph: nx.Graph, spec: Optional[BlowupSpec] = None):
        self.graph = graph
        self.spec = spec

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def vertices(self) -> List[FinSuppFn]:
        return [self.graph.nodes[v]["fn"] for v in self.graph.nodes]

    def function(self, v: int) -> FinSuppFn:
        return self.graph.nodes[v]["fn"]

    def class_id(self, v: int) -> int:
        return self.graph.nodes[v]["class_id"]

    def class_of(self, v: int) -> VertexClass:
        return self.graph.nodes[v]["vclass"]

    def classes(self) -> Dict[int, List[int]]:
        """class id -> vertices, in vertex order"""
        grouped: Dict[int, List[int]] = {}
        for v in self.graph.nodes:
            grouped.setdefault(self.class_id(v), []).append(v)
        return grouped

    def adjacency(self) -> Dict[int, Set[int]]:
        return {v: set(self.graph[v]) for v in self.graph.nodes}


# Generation

def expected_vertex_count(spec: BlowupSpec) -> int:
    """(|A|+1)^|W| - 1, minus the full-support functions when W = X_P"""
    a = len(spec.alphabet)
    w = len(spec.window.finite_members())
    count = (a + 1) ** w - 1
    if spec.complete:
        count -= a**w
    return count


def _mutated(spec: BlowupSpec, s: Set[int], t: Set[int]) -> bool:
    """Fault injection: supports meeting only at the largest window point"""
    top = max(spec.window.finite_members())
    return s & t == {top}


def generate(spec: BlowupSpec) -> ExplicitGraph:
    """Materialize every vertex with support in the window and values in the alphabet

    Raises:
        CapExceededError: If the blow-up would exceed ``spec.cap`` vertices
    """
    expected = expected_vertex_count(spec)
    if expected > spec.cap:
        raise CapExceededError(
            f"Blow-up of {spec.model.to_text()} over window {spec.window.to_text()} "
            f"has {expected} vertices, cap is {spec.cap}"
        )

    graph = nx.Graph(model=spec.model.to_text(), flavor=spec.flavor.value)
    supports: List[Set[int]] = []
    for class_id, vclass in enumerate(zdgraph.vertex_classes(spec.model, spec.flavor, spec.window)):
        points = vclass.support.finite_members()
        for values in product(spec.alphabet, repeat=len(points)):
            fn = FinSuppFn.of(dict(zip(points, values)))
            graph.add_node(
                len(supports), fn=fn, vclass=vclass, class_id=class_id, label=fn.to_text()
            )
            supports.append(set(points))

    functions = [graph.nodes[v]["fn"] for v in graph.nodes]
    for u, v in combinations(range(len(functions)), 2):
        if (functions[u] * functions[v]).is_zero or (
            spec.mutate and _mutated(spec, supports[u], supports[v])
        ):
            graph.add_edge(u, v)

    logger.info(
        f"Generated blow-up of {spec.model.to_text()} ({spec.flavor.value}) over "
        f"{spec.window.to_text()}: {graph.number_of_nodes()} vertices, "
        f"{graph.number_of_edges()} edges" + (" [mutated]" if spec.mutate else "")
    )
    return ExplicitGraph(graph, spec)


def neighbors_of(
    model: SpaceModel,
    f: FinSuppFn,
    alphabet: Sequence[Fraction | int],
    flavor: GraphFlavor = GraphFlavor.CP,
    window: Optional[PeriodicSet] = None,
) -> List[FinSuppFn]:
    """All vertices g with supp g in the window, values in the alphabet and f.g = 0"""
    ring.require_member(model, f)
    if window is None:
        xp = locality_region(model)
        window = xp if xp.is_finite else PeriodicSet.from_points(xp.first(DEFAULT_WINDOW_SIZE))
    free = window.difference(f.support).finite_members()
    found = []
    for size in range(1, len(free) + 1):
        for points in combinations(free, size):
            support = PeriodicSet.from_points(points)
            if not zdgraph.is_vertex(model, flavor, support).is_vertex:
                continue
            for values in product(alphabet, repeat=size):
                found.append(FinSuppFn.of(dict(zip(points, values))))
    return found


# Oracle

class _BudgetExhausted(CapExceededError):
    """An exact search ran past its deadline or size limit"""


def _check_deadline(deadline: Optional[float]) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise _BudgetExhausted("Oracle time budget exhausted")


def twin_groups(graph: nx.Graph) -> List[List[int]]:
    """Vertices grouped by identical open neighbourhoods, ordered by first member

    Each group is an independent set whose members are interchangeable.
    """
    groups: Dict[frozenset, List[int]] = {}
    for v in graph.nodes:
        groups.setdefault(frozenset(graph[v]), []).append(v)
    return sorted(groups.values(), key=lambda members: members[0])


def representatives(graph: nx.Graph, per_group: int = 1) -> nx.Graph:
    """Induced subgraph keeping ``per_group`` vertices of every twin group"""
    keep = [v for members in twin_groups(graph) for v in members[:per_group]]
    return graph.subgraph(keep).copy()


def girth(graph: nx.Graph) -> Optional[int]:
    """Shortest cycle length by BFS from every vertex, None for forests"""
    if graph.number_of_edges() == 0:
        return None
    best = float("inf")
    for source in graph.nodes:
        depth = {source: 0}
        parent = {source: None}
        queue = [source]
        for current in queue:
            for neighbor in graph[current]:
                if neighbor not in depth:
                    depth[neighbor] = depth[current] + 1
                    parent[neighbor] = current
                    queue.append(neighbor)
                elif parent[current] != neighbor:
                    best = min(best, depth[current] + depth[neighbor] + 1)
        if best == 3:
            return 3
    return None if best == float("inf") else int(best)


def _colorable(graph: nx.Graph, k: int, deadline: Optional[float]) -> bool:
    """Exact k-colouring search in DSATUR order"""
    adjacency = {v: set(graph[v]) for v in graph.nodes}
    colors: Dict[Any, int] = {}

    def saturation(v: Any) -> Tuple[int, int]:
        return len({colors[u] for u in adjacency[v] if u in colors}), len(adjacency[v])

    def search() -> bool:
        _check_deadline(deadline)
        if len(colors) == len(adjacency):
            return True
        v = max((u for u in adjacency if u not in colors), key=saturation)
        used = {colors[u] for u in adjacency[v] if u in colors}
        # a fresh colour is only ever tried once
        ceiling = min(k, max(colors.values(), default=-1) + 2)
        for c in range(ceiling):
            if c in used:
                continue
            colors[v] = c
            if search():
                return True
            del colors[v]
        return False

    return search()


def clique_number(graph: nx.Graph) -> int:
    if graph.number_of_nodes() == 0:
        return 0
    clique, _ = nx.max_weight_clique(representatives(graph), weight=None)
    return len(clique)


def chromatic_number(graph: nx.Graph, deadline: Optional[float] = None) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, search between

    Twins can always share a colour, so one vertex per twin group suffices.
    """
    reduced = representatives(graph)
    if reduced.number_of_nodes() == 0:
        return 0
    lower = clique_number(reduced)
    greedy = nx.greedy_color(reduced, strategy="DSATUR")
    upper = max(greedy.values()) + 1
    for k in range(lower, upper):
        if _colorable(reduced, k, deadline):
            return k
    return upper


def domination_number(
    graph: nx.Graph, deadline: Optional[float] = None, max_groups: int = 18
) -> int:
    """Exact domination number over choices of twin groups

    A chosen group costs one vertex when another chosen group dominates it,
    otherwise all of its members must be taken. Choices are tried by size, and
    a choice never costs less than its size, so the search stops at the first
    size that reaches the best cost.
    """
    groups = twin_groups(graph)
    k = len(groups)
    if k == 0:
        return 0
    if k > max_groups:
        raise _BudgetExhausted(f"Domination search limited to {max_groups} twin groups, found {k}")
    index = {v: i for i, members in enumerate(groups) for v in members}
    masks = []
    for members in groups:
        mask = 0
        for u in graph[members[0]]:
            mask |= 1 << index[u]
        masks.append(mask)
    sizes = [len(members) for members in groups]
    full = (1 << k) - 1
    best = graph.number_of_nodes()
    tried = 0
    for size in range(1, k + 1):
        if size >= best:
            break
        for bits in combinations(range(k), size):
            if tried & 0x3FF == 0:
                _check_deadline(deadline)
            tried += 1
            chosen = covered = 0
            for i in bits:
                chosen |= 1 << i
                covered |= masks[i]
            if covered | chosen != full:
                continue
            cost = sum(1 if covered >> i & 1 else sizes[i] for i in bits)
            best = min(best, cost)
    return best


def chordless_cycle_lengths(graph: nx.Graph, deadline: Optional[float] = None) -> List[int]:
    """Distinct lengths of induced cycles

    An induced cycle of length >= 4 meets a twin group at most twice, so two
    representatives per group see every length.
    """
    reduced = representatives(graph, per_group=2)
    lengths: Set[int] = set()
    for cycle in nx.chordless_cycles(reduced):
        _check_deadline(deadline)
        lengths.add(len(cycle))
    return sorted(lengths)


def shortest_cycle_through(graph: nx.Graph, u: int, v: int) -> Optional[int]:
    """Shortest cycle through two distinct vertices: two disjoint u-v paths of least total length"""
    flow = nx.DiGraph()
    for w in graph.nodes:
        if w not in (u, v):
            flow.add_edge(("in", w), ("out", w), capacity=1, weight=0)

    def tail(w: int) -> Any:
        return w if w in (u, v) else ("out", w)

    def head(w: int) -> Any:
        return w if w in (u, v) else ("in", w)

    for a, b in graph.edges:
        flow.add_edge(tail(a), head(b), capacity=1, weight=1)
        flow.add_edge(tail(b), head(a), capacity=1, weight=1)
    flow.add_node(u, demand=-2)
    flow.add_node(v, demand=2)
    try:
        cost, _ = nx.network_simplex(flow)
    except nx.NetworkXUnfeasible:
        return None
    return int(cost)


class OracleReport(BaseModel):
    """Exact invariants of one explicit graph"""

    vertex_count: int
    edge_count: int
    distances: Dict[int, Dict[int, int]]
    eccentricities: Dict[int, int] = Field(default_factory=dict)
    diameter: Optional[int] = None
    radius: Optional[int] = None
    girth: Optional[int] = None
    clique: Optional[int] = None
    chromatic: Optional[int] = None
    domination: Optional[int] = None
    chordless_cycle_lengths: List[int] = Field(default_factory=list)
    partial: bool = False
    skipped: List[str] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True)


def oracle_metrics(g: ExplicitGraph, budget_seconds: Optional[float] = None) -> OracleReport:
    """Compute every oracle invariant; expensive searches stop at the time budget"""
    graph = g.graph
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    distances = {s: dict(d) for s, d in nx.all_pairs_shortest_path_length(graph)}

    report: Dict[str, Any] = {
        "vertex_count": graph.number_of_nodes(),
        "edge_count": graph.number_of_edges(),
        "distances": distances,
        "girth": girth(graph),
        "clique": clique_number(graph),
    }
    if graph.number_of_nodes() and nx.is_connected(graph):
        eccentricities = nx.eccentricity(graph, sp=distances)
        report["eccentricities"] = eccentricities
        report["diameter"] = max(eccentricities.values())
        report["radius"] = min(eccentricities.values())

    skipped = []
    searches = (
        ("chromatic", chromatic_number),
        ("domination", domination_number),
        ("chordless_cycle_lengths", chordless_cycle_lengths),
    )
    for name, search in searches:
        try:
            report[name] = search(graph, deadline)
        except _BudgetExhausted:
            logger.warning(f"Oracle budget exhausted during {name}; report is partial")
            skipped.append(name)
    return OracleReport(**report, partial=bool(skipped), skipped=skipped)


# Cross-check harness

class Discrepancy(BaseModel):
    tag: str
    reference: str = ""
    model: str
    flavor: str
    witness: str
    expected: str
    observed: str


class DiscrepancyReport(BaseModel):
    model: str
    flavor: str
    window: str
    vertex_count: int
    checks: Dict[str, int] = Field(default_factory=dict)
    discrepancies: List[Discrepancy] = Field(default_factory=list)
    skipped: List[str] = Field(default_factory=list)
    partial: bool = False

    @property
    def passed(self) -> bool:
        return not self.discrepancies


class _Harness:
    """Collects check counts and discrepancies for one blow-up"""

    def __init__(self, spec: BlowupSpec, g: ExplicitGraph, only: Optional[Set[str]]):
        self.spec = spec
        self.g = g
        self.only = only
        self.report = DiscrepancyReport(
            model=spec.model.to_text(),
            flavor=spec.flavor.value,
            window=spec.window.to_text(),
            vertex_count=len(g),
        )

    def wants(self, tag: str) -> bool:
        if self.only is not None and tag not in self.only:
            return False
        if tag in _NEEDS_TWO_VALUES and not self.spec.faithful:
            if tag not in self.report.skipped:
                self.report.skipped.append(tag)
            return False
        return True

    def check(
        self,
        tag: str,
        ok: bool,
        witness: str,
        expected: Any,
        observed: Any,
        reference: Optional[str] = None,
    ) -> None:
        self.report.checks[tag] = self.report.checks.get(tag, 0) + 1
        if not ok:
            reference = reference or CHECK_REFERENCES[tag][0]
            logger.debug(f"[{reference} {tag}] {witness}: expected {expected}, observed {observed}")
            self.report.discrepancies.append(
                Discrepancy(
                    tag=tag,
                    reference=reference,
                    model=self.report.model,
                    flavor=self.report.flavor,
                    witness=witness,
                    expected=str(expected),
                    observed=str(observed),
                )
            )


def _label(g: ExplicitGraph, *vertices: int) -> str:
    return " / ".join(g.graph.nodes[v]["label"] for v in vertices)


def _on_triangle(graph: nx.Graph, v: int) -> bool:
    neighbors = list(graph[v])
    return any(graph.has_edge(a, b) for a, b in combinations(neighbors, 2))


def _edge_on_triangle(graph: nx.Graph, u: int, v: int) -> bool:
    return any(w in graph[v] for w in graph[u])


def _edge_on_square(graph: nx.Graph, u: int, v: int) -> bool:
    for a in graph[u]:
        if a == v:
            continue
        for b in graph[a]:
            if b not in (u, v) and graph.has_edge(b, v):
                return True
    return False


def _orthogonal_in(graph: nx.Graph, u: int, v: int) -> bool:
    return graph.has_edge(u, v) and not (set(graph[u]) & set(graph[v]))


def _pair_representatives(g: ExplicitGraph) -> List[Tuple[int, int, bool]]:
    """One vertex pair per unordered pair of classes, plus a same-class pair where possible"""
    classes = g.classes()
    ids = sorted(classes)
    pairs = []
    for i, a in enumerate(ids):
        if len(classes[a]) > 1:
            pairs.append((classes[a][0], classes[a][1], True))
        for b in ids[i + 1:]:
            pairs.append((classes[a][0], classes[b][0], False))
    return pairs


def cross_check(
    spec: BlowupSpec,
    only: Optional[Iterable[str]] = None,
    seed: int = 0,
    budget_seconds: Optional[float] = None,
    orthogonal_samples: int = 1000,
    hull_samples: int = 1000,
) -> DiscrepancyReport:
    """Compare every closed-form prediction with the oracle on one blow-up

    On complete windows every check runs. On finite windows of infinite X_P
    only truncation-faithful checks run: distances of pairs with an uncovered
    window point, windowed triangles, clique and chromatic numbers equal to
    the window size, domination by window singletons and chordless lengths.
    """
    wanted = None if only is None else set(only)
    g = generate(spec)
    harness = _Harness(spec, g, wanted)
    graph = g.graph
    model, flavor = spec.model, spec.flavor
    xp = locality_region(model)
    window_points = set(spec.window.finite_members())
    rng = random.Random(seed)
    oracle = oracle_metrics(g, budget_seconds)
    harness.report.partial = oracle.partial
    harness.report.skipped.extend(oracle.skipped)

    if harness.wants("vertex"):
        for v in graph.nodes:
            fn = g.function(v)
            ok = zdgraph.is_vertex(model, flavor, fn.support).is_vertex and not fn.is_zero
            harness.check("vertex", ok, _label(g, v), "vertex", "non-vertex")

    if harness.wants("vertex-count"):
        expected = expected_vertex_count(spec)
        harness.check("vertex-count", expected == len(g), spec.window.to_text(), expected, len(g))

    if harness.wants("distance"):
        predicted: Dict[Tuple[int, int], Optional[int]] = {}
        for u, v in combinations(graph.nodes, 2):
            key = (g.class_id(u), g.class_id(v))
            if key not in predicted:
                cu, cv = g.class_of(u), g.class_of(v)
                covered = set(cu.support.finite_members()) | set(cv.support.finite_members())
                if spec.complete or window_points - covered:
                    predicted[key] = zdgraph.distance(cu, cv, same_class=key[0] == key[1])
                else:
                    predicted[key] = None
            expected = predicted[key]
            if expected is None:
                continue
            observed = oracle.distances.get(u, {}).get(v)
            harness.check(
                "distance",
                expected == observed,
                _label(g, u, v),
                expected,
                observed,
                reference=f"Th 2.7({expected})",
            )

    if spec.complete and harness.wants("eccentricity"):
        by_class: Dict[int, int] = {}
        for v in graph.nodes:
            cid = g.class_id(v)
            if cid not in by_class:
                by_class[cid] = zdgraph.eccentricity(g.class_of(v)).value
            observed = oracle.eccentricities.get(v)
            expected = by_class[cid]
            harness.check("eccentricity", expected == observed, _label(g, v), expected, observed)

    if spec.complete and harness.wants("diameter"):
        metric = zdgraph.diameter_and_radius(model, flavor)
        for name, expected, observed in (
            ("diameter", metric.diameter, oracle.diameter),
            ("radius", metric.radius, oracle.radius),
        ):
            harness.check("diameter", expected == observed, name, expected, observed)

    if harness.wants("girth"):
        if spec.complete:
            expected = zdgraph.girth(model, flavor)
            harness.check("girth", expected == oracle.girth, "girth", expected, oracle.girth)
        elif len(window_points) >= 3:
            harness.check("girth", oracle.girth == 3, "windowed girth", 3, oracle.girth)

    if spec.complete and harness.wants("cycle"):
        for u, v, same in _pair_representatives(g):
            expected = zdgraph.smallest_cycle_through(g.class_of(u), g.class_of(v), same_class=same)
            observed = shortest_cycle_through(graph, u, v)
            harness.check("cycle", expected == observed, _label(g, u, v), expected, observed)

    if harness.wants("chordless") and "chordless_cycle_lengths" not in oracle.skipped:
        lengths = oracle.chordless_cycle_lengths
        harness.check("chordless", set(lengths) <= {3, 4}, "induced cycles", "{3,4}", lengths)

    if spec.complete and harness.wants("edge-cycle"):
        for u, v in graph.edges:
            ok = _edge_on_triangle(graph, u, v) or _edge_on_square(graph, u, v)
            harness.check("edge-cycle", ok, _label(g, u, v), "on a 3- or 4-cycle", "on neither")

    if harness.wants("triangle"):
        on_all = True
        triangle_by_class: Dict[int, bool] = {}
        for v in graph.nodes:
            cid = g.class_id(v)
            if cid not in triangle_by_class:
                cls = g.class_of(v)
                if spec.complete:
                    triangle_by_class[cid] = zdgraph.on_triangle(cls)
                else:
                    uncovered = window_points - set(cls.support.finite_members())
                    triangle_by_class[cid] = len(uncovered) >= 2
            expected = triangle_by_class[cid]
            observed = _on_triangle(graph, v)
            on_all = on_all and observed
            harness.check("triangle", expected == observed, _label(g, v), expected, observed)
        if spec.complete:
            verdict = zdgraph.is_triangulated(model, flavor)
            expected = verdict.triangulated
            harness.check("triangle", expected == on_all, "triangulated", expected, on_all)
            if verdict.witness is not None:
                support = verdict.witness.support
                members = [v for v in graph.nodes if g.class_of(v).support == support]
                ok = bool(members) and not _on_triangle(graph, members[0])
                witness = verdict.witness.to_text()
                harness.check("triangle", ok, witness, "off every triangle", "witness rejected")

    if spec.complete and harness.wants("hypertriangle"):
        verdict = zdgraph.is_hypertriangulated(model, flavor)
        observed = all(_edge_on_triangle(graph, u, v) for u, v in graph.edges)
        expected = verdict.hypertriangulated
        harness.check("hypertriangle", expected == observed, "all edges", expected, observed)
        if verdict.edge is not None:
            s, t = verdict.edge
            ends = [
                (u, v) for u, v in graph.edges
                if {g.class_of(u).support, g.class_of(v).support} == {s.support, t.support}
            ]
            ok = bool(ends) and not _edge_on_triangle(graph, *ends[0])
            witness = f"{s.to_text()} -- {t.to_text()}"
            harness.check("hypertriangle", ok, witness, "edge off every triangle", "rejected")

    if spec.complete and (harness.wants("orthogonal") or harness.wants("complement")):
        classes = g.classes()
        firsts = {cid: members[0] for cid, members in classes.items()}
        for a, u in firsts.items():
            cu = g.class_of(u)
            partners = []
            for b, v in firsts.items():
                if a == b:
                    continue
                cv = g.class_of(v)
                observed = _orthogonal_in(graph, u, v)
                if observed:
                    partners.append(cv)
                if harness.wants("orthogonal"):
                    expected = zdgraph.orthogonal(cu, cv)
                    witness = _label(g, u, v)
                    harness.check("orthogonal", expected == observed, witness, expected, observed)
            if harness.wants("complement"):
                complement = zdgraph.complement_class(cu)
                expected = None if complement is None else complement.support.to_text()
                observed = partners[0].support.to_text() if partners else None
                harness.check("complement", expected == observed, _label(g, u), expected, observed)
        if harness.wants("complement"):
            expected = zdgraph.is_complemented(model, flavor)
            observed = all(
                any(_orthogonal_in(graph, u, v) for v in firsts.values() if v != u)
                for u in firsts.values()
            )
            harness.check("complement", expected == observed, "complemented", expected, observed)

    if spec.complete and harness.wants("unique-complement"):
        partners = {u: [x for x in graph[u] if _orthogonal_in(graph, u, x)] for u in graph.nodes}
        pairs = [(u, v) for u, found in partners.items() for v in found]
        for _ in range(min(orthogonal_samples, len(pairs) * 4)):
            u, v = rng.choice(pairs)
            w = rng.choice(partners[u])
            ok = set(graph[v]) == set(graph[w])
            witness = _label(g, u, v, w)
            harness.check("unique-complement", ok, witness, "equal neighbourhoods", "differ")

    window_size = len(window_points)
    if harness.wants("clique"):
        expected = zdgraph.clique_number(model, flavor).count if spec.complete else window_size
        harness.check("clique", expected == oracle.clique, "clique", expected, oracle.clique)

    if harness.wants("chromatic"):
        if "chromatic" not in oracle.skipped:
            expected = window_size
            if spec.complete:
                expected = zdgraph.chromatic_number(model, flavor).count
            observed = oracle.chromatic
            harness.check("chromatic", expected == observed, "chromatic", expected, observed)
        for u, v in graph.edges:
            ok = zdgraph.color_of(g.class_of(u)) != zdgraph.color_of(g.class_of(v))
            harness.check("chromatic", ok, _label(g, u, v), "distinct colours", "clash")

    if harness.wants("domination"):
        singletons = {
            v for v in graph.nodes
            if len(g.function(v).values) == 1 and g.function(v).values[0][1] == spec.alphabet[0]
        }
        for v in graph.nodes:
            cls = g.class_of(v)
            if not spec.complete and set(cls.support.finite_members()) == window_points:
                continue
            ok = v in singletons or bool(singletons & set(graph[v]))
            harness.check("domination", ok, _label(g, v), "dominated by singletons", "undominated")
        if spec.complete and "domination" not in oracle.skipped:
            bound = zdgraph.dominating_set(model, flavor).upper_bound
            ok = oracle.domination is not None and bound >= oracle.domination
            harness.check("domination", ok, "dt bound", f"<= {bound}", oracle.domination)

    if harness.wants("compactness") and flavor is GraphFlavor.CP and model.is_enumerable:
        expected = ring.minimal_prime_space(model).compact
        observed = zdgraph.is_complemented(model, flavor)
        witness = "complemented vs compact"
        harness.check("compactness", expected == observed, witness, expected, observed)

    if harness.wants("hull") and flavor is GraphFlavor.CP and model.is_enumerable:
        _hull_checks(harness, model, sorted(window_points), rng, hull_samples)

    logger.info(
        f"Cross-check {harness.report.model} ({harness.report.flavor}) "
        f"window {harness.report.window}: "
        f"{sum(harness.report.checks.values())} checks, "
        f"{len(harness.report.discrepancies)} discrepancies"
    )
    return harness.report


def _hull_checks(
    harness: _Harness, model: SpaceModel, window: List[int], rng: random.Random, samples: int
) -> None:
    xp = locality_region(model)
    for _ in range(samples):
        f = ring.random_member(model, rng, window)
        g = ring.random_member(model, rng, window)
        witness = f"f={f} g={g}"

        h_f = ring.hull(model, f)
        h_af = ring.hull_of_annihilator(model, f)
        ok = h_f.union(h_af) == xp and h_f.isdisjoint(h_af)
        harness.check("hull", ok, witness, "h(f) and h(A(f)) partition X_P", f"{h_f} / {h_af}")

        product_zero = (f * g).is_zero
        contains = h_af.issubset(ring.hull(model, g))
        harness.check("hull", contains == product_zero, witness, product_zero, contains)

        in_annihilator = ring.annihilator(model, f).contains(g)
        harness.check("hull", in_annihilator == product_zero, witness, product_zero, in_annihilator)

        joint = ring.annihilator(model, f).region.intersection(ring.annihilator(model, g).region)
        ac = ring.annihilator(model, ring.ac_witness(f, g)).region
        harness.check("hull", joint == ac, witness, joint, ac)

        if not f.is_zero and not g.is_zero:
            hull_match = ring.hull(model, f) == ring.hull_of_annihilator(model, g)
            double = ring.double_annihilator(model, f).region == ring.annihilator(model, g).region
            harness.check("hull", hull_match == double, witness, hull_match, double)


# Export

def to_dot(g: ExplicitGraph, name: str = "blowup") -> str:
    """DOT text: vertex label is the function literal, class id an attribute"""
    lines = [f"graph {name} {{"]
    for v in g.graph.nodes:
        lines.append(f'  {v} [label="{g.graph.nodes[v]["label"]}", class_id={g.class_id(v)}];')
    for u, v in sorted(tuple(sorted(e)) for e in g.graph.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_document(g: ExplicitGraph) -> Dict[str, Any]:
    plain = nx.Graph()
    for v in g.graph.nodes:
        fn = g.function(v)
        plain.add_node(
            v,
            label=fn.to_text(),
            values=[[p, str(value)] for p, value in fn.values],
            class_id=g.class_id(v),
        )
    plain.add_edges_from(g.graph.edges)
    return {
        "spec": g.spec.to_document() if g.spec is not None else None,
        "graph": nx.node_link_data(plain),
    }


def from_document(document: Dict[str, Any]) -> ExplicitGraph:
    spec = BlowupSpec.from_document(document["spec"]) if document.get("spec") else None
    plain = nx.node_link_graph(document["graph"])
    graph = nx.Graph()
    if spec is not None:
        graph.graph.update(model=spec.model.to_text(), flavor=spec.flavor.value)
    for v, data in plain.nodes(data=True):
        fn = FinSuppFn.of({p: Fraction(value) for p, value in data["values"]})
        attrs = {"fn": fn, "class_id": data["class_id"], "label": data["label"]}
        if spec is not None:
            attrs["vclass"] = VertexClass(model=spec.model, flavor=spec.flavor, support=fn.support)
        graph.add_node(v, **attrs)
    graph.add_edges_from(plain.edges)
    return ExplicitGraph(graph, spec)


def write_json(g: ExplicitGraph, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(json.dumps(to_document(g), indent=2, sort_keys=True))
    logger.info(f"Wrote blow-up JSON to {path}")
    return path


def read_json(path: Path | str) -> ExplicitGraph:
    return from_document(json.loads(Path(path).read_text()))
