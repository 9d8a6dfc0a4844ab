"""Recovering a ring isomorphism of C_F rings from a bare graph isomorphism

The atoms r*1_x are found from adjacency alone, grouped into one class per
point, and pushed through psi. Semantic labels are only consulted at the very
end, to name the points on both sides.
"""

from __future__ import annotations

import logging
import random
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator

from ..utils.errors import (
    DegenerateModelError,
    ReconstructionError,
    RegimeMismatchError,
    RingMembershipError,
)
from . import blowup
from .blowup import ExplicitGraph
from .ring import FinSuppFn, random_function

logger = logging.getLogger(__name__)


class AtomRegime(str, Enum):
    FINITE = "finite"
    INFINITE = "infinite"


class AbstractGraph:
    """Vertex ids and adjacency only; ``labels`` is kept aside for naming points"""

    def __init__(self, graph: nx.Graph, labels: Optional[Dict[Hashable, FinSuppFn]] = None):
        if nx.number_of_selfloops(graph):
            raise ReconstructionError("Abstract graphs must be loop-free")
        self.graph = nx.Graph()
        self.graph.add_nodes_from(graph.nodes)
        self.graph.add_edges_from(graph.edges)
        self.labels = labels or {}

    @classmethod
    def from_explicit(
        cls, g: ExplicitGraph, relabel: Optional[Callable[[int], Hashable]] = None
    ) -> "AbstractGraph":
        """Strip every annotation, optionally renaming vertex ids"""
        rename = relabel or (lambda v: v)
        bare = nx.Graph()
        bare.add_nodes_from(rename(v) for v in g.graph.nodes)
        bare.add_edges_from((rename(u), rename(v)) for u, v in g.graph.edges)
        labels = {rename(v): g.function(v) for v in g.graph.nodes}
        return cls(bare, labels)

    def __len__(self) -> int:
        return self.graph.number_of_nodes()


class PointBijection(BaseModel):
    """phi: K_X -> K_Y"""

    model_config = ConfigDict(frozen=True)

    mapping: Dict[int, int]

    @model_validator(mode="after")
    def _bijective(self) -> "PointBijection":
        if len(set(self.mapping.values())) != len(self.mapping):
            raise ReconstructionError(f"Point map {self.mapping} is not injective")
        return self

    @property
    def domain(self) -> Tuple[int, ...]:
        return tuple(sorted(self.mapping))

    @property
    def codomain(self) -> Tuple[int, ...]:
        return tuple(sorted(self.mapping.values()))

    def inverse(self) -> "PointBijection":
        return PointBijection(mapping={y: x for x, y in self.mapping.items()})


class RingIsoDescription(BaseModel):
    """Phi(f) = sum of f(x) * 1_phi(x); the point map is not assumed injective"""

    model_config = ConfigDict(frozen=True)

    point_map: Dict[int, int]
    codomain: Tuple[int, ...]

    @classmethod
    def from_bijection(cls, phi: PointBijection) -> "RingIsoDescription":
        return cls(point_map=dict(phi.mapping), codomain=phi.codomain)

    @property
    def phi(self) -> PointBijection:
        return PointBijection(mapping=self.point_map)

    def apply(self, f: FinSuppFn) -> FinSuppFn:
        total = FinSuppFn.zero()
        for x, value in f.values:
            if x not in self.point_map:
                raise RingMembershipError(f"{f} is supported outside the domain of phi")
            total = total + FinSuppFn.unit(self.point_map[x], value)
        return total

    def preimage(self, h: FinSuppFn) -> Optional[FinSuppFn]:
        """sum of h(y) * 1_x over x with phi(x) = y, or None if h leaves the image"""
        inverse: Dict[int, int] = {}
        for x, y in sorted(self.point_map.items()):
            inverse.setdefault(y, x)
        if any(y not in inverse for y, _ in h.values):
            return None
        return FinSuppFn.of({inverse[y]: value for y, value in h.values})

    def to_document(self) -> Dict[str, Any]:
        return {"phi": [[x, y] for x, y in sorted(self.point_map.items())]}


class IsoVerification(BaseModel):
    verified: bool
    checks: int
    counterexample: Optional[str] = None

    def to_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"verified": self.verified, "checks": self.checks}
        if self.counterexample is not None:
            document["counterexample"] = self.counterexample
        return document


# Atom detection

def _anchored_pentagon(graph: nx.Graph, v: Hashable, bit: Dict[Hashable, int]) -> bool:
    """Whether v lies on a 5-cycle v-a-b-c-d-v with b and c both non-adjacent to v

    Such a cycle forces b.c != 0 around an atom, so atoms never have one.
    """
    near = 0
    for u in graph[v]:
        near |= bit[u]
    far = [u for u in graph.nodes if u != v and not near & bit[u]]
    far_set = set(far)
    reach = {}
    for b in far:
        mask = 0
        for u in graph[b]:
            mask |= bit[u]
        reach[b] = mask & near
    for b in far:
        if not reach[b]:
            continue
        for c in graph[b]:
            if c not in far_set or not reach[c]:
                continue
            joint = reach[b] | reach[c]
            # a != d needs two distinct anchors
            if joint & (joint - 1):
                return True
    return False


def detect_atom_classes(
    g: AbstractGraph, regime: AtomRegime | str = AtomRegime.FINITE
) -> List[List[Hashable]]:
    """Partition the atoms of a faithful truncation into one class per point

    Raises:
        RegimeMismatchError: If the graph does not look like a truncated C_F graph
            in the claimed regime
    """
    regime = AtomRegime(regime)
    graph = g.graph
    if graph.number_of_nodes() == 0:
        raise DegenerateModelError("The graph is empty, so it has no atoms")

    groups = blowup.twin_groups(graph)
    if regime is AtomRegime.FINITE:
        if not nx.is_connected(graph):
            raise RegimeMismatchError("Finite regime expects a connected graph")
        eccentricity = nx.eccentricity(graph)
        profile = set(eccentricity.values())
        if not profile <= {2, 3}:
            raise RegimeMismatchError(
                f"Finite regime expects eccentricities 2 and 3, found {sorted(profile)}"
            )
        atoms = [members for members in groups if eccentricity[members[0]] == 2]
    else:
        bit = {v: 1 << i for i, v in enumerate(graph.nodes)}
        atoms = [
            members for members in groups
            # isolated vertices carry the whole window and are not atoms
            if graph.degree(members[0]) > 0 and not _anchored_pentagon(graph, members[0], bit)
        ]

    if len(atoms) < 2:
        raise RegimeMismatchError(f"Found {len(atoms)} atom class(es); at least 2 are needed")
    for i, first in enumerate(atoms):
        for second in atoms[i + 1:]:
            if not all(graph.has_edge(u, v) for u in first for v in second):
                raise RegimeMismatchError(
                    f"Atom classes of {first[0]!r} and {second[0]!r} are not completely adjacent"
                )
    logger.debug(f"Detected {len(atoms)} atom classes in {regime.value} regime")
    return [sorted(members, key=repr) for members in atoms]


# Reconstruction

def _check_isomorphism(
    gx: AbstractGraph, gy: AbstractGraph, psi: Mapping[Hashable, Hashable]
) -> None:
    if set(psi) != set(gx.graph.nodes):
        raise ReconstructionError("psi is not defined on exactly the vertices of the first graph")
    if set(psi.values()) != set(gy.graph.nodes) or len(set(psi.values())) != len(psi):
        raise ReconstructionError("psi is not a bijection onto the vertices of the second graph")
    if gx.graph.number_of_edges() != gy.graph.number_of_edges():
        raise ReconstructionError("psi is not a graph isomorphism: edge counts differ")
    for u, v in gx.graph.edges:
        if not gy.graph.has_edge(psi[u], psi[v]):
            raise ReconstructionError(
                f"psi is not a graph isomorphism: edge {u!r}-{v!r} is not preserved"
            )


def _point_of(g: AbstractGraph, members: Sequence[Hashable]) -> int:
    fn = g.labels.get(members[0])
    if fn is None or len(fn.values) != 1:
        raise ReconstructionError(f"Atom class of {members[0]!r} has no single-point label")
    return fn.values[0][0]


def reconstruct(
    gx: AbstractGraph,
    gy: AbstractGraph,
    psi: Mapping[Hashable, Hashable],
    regime: AtomRegime | str = AtomRegime.FINITE,
    deadline: Optional[float] = None,
) -> RingIsoDescription:
    """Recover phi and Phi from a graph isomorphism psi: gx -> gy

    Raises:
        DegenerateModelError: If either graph is empty
        ReconstructionError: If psi is not an isomorphism, the chromatic numbers
            differ, or psi does not carry atom classes onto atom classes
    """
    if len(gx) == 0 or len(gy) == 0:
        raise DegenerateModelError(
            "An empty zero-divisor graph (|K| < 2) is isomorphic to any other empty graph, "
            "but no ring isomorphism can be read off it"
        )
    chi_x = blowup.chromatic_number(gx.graph, deadline)
    chi_y = blowup.chromatic_number(gy.graph, deadline)
    if chi_x != chi_y:
        raise ReconstructionError(f"chromatic mismatch: {chi_x} != {chi_y}")
    _check_isomorphism(gx, gy, psi)

    classes_x = detect_atom_classes(gx, regime)
    classes_y = detect_atom_classes(gy, regime)
    if len(classes_x) != len(classes_y):
        raise ReconstructionError(
            f"atom class counts differ: {len(classes_x)} != {len(classes_y)}"
        )
    owner = {v: i for i, members in enumerate(classes_y) for v in members}

    mapping: Dict[int, int] = {}
    for members in classes_x:
        targets = {owner.get(psi[v]) for v in members}
        if len(targets) != 1 or None in targets:
            raise ReconstructionError(
                f"psi maps the atom class of {members[0]!r} to a non-atom class"
            )
        target = classes_y[targets.pop()]
        if len(target) != len(members):
            raise ReconstructionError(f"psi splits the atom class of {members[0]!r}")
        mapping[_point_of(gx, members)] = _point_of(gy, target)

    logger.info(f"Reconstructed point map {mapping} from {len(classes_x)} atom classes")
    return RingIsoDescription.from_bijection(PointBijection(mapping=mapping))


def verify_ring_iso(
    desc: RingIsoDescription,
    sample_budget: int = 500,
    seed: int = 0,
    values: Sequence[Fraction | int] = (1, 2, -1, Fraction(1, 3), Fraction(-5, 2)),
) -> IsoVerification:
    """Check Phi on generators and sampled pairs: additive, multiplicative, injective, onto"""
    rng = random.Random(seed)
    domain = sorted(desc.point_map)
    checks = 0

    def fail(message: str) -> IsoVerification:
        logger.info(f"Ring isomorphism rejected: {message}")
        return IsoVerification(verified=False, checks=checks, counterexample=message)

    seen: Dict[int, int] = {}
    for x in domain:
        y = desc.point_map[x]
        checks += 1
        if y in seen:
            f, g = FinSuppFn.unit(seen[y]), FinSuppFn.unit(x)
            return fail(f"injectivity: f={f} != g={g} but Phi(f) = Phi(g) = {desc.apply(f)}")
        seen[y] = x
    for y in desc.codomain:
        checks += 1
        if y not in seen:
            return fail(f"surjectivity: h={FinSuppFn.unit(y)} has no preimage")

    for _ in range(sample_budget):
        f = random_function(rng, domain, values)
        g = random_function(rng, domain, values)
        checks += 1
        if desc.apply(f + g) != desc.apply(f) + desc.apply(g):
            return fail(f"additivity: f={f} g={g}")
        if desc.apply(f * g) != desc.apply(f) * desc.apply(g):
            return fail(f"multiplicativity: f={f} g={g}")
        if f != g and desc.apply(f) == desc.apply(g):
            return fail(f"injectivity: f={f} != g={g} but Phi(f) = Phi(g)")
        h = random_function(rng, list(desc.codomain), values)
        preimage = desc.preimage(h)
        if preimage is None or desc.apply(preimage) != h:
            return fail(f"surjectivity: h={h} has no preimage")
    return IsoVerification(verified=True, checks=checks)


# psi construction

def _index_by_function(g: ExplicitGraph) -> Dict[FinSuppFn, int]:
    return {g.function(v): v for v in g.graph.nodes}


def psi_from_relabeling(
    gx: ExplicitGraph,
    gy: ExplicitGraph,
    point_map: Mapping[int, int],
    value_maps: Optional[Mapping[int, Mapping[Fraction, Fraction]]] = None,
) -> Dict[int, int]:
    """The vertex bijection induced by moving points and permuting values pointwise"""
    targets = _index_by_function(gy)
    psi = {}
    for v in gx.graph.nodes:
        image = {}
        for x, value in gx.function(v).values:
            if value_maps is not None and x in value_maps:
                value = value_maps[x][value]
            image[point_map[x]] = value
        fn = FinSuppFn.of(image)
        if fn not in targets:
            raise ReconstructionError(f"Relabeled vertex {fn} is missing from the second graph")
        psi[v] = targets[fn]
    return psi


def random_automorphism_psi(
    g: ExplicitGraph, rng: random.Random
) -> Tuple[Dict[int, int], Dict[int, int]]:
    """A random automorphism from a window permutation and per-point value permutations

    Returns:
        (psi, point_map)
    """
    if g.spec is None:
        raise ReconstructionError("Automorphisms need a blow-up with its spec")
    points = list(g.spec.window.finite_members())
    shuffled = points[:]
    rng.shuffle(shuffled)
    point_map = dict(zip(points, shuffled))
    alphabet = list(g.spec.alphabet)
    value_maps = {}
    for x in points:
        permuted = alphabet[:]
        rng.shuffle(permuted)
        value_maps[x] = dict(zip(alphabet, permuted))
    return psi_from_relabeling(g, g, point_map, value_maps), point_map


def psi_from_pairs(pairs: Iterable[Sequence[Any]]) -> Dict[Any, Any]:
    """psi from a list of [x_vertex, y_vertex] pairs"""
    psi: Dict[Any, Any] = {}
    for pair in pairs:
        if len(pair) != 2:
            raise ReconstructionError(f"psi entries must be pairs, got {pair!r}")
        source, target = pair
        if source in psi:
            raise ReconstructionError(f"psi maps {source!r} twice")
        psi[source] = target
    return psi
