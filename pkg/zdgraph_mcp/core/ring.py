"""Exact arithmetic in C_P(X) for finitely supported rational functions

Elements are sparse maps point -> nonzero Fraction. Annihilators, hulls and
complements are all described through support regions, and minimal primes
are indexed by the points of X_P on enumerable models.
"""

from __future__ import annotations

import random
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..utils.errors import RingMembershipError, UnsupportedModelError, WitnessError
from .setalg import Cardinal, PeriodicSet
from .topology import ClosedSetIdeal, SpaceModel, locality_region

Number = int | Fraction | str


class FinSuppFn(BaseModel):
    """A finitely supported function with exact rational values

    Zero values are never stored, so the key set is the support.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: Tuple[Tuple[int, Fraction], ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _prune(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "values" not in data:
            return data
        raw = data["values"]
        items = raw.items() if isinstance(raw, Mapping) else raw
        merged: Dict[int, Fraction] = {}
        for point, value in items:
            point = int(point)
            if point < 0:
                raise RingMembershipError(f"Functions live on the naturals, got point {point}")
            merged[point] = Fraction(value)
        return {"values": tuple(sorted((p, v) for p, v in merged.items() if v != 0))}

    @classmethod
    def of(cls, values: Mapping[int, Number]) -> "FinSuppFn":
        return cls(values=dict(values))

    @classmethod
    def zero(cls) -> "FinSuppFn":
        return cls()

    @classmethod
    def unit(cls, x: int, r: Number = 1) -> "FinSuppFn":
        """r * 1_x"""
        return cls(values={x: r})

    @classmethod
    def indicator(cls, points: Iterable[int] | PeriodicSet, r: Number = 1) -> "FinSuppFn":
        if isinstance(points, PeriodicSet):
            points = points.finite_members()
        return cls(values={x: r for x in points})

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.values)

    def __call__(self, x: int) -> Fraction:
        return self.as_dict().get(x, Fraction(0))

    @property
    def support(self) -> PeriodicSet:
        return PeriodicSet.from_points(p for p, _ in self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "FinSuppFn") -> "FinSuppFn":
        total = self.as_dict()
        for p, v in other.values:
            total[p] = total.get(p, Fraction(0)) + v
        return FinSuppFn(values=total)

    def __mul__(self, other: "FinSuppFn") -> "FinSuppFn":
        theirs = other.as_dict()
        return FinSuppFn(values={p: v * theirs[p] for p, v in self.values if p in theirs})

    def __neg__(self) -> "FinSuppFn":
        return self.scale(-1)

    def __sub__(self, other: "FinSuppFn") -> "FinSuppFn":
        return self + (-other)

    def scale(self, r: Number) -> "FinSuppFn":
        r = Fraction(r)
        return FinSuppFn(values={p: r * v for p, v in self.values})

    def to_text(self) -> str:
        return "{" + ", ".join(f"{p}:{v}" for p, v in self.values) + "}"

    def __str__(self) -> str:
        return self.to_text()


def require_member(model: SpaceModel, f: FinSuppFn) -> FinSuppFn:
    """Check that f is an element of C_P(X) for this model"""
    support = f.support
    if not support.issubset(model.points):
        raise RingMembershipError(f"{f} has support outside ground {model.ground.to_text()}")
    if not model.ideal.contains(support):
        raise RingMembershipError(f"Support of {f} is not in the ideal {model.ideal.to_text()}")
    return f


def ring_element(model: SpaceModel, values: Mapping[int, Number]) -> FinSuppFn:
    return require_member(model, FinSuppFn.of(values))


class RingOp(str, Enum):
    ADD = "add"
    MUL = "mul"
    NEGATE = "negate"
    SCALE = "scale"


def ring_ops(
    a: FinSuppFn,
    b: Optional[FinSuppFn],
    op: RingOp | str,
    scalar: Optional[Number] = None,
    model: Optional[SpaceModel] = None,
) -> FinSuppFn:
    """Apply one ring operation; with a model both operands are checked for membership"""
    op = RingOp(op)
    if model is not None:
        require_member(model, a)
        if b is not None:
            require_member(model, b)
    if op is RingOp.NEGATE:
        return -a
    if op is RingOp.SCALE:
        if scalar is None:
            raise WitnessError("scale needs a scalar")
        return a.scale(scalar)
    if b is None:
        raise WitnessError(f"{op.value} needs two operands")
    return a + b if op is RingOp.ADD else a * b


# Annihilators and hulls

class AnnihilatorClass(BaseModel):
    """A(f): every ring element whose support lies in the region"""

    model_config = ConfigDict(frozen=True)

    region: PeriodicSet
    ideal_constraint: ClosedSetIdeal
    # A(0) is the whole ring
    whole_ring: bool = False

    def contains(self, g: FinSuppFn) -> bool:
        support = g.support
        return support.issubset(self.region) and self.ideal_constraint.contains(support)


def annihilator(model: SpaceModel, f: FinSuppFn) -> AnnihilatorClass:
    require_member(model, f)
    xp = locality_region(model)
    return AnnihilatorClass(
        region=xp.difference(f.support),
        ideal_constraint=model.ideal,
        whole_ring=f.is_zero,
    )


def double_annihilator(model: SpaceModel, f: FinSuppFn) -> AnnihilatorClass:
    """A(A(f)): elements vanishing wherever some member of A(f) is nonzero"""
    inner = annihilator(model, f)
    return AnnihilatorClass(
        region=locality_region(model).difference(inner.region),
        ideal_constraint=model.ideal,
    )


def _require_enumerable(model: SpaceModel) -> None:
    if not model.is_enumerable:
        raise UnsupportedModelError(
            f"Minimal primes of {model.to_text()} are not indexed by points"
        )


def hull(model: SpaceModel, f: FinSuppFn) -> PeriodicSet:
    """Indices x of the minimal primes P_x containing f, i.e. the zeros of f in X_P"""
    _require_enumerable(model)
    require_member(model, f)
    return locality_region(model).difference(f.support)


def hull_of_annihilator(model: SpaceModel, f: FinSuppFn) -> PeriodicSet:
    """h(A(f)) = X_P minus h(f) = supp f"""
    _require_enumerable(model)
    require_member(model, f)
    return locality_region(model).intersection(f.support)


def ac_witness(f: FinSuppFn, g: FinSuppFn) -> FinSuppFn:
    """f^2 + g^2, whose annihilator is A(f) intersected with A(g)"""
    return f * f + g * g


def square_decomposition(f: FinSuppFn) -> Tuple[FinSuppFn, FinSuppFn]:
    """Two ring elements whose product is f"""
    return FinSuppFn.indicator(f.support), f


# Complements

def complement_element(model: SpaceModel, f: FinSuppFn) -> Optional[FinSuppFn]:
    """The indicator of X_P minus supp f, when it is a ring element"""
    require_member(model, f)
    if f.is_zero:
        raise WitnessError("The zero function has no complement")
    rest = locality_region(model).difference(f.support)
    if not model.ideal.contains(rest):
        return None
    if not rest.is_finite:
        raise UnsupportedModelError(
            f"Complement {rest.to_text()} is infinite and has no finitely supported form"
        )
    return FinSuppFn.indicator(rest)


def is_complement(model: SpaceModel, f: FinSuppFn, f2: FinSuppFn) -> bool:
    """f.f2 = 0 and no point of X_P is a zero of both"""
    require_member(model, f)
    require_member(model, f2)
    if not (f * f2).is_zero:
        return False
    common_zeros = locality_region(model).difference(f.support.union(f2.support))
    return common_zeros.is_empty


# Prime structure

class MinimalPrimeSpace(BaseModel):
    """Minimal primes P_x = {f : f(x) = 0}, one per point of X_P, discrete topology"""

    model_config = ConfigDict(frozen=True)

    index_set: PeriodicSet
    topology_kind: str = "discrete"
    compact: bool

    @property
    def size(self) -> Cardinal:
        return self.index_set.cardinality

    def contains(self, x: int, f: FinSuppFn) -> bool:
        """Whether f lies in the prime P_x"""
        if x not in self.index_set:
            raise WitnessError(f"No minimal prime is indexed by {x}")
        return f(x) == 0

    def hull_of(self, f: FinSuppFn) -> PeriodicSet:
        return self.index_set.difference(f.support)


def minimal_prime_space(model: SpaceModel) -> MinimalPrimeSpace:
    _require_enumerable(model)
    xp = locality_region(model)
    return MinimalPrimeSpace(index_set=xp, compact=xp.is_finite)


class MaximalIdealDecomposition(BaseModel):
    """g = in_maximal + in_principal with in_maximal(x) = 0 and in_principal a multiple of f"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    point: int
    in_maximal: FinSuppFn
    in_principal: FinSuppFn
    coefficient: Fraction


def maximal_ideal_witness(
    model: SpaceModel, x: int, f: FinSuppFn, g: FinSuppFn
) -> MaximalIdealDecomposition:
    """Show g lies in M_x + (f) whenever f(x) != 0"""
    if x not in locality_region(model):
        raise WitnessError(f"Point {x} is not in X_P = {locality_region(model).to_text()}")
    require_member(model, f)
    require_member(model, g)
    if f(x) == 0:
        raise WitnessError(f"f({x}) = 0, so f already lies in M_{x}")
    unit = FinSuppFn.unit(x)
    coefficient = g(x) / f(x)
    in_maximal = g - unit.scale(g(x))
    in_principal = (unit * f).scale(coefficient)
    if in_maximal(x) != 0 or in_maximal + in_principal != g:
        raise WitnessError(f"Decomposition of {g} at {x} does not evaluate back to g")
    return MaximalIdealDecomposition(
        point=x, in_maximal=in_maximal, in_principal=in_principal, coefficient=coefficient
    )


class PrimeEnumeration(BaseModel):
    model_config = ConfigDict(frozen=True)

    ideal_count: int
    prime_count: int
    minimal_prime_points: Tuple[int, ...]
    all_coordinate: bool


Vector = Tuple[int, ...]


def _ideal_sum(a: FrozenSet[Vector], b: FrozenSet[Vector], p: int) -> FrozenSet[Vector]:
    return frozenset(tuple((u + v) % p for u, v in zip(x, y)) for x in a for y in b)


def brute_force_minimal_primes(n: int, p: int = 2) -> PrimeEnumeration:
    """Enumerate every ideal of GF(p)^n by closure and pick out the minimal primes

    Each minimal prime is matched against the coordinate primes {a : a_x = 0}.
    """
    if n < 1 or p not in (2, 3, 5) or p**n > 81:
        raise UnsupportedModelError(
            f"Brute force needs p in (2, 3, 5) and p^n <= 81, got n={n} p={p}"
        )
    ring = [tuple(v) for v in product(range(p), repeat=n)]

    def times(a: Vector, b: Vector) -> Vector:
        return tuple((u * v) % p for u, v in zip(a, b))

    principal = {frozenset(times(r, a) for r in ring) for a in ring}
    ideals = set(principal)
    frontier = set(principal)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in list(ideals):
                s = _ideal_sum(a, b, p)
                if s not in ideals:
                    fresh.add(s)
        ideals |= fresh
        frontier = fresh

    whole = frozenset(ring)
    primes = [
        ideal for ideal in ideals
        if ideal != whole
        and all(a in ideal or b in ideal for a in ring for b in ring if times(a, b) in ideal)
    ]
    minimal = [q for q in primes if not any(other < q for other in primes)]

    points: List[int] = []
    for q in minimal:
        for x in range(n):
            if q == frozenset(a for a in ring if a[x] == 0):
                points.append(x)
                break
    return PrimeEnumeration(
        ideal_count=len(ideals),
        prime_count=len(primes),
        minimal_prime_points=tuple(sorted(points)),
        all_coordinate=len(points) == len(minimal),
    )


# Sampling

def random_function(
    rng: random.Random, points: Sequence[int], values: Sequence[Number] = (1, 2, -1, Fraction(1, 2))
) -> FinSuppFn:
    """A random function supported on a random subset of ``points`` (possibly zero)"""
    chosen = [x for x in points if rng.random() < 0.5]
    return FinSuppFn.of({x: rng.choice(values) for x in chosen})


def random_member(
    model: SpaceModel, rng: random.Random, window: Optional[Sequence[int]] = None
) -> FinSuppFn:
    """A random ring element supported inside a finite window of X_P"""
    xp = locality_region(model)
    if window is None:
        window = xp.finite_members() if xp.is_finite else xp.first(6)
    return require_member(model, random_function(rng, window))
