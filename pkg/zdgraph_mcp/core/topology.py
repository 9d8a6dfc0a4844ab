"""Discrete space models with an ideal of closed sets

Every model is discrete, so closure and interior are identities and the
locality region X_P is the set of points whose singleton lies in the ideal.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Set

from pydantic import BaseModel, ConfigDict, model_validator

from ..utils.errors import InvalidModelError, NotASubsetError, WitnessError
from .setalg import Cardinal, GroundSet, PeriodicSet

__all__ = [
    "ClosedSetIdeal",
    "GroundSet",
    "IdealKind",
    "ModelValidation",
    "SpaceModel",
    "closure_of_locality_in_ideal",
    "ideal_from_family",
    "ideal_member",
    "locality_region",
    "validate_model",
    "witness_support",
]


class IdealKind(str, Enum):
    ALL_CLOSED = "all"
    FINITE_SETS = "finite"
    POWER_SET = "powerset"


class ClosedSetIdeal(BaseModel):
    """All closed sets, all finite sets, or the power set of a finite set M"""

    model_config = ConfigDict(frozen=True)

    kind: IdealKind
    base: Optional[PeriodicSet] = None

    @model_validator(mode="after")
    def _check_base(self) -> "ClosedSetIdeal":
        if self.kind is IdealKind.POWER_SET:
            if self.base is None:
                raise InvalidModelError("Power-set ideal needs a base set M")
            if not self.base.is_finite:
                raise InvalidModelError(f"Power-set base must be finite, got {self.base.to_text()}")
        elif self.base is not None:
            raise InvalidModelError(f"Ideal kind '{self.kind.value}' takes no base set")
        return self

    @classmethod
    def all_closed(cls) -> "ClosedSetIdeal":
        return cls(kind=IdealKind.ALL_CLOSED)

    @classmethod
    def finite_sets(cls) -> "ClosedSetIdeal":
        return cls(kind=IdealKind.FINITE_SETS)

    @classmethod
    def power_set_of(cls, base: PeriodicSet | Iterable[int]) -> "ClosedSetIdeal":
        if not isinstance(base, PeriodicSet):
            base = PeriodicSet.from_points(base)
        return cls(kind=IdealKind.POWER_SET, base=base)

    def contains(self, s: PeriodicSet) -> bool:
        if self.kind is IdealKind.ALL_CLOSED:
            return True
        if self.kind is IdealKind.FINITE_SETS:
            return s.is_finite
        assert self.base is not None
        return s.issubset(self.base)

    def to_text(self) -> str:
        if self.kind is IdealKind.POWER_SET:
            assert self.base is not None
            return f"powerset:{self.base.to_text()}"
        return self.kind.value


class SpaceModel(BaseModel):
    """A discrete ground set together with an ideal of closed sets"""

    model_config = ConfigDict(frozen=True)

    ground: GroundSet
    ideal: ClosedSetIdeal

    @model_validator(mode="after")
    def _check_base_in_ground(self) -> "SpaceModel":
        base = self.ideal.base
        if base is not None and not base.issubset(self.ground.points()):
            raise InvalidModelError(
                f"Ideal base {base.to_text()} is not contained in ground {self.ground.to_text()}"
            )
        return self

    @classmethod
    def of(cls, ground: GroundSet, ideal: ClosedSetIdeal) -> "SpaceModel":
        return cls(ground=ground, ideal=ideal)

    @property
    def points(self) -> PeriodicSet:
        return self.ground.points()

    @property
    def locality(self) -> PeriodicSet:
        return locality_region(self)

    @property
    def is_enumerable(self) -> bool:
        """Whether every minimal prime of the ring is indexed by a point of X_P"""
        return self.ground.is_finite or self.ideal.kind is not IdealKind.ALL_CLOSED

    def to_text(self) -> str:
        return f"ground={self.ground.to_text()} ideal={self.ideal.to_text()}"

    def __str__(self) -> str:
        return self.to_text()


class ModelValidation(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex_set_nonempty: bool
    locality_size: Cardinal


def _require_subset(model: SpaceModel, s: PeriodicSet) -> None:
    if not s.issubset(model.points):
        raise NotASubsetError(f"{s.to_text()} is not contained in ground {model.ground.to_text()}")


def ideal_member(model: SpaceModel, s: PeriodicSet) -> bool:
    _require_subset(model, s)
    return model.ideal.contains(s)


def locality_region(model: SpaceModel) -> PeriodicSet:
    """X_P: points whose singleton lies in the ideal"""
    if model.ideal.kind is IdealKind.POWER_SET:
        assert model.ideal.base is not None
        return model.ideal.base
    return model.points


def closure_of_locality_in_ideal(model: SpaceModel) -> bool:
    return model.ideal.contains(locality_region(model))


def validate_model(model: SpaceModel) -> ModelValidation:
    """The graph has vertices iff X_P has at least two points"""
    size = locality_region(model).cardinality
    return ModelValidation(
        vertex_set_nonempty=size >= Cardinal.finite(2),
        locality_size=size,
    )


def witness_support(model: SpaceModel, x: int, g: PeriodicSet) -> PeriodicSet:
    """A support S with x in S, S inside g and S in the ideal; always {x}"""
    if x not in locality_region(model):
        raise WitnessError(f"Point {x} is not in X_P = {locality_region(model).to_text()}")
    if x not in g:
        raise WitnessError(f"Point {x} is not in the neighbourhood {g.to_text()}")
    return PeriodicSet.from_points([x])


def ideal_from_family(size: int, family: Iterable[Iterable[int]]) -> ClosedSetIdeal:
    """Identify an ideal on {0..size-1} given by its full member list

    The family must be closed downward and under union; it then equals the
    power set of the union of its members.
    """
    members: Set[FrozenSet[int]] = {frozenset(s) for s in family}
    members.add(frozenset())
    universe = frozenset(range(size))
    for s in members:
        if not s <= universe:
            raise InvalidModelError(f"Member {sorted(s)} is outside {{0..{size - 1}}}")
        for k in range(len(s)):
            for sub in combinations(sorted(s), k):
                if frozenset(sub) not in members:
                    raise InvalidModelError(f"Family is not downward closed at {sorted(s)}")
    for a, b in combinations(members, 2):
        if a | b not in members:
            raise InvalidModelError(
                f"Family is not closed under union: {sorted(a)} and {sorted(b)}"
            )
    top = frozenset().union(*members)
    return ClosedSetIdeal.power_set_of(sorted(top))
