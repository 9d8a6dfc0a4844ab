"""Exact boolean algebra of eventually-periodic subsets of the naturals

A set is stored as a periodic part (residues modulo a modulus) corrected by
two finite exception lists. Every instance is canonical on construction, so
structural equality is set equality.
"""

from __future__ import annotations

import math
import operator
from enum import Enum
from functools import total_ordering
from itertools import count, islice
from typing import Any, Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..utils.errors import InvalidSetError, NotASubsetError, WitnessError


@total_ordering
class Cardinal(BaseModel):
    """Cardinality of a subset of the naturals: finite or countably infinite"""

    model_config = ConfigDict(frozen=True)

    # None stands for countably infinite
    count: Optional[int] = None

    @classmethod
    def finite(cls, n: int) -> "Cardinal":
        if n < 0:
            raise ValueError(f"Cardinal must be nonnegative, got {n}")
        return cls(count=n)

    @classmethod
    def countable(cls) -> "Cardinal":
        return cls(count=None)

    @property
    def is_finite(self) -> bool:
        return self.count is not None

    def _key(self) -> Tuple[int, int]:
        return (1, 0) if self.count is None else (0, self.count)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Cardinal.finite(other)
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self._key() < other._key()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.count == other
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self.count == other.count

    def __hash__(self) -> int:
        return hash(("Cardinal", self.count))

    def __str__(self) -> str:
        return "countably-infinite" if self.count is None else str(self.count)

    def to_json(self) -> Any:
        return "countably-infinite" if self.count is None else self.count


class SetOp(str, Enum):
    """Binary set operations supported by combine"""

    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"
    SYMMETRIC_DIFFERENCE = "symmetric_difference"


_OPERATORS: Dict[SetOp, Callable[[bool, bool], bool]] = {
    SetOp.UNION: operator.or_,
    SetOp.INTERSECTION: operator.and_,
    SetOp.DIFFERENCE: lambda a, b: a and not b,
    SetOp.SYMMETRIC_DIFFERENCE: operator.xor,
}


def _minimal_modulus(modulus: int, residues: FrozenSet[int]) -> Tuple[int, FrozenSet[int]]:
    """Shrink a residue system to the smallest modulus describing the same periodic set"""
    for divisor in range(1, modulus + 1):
        if modulus % divisor:
            continue
        reduced = frozenset(r % divisor for r in residues)
        if all((r % divisor in reduced) == (r in residues) for r in range(modulus)):
            return divisor, reduced
    return modulus, residues


class PeriodicSet(BaseModel):
    """An eventually-periodic subset of the naturals in canonical form

    n is a member iff n is in ``added``, or n mod ``modulus`` is in
    ``residues`` and n is not in ``removed``.
    """

    model_config = ConfigDict(frozen=True)

    modulus: int = 1
    residues: FrozenSet[int] = frozenset()
    added: FrozenSet[int] = frozenset()
    removed: FrozenSet[int] = frozenset()

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        modulus = int(data.get("modulus", 1))
        residues = frozenset(int(r) for r in data.get("residues", ()))
        added = frozenset(int(n) for n in data.get("added", ()))
        removed = frozenset(int(n) for n in data.get("removed", ()))

        if modulus < 1:
            raise InvalidSetError(f"Modulus must be at least 1, got {modulus}")
        bad = sorted(r for r in residues if not 0 <= r < modulus)
        if bad:
            raise InvalidSetError(f"Residues {bad} out of range for modulus {modulus}")
        negative = sorted(n for n in added | removed if n < 0)
        if negative:
            raise InvalidSetError(f"Exception points must be naturals, got {negative}")

        def member(n: int) -> bool:
            return n in added or (n % modulus in residues and n not in removed)

        if residues:
            modulus, residues = _minimal_modulus(modulus, residues)
        else:
            modulus = 1

        def periodic(n: int) -> bool:
            return n % modulus in residues

        points = added | removed
        return {
            "modulus": modulus,
            "residues": residues,
            "added": frozenset(n for n in points if member(n) and not periodic(n)),
            "removed": frozenset(n for n in points if not member(n) and periodic(n)),
        }

    # Constructors

    @classmethod
    def empty(cls) -> "PeriodicSet":
        return cls()

    @classmethod
    def naturals(cls) -> "PeriodicSet":
        return cls(modulus=1, residues={0})

    @classmethod
    def from_points(cls, points: Iterable[int]) -> "PeriodicSet":
        return cls(added=frozenset(points))

    @classmethod
    def interval(cls, low: int, high: int) -> "PeriodicSet":
        """The finite interval {low..high}, inclusive"""
        return cls(added=frozenset(range(low, high + 1)))

    @classmethod
    def residue_class(cls, modulus: int, residues: Iterable[int]) -> "PeriodicSet":
        return cls(modulus=modulus, residues=frozenset(residues))

    @classmethod
    def cofinite(cls, removed: Iterable[int]) -> "PeriodicSet":
        return cls(modulus=1, residues={0}, removed=frozenset(removed))

    # Membership

    def _periodic(self, n: int) -> bool:
        return n % self.modulus in self.residues

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n in self.added or (self._periodic(n) and n not in self.removed)

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and self.contains(n)

    @property
    def exceptions(self) -> FrozenSet[int]:
        return self.added | self.removed

    @property
    def horizon(self) -> int:
        """First natural from which membership is purely periodic"""
        return max(self.exceptions, default=-1) + 1

    def members(self) -> Iterator[int]:
        """Members in ascending order (an infinite iterator for infinite sets)"""
        if self.is_finite:
            yield from sorted(self.added)
            return
        for n in count():
            if self.contains(n):
                yield n

    def first(self, k: int) -> List[int]:
        return list(islice(self.members(), k))

    def min(self) -> int:
        for n in self.members():
            return n
        raise WitnessError("Empty set has no smallest member")

    def finite_members(self) -> Tuple[int, ...]:
        if not self.is_finite:
            raise WitnessError(f"Set {self.to_text()} is infinite")
        return tuple(sorted(self.added))

    # Classification

    @property
    def is_finite(self) -> bool:
        return not self.residues

    @property
    def is_empty(self) -> bool:
        return not self.residues and not self.added

    @property
    def cardinality(self) -> Cardinal:
        if self.residues:
            return Cardinal.countable()
        return Cardinal.finite(len(self.added))

    def has_at_least(self, k: int) -> bool:
        return self.cardinality >= Cardinal.finite(k)

    # Boolean algebra

    def union(self, other: "PeriodicSet") -> "PeriodicSet":
        return combine(self, other, SetOp.UNION)

    def intersection(self, other: "PeriodicSet") -> "PeriodicSet":
        return combine(self, other, SetOp.INTERSECTION)

    def difference(self, other: "PeriodicSet") -> "PeriodicSet":
        return combine(self, other, SetOp.DIFFERENCE)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def issubset(self, other: "PeriodicSet") -> bool:
        return self.difference(other).is_empty

    def isdisjoint(self, other: "PeriodicSet") -> bool:
        return self.intersection(other).is_empty

    def without(self, n: int) -> "PeriodicSet":
        return self.difference(PeriodicSet.from_points([n]))

    def with_point(self, n: int) -> "PeriodicSet":
        return self.union(PeriodicSet.from_points([n]))

    # Rendering

    def to_text(self) -> str:
        if self.is_finite:
            return _braces(self.added)
        if self.modulus == 1:
            if not self.removed:
                return "naturals"
            return f"cofinite del {_braces(self.removed)}"
        text = f"mod {self.modulus} res {_braces(self.residues)}"
        if self.added:
            text += f" add {_braces(self.added)}"
        if self.removed:
            text += f" del {_braces(self.removed)}"
        return text

    def __str__(self) -> str:
        return self.to_text()


def _braces(points: Iterable[int]) -> str:
    return "{" + ",".join(str(n) for n in sorted(points)) + "}"


class GroundSet(BaseModel):
    """A discrete ground set: {0..size-1} when size is given, otherwise the naturals"""

    model_config = ConfigDict(frozen=True)

    size: Optional[int] = None

    @model_validator(mode="after")
    def _check_size(self) -> "GroundSet":
        if self.size is not None and self.size < 1:
            raise InvalidSetError(f"Finite ground set needs at least one point, got {self.size}")
        return self

    @classmethod
    def finite(cls, n: int) -> "GroundSet":
        return cls(size=n)

    @classmethod
    def countable(cls) -> "GroundSet":
        return cls(size=None)

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def points(self) -> PeriodicSet:
        if self.size is None:
            return PeriodicSet.naturals()
        return PeriodicSet.interval(0, self.size - 1)

    def to_text(self) -> str:
        return "countable" if self.size is None else f"finite:{self.size}"


class SetDescription(BaseModel):
    """Constructive description: a residue system plus intervals, then point edits"""

    modulus: int = 1
    residues: FrozenSet[int] = frozenset()
    intervals: Tuple[Tuple[int, int], ...] = ()
    add: FrozenSet[int] = frozenset()
    remove: FrozenSet[int] = frozenset()


class SetClassification(BaseModel):
    model_config = ConfigDict(frozen=True)

    is_empty: bool
    is_finite: bool
    cardinality: Cardinal


def make_set(description: SetDescription) -> PeriodicSet:
    """Build the canonical set for a description

    Residues outside the modulus are rejected. Points in ``remove`` win over
    points in ``add`` and intervals.
    """
    if description.modulus < 1:
        raise InvalidSetError(f"Modulus must be at least 1, got {description.modulus}")
    bad = sorted(r for r in description.residues if not 0 <= r < description.modulus)
    if bad:
        raise InvalidSetError(
            f"Residues {bad} out of range for modulus {description.modulus}"
        )
    result = PeriodicSet.residue_class(description.modulus, description.residues)
    for low, high in description.intervals:
        if low > high:
            raise InvalidSetError(f"Empty interval [{low}..{high}]")
        result = result.union(PeriodicSet.interval(low, high))
    result = result.union(PeriodicSet.from_points(description.add))
    return result.difference(PeriodicSet.from_points(description.remove))


def combine(a: PeriodicSet, b: PeriodicSet, op: SetOp | str) -> PeriodicSet:
    """Apply a boolean operation; the result agrees pointwise with the operation"""
    fn = _OPERATORS[SetOp(op)]
    modulus = math.lcm(a.modulus, b.modulus)
    residues = frozenset(
        r for r in range(modulus)
        if fn(r % a.modulus in a.residues, r % b.modulus in b.residues)
    )
    points = a.exceptions | b.exceptions
    return PeriodicSet(
        modulus=modulus,
        residues=residues,
        added=frozenset(n for n in points if fn(a.contains(n), b.contains(n))),
        removed=frozenset(n for n in points if not fn(a.contains(n), b.contains(n))),
    )


def complement(a: PeriodicSet, ground: GroundSet) -> PeriodicSet:
    """Complement of ``a`` inside the ground set"""
    universe = ground.points()
    if not a.issubset(universe):
        raise NotASubsetError(f"{a.to_text()} is not contained in ground {ground.to_text()}")
    return universe.difference(a)


def classify(a: PeriodicSet) -> SetClassification:
    return SetClassification(
        is_empty=a.is_empty,
        is_finite=a.is_finite,
        cardinality=a.cardinality,
    )


def sample(a: PeriodicSet, k: int) -> List[int]:
    """The k smallest members of ``a``"""
    if k < 1:
        raise WitnessError(f"Sample size must be positive, got {k}")
    if not a.has_at_least(k):
        raise WitnessError(f"{a.to_text()} has fewer than {k} members")
    return a.first(k)
