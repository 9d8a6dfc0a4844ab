"""Tests for the eventually-periodic set algebra"""

import pytest

from zdgraph_mcp.core.setalg import (
    Cardinal,
    GroundSet,
    PeriodicSet,
    SetDescription,
    SetOp,
    classify,
    combine,
    complement,
    make_set,
    sample,
)
from zdgraph_mcp.utils.errors import InvalidSetError, NotASubsetError, WitnessError

EVENS = PeriodicSet.residue_class(2, [0])
ODDS = PeriodicSet.residue_class(2, [1])


def test_canonical_form_makes_equal_sets_equal():
    assert PeriodicSet.residue_class(4, [0, 2]) == EVENS
    assert PeriodicSet.residue_class(3, [0, 1, 2]) == PeriodicSet.naturals()
    # an exception that agrees with the periodic part is dropped
    assert PeriodicSet(modulus=2, residues={0}, added={4}) == EVENS
    assert PeriodicSet.from_points([]) == PeriodicSet.empty()


def test_membership():
    s = PeriodicSet(modulus=3, residues={0}, added={1}, removed={3})
    assert s.first(5) == [0, 1, 6, 9, 12]
    assert 3 not in s
    assert -1 not in s
    assert "1" not in s


def test_boolean_algebra_agrees_pointwise():
    a = PeriodicSet(modulus=3, residues={0, 1}, removed={4})
    b = PeriodicSet(modulus=2, residues={1}, added={0, 2})
    for op, fn in [
        (SetOp.UNION, lambda x, y: x or y),
        (SetOp.INTERSECTION, lambda x, y: x and y),
        (SetOp.DIFFERENCE, lambda x, y: x and not y),
        (SetOp.SYMMETRIC_DIFFERENCE, lambda x, y: x != y),
    ]:
        result = combine(a, b, op)
        for n in range(40):
            assert result.contains(n) == fn(a.contains(n), b.contains(n)), (op, n)


def test_evens_and_odds_partition_naturals():
    assert EVENS | ODDS == PeriodicSet.naturals()
    assert EVENS.isdisjoint(ODDS)
    assert (PeriodicSet.naturals() - EVENS) == ODDS


def test_cofinite_sets():
    s = PeriodicSet.cofinite([0, 5])
    assert not s.is_finite
    assert s.min() == 1
    assert PeriodicSet.naturals() - s == PeriodicSet.from_points([0, 5])
    assert s.to_text() == "cofinite del {0,5}"


def test_cardinality_and_classification():
    assert PeriodicSet.interval(2, 6).cardinality == 5
    assert EVENS.cardinality == Cardinal.countable()
    info = classify(PeriodicSet.empty())
    assert info.is_empty and info.is_finite and info.cardinality == 0
    assert Cardinal.finite(3) < Cardinal.countable()
    assert Cardinal.countable().to_json() == "countably-infinite"


def test_has_at_least_on_infinite_sets():
    assert EVENS.has_at_least(1000)
    assert not PeriodicSet.from_points([1, 2]).has_at_least(3)


def test_finite_members_rejects_infinite_sets():
    assert PeriodicSet.from_points([3, 1]).finite_members() == (1, 3)
    with pytest.raises(WitnessError):
        EVENS.finite_members()


def test_min_of_empty_set():
    with pytest.raises(WitnessError):
        PeriodicSet.empty().min()


def test_invalid_residue_system():
    with pytest.raises(InvalidSetError):
        PeriodicSet.residue_class(3, [3])
    with pytest.raises(InvalidSetError):
        PeriodicSet(modulus=0)


def test_make_set_remove_wins():
    description = SetDescription(
        modulus=2, residues={0}, intervals=((1, 3),), add={7}, remove={2, 7}
    )
    s = make_set(description)
    assert s.first(6) == [0, 1, 3, 4, 6, 8]


def test_make_set_rejects_empty_interval():
    with pytest.raises(InvalidSetError):
        make_set(SetDescription(intervals=((4, 2),)))


def test_complement_in_ground():
    ground = GroundSet.finite(5)
    assert complement(PeriodicSet.from_points([0, 4]), ground) == PeriodicSet.from_points([1, 2, 3])
    with pytest.raises(NotASubsetError):
        complement(PeriodicSet.from_points([5]), ground)
    assert complement(EVENS, GroundSet.countable()) == ODDS


def test_sample():
    assert sample(ODDS, 3) == [1, 3, 5]
    with pytest.raises(WitnessError):
        sample(PeriodicSet.from_points([1]), 2)


def test_text_rendering():
    assert EVENS.to_text() == "mod 2 res {0}"
    assert PeriodicSet.naturals().to_text() == "naturals"
    assert PeriodicSet.from_points([2, 0]).to_text() == "{0,2}"
    assert GroundSet.finite(4).to_text() == "finite:4"
