"""Tests for exact ring arithmetic, annihilators, hulls and primes"""

from fractions import Fraction

import pytest

from zdgraph_mcp.core import ring
from zdgraph_mcp.core.ring import FinSuppFn, RingOp
from zdgraph_mcp.core.setalg import PeriodicSet
from zdgraph_mcp.core.zdgraph import GraphFlavor, VertexClass, is_complemented
from zdgraph_mcp.utils.errors import RingMembershipError, UnsupportedModelError, WitnessError
from zdgraph_mcp.utils.parser import parse_model


def test_zero_values_are_pruned():
    f = FinSuppFn.of({0: 2, 3: 0, 1: Fraction(-2, 3)})
    assert f.values == ((0, Fraction(2)), (1, Fraction(-2, 3)))
    assert f.support == PeriodicSet.from_points([0, 1])
    assert f.to_text() == "{0:2, 1:-2/3}"
    assert (f - f).is_zero


def test_pointwise_arithmetic():
    f = FinSuppFn.of({0: 1, 1: 2})
    g = FinSuppFn.of({1: 3, 2: 5})
    assert f + g == FinSuppFn.of({0: 1, 1: 5, 2: 5})
    assert f * g == FinSuppFn.unit(1, 6)
    assert f.scale(Fraction(1, 2)) == FinSuppFn.of({0: Fraction(1, 2), 1: 1})
    assert (-f)(1) == -2
    assert f(7) == 0


def test_ring_ops_checks_membership(powerset_model):
    model = powerset_model(2)
    a = FinSuppFn.unit(0, 3)
    assert ring.ring_ops(a, None, RingOp.NEGATE, model=model) == FinSuppFn.unit(0, -3)
    assert ring.ring_ops(a, None, "scale", scalar=2) == FinSuppFn.unit(0, 6)
    with pytest.raises(RingMembershipError):
        ring.ring_ops(a, FinSuppFn.unit(5), RingOp.ADD, model=model)
    with pytest.raises(WitnessError):
        ring.ring_ops(a, None, RingOp.MUL)


def test_membership(naturals_finite, powerset_model):
    assert ring.ring_element(naturals_finite, {0: 1, 100: 2})(100) == 2
    with pytest.raises(RingMembershipError):
        ring.ring_element(powerset_model(2), {2: 1})
    with pytest.raises(RingMembershipError):
        ring.ring_element(parse_model("finite:2", "all"), {2: 1})
    with pytest.raises(RingMembershipError):
        FinSuppFn.of({-1: 1})


def test_annihilator(powerset_model):
    model = powerset_model(3)
    f = FinSuppFn.of({0: 1})
    ann = ring.annihilator(model, f)
    assert ann.region == PeriodicSet.from_points([1, 2])
    assert ann.contains(FinSuppFn.of({1: 4, 2: -1}))
    assert not ann.contains(FinSuppFn.of({0: 1, 1: 1}))
    assert ring.annihilator(model, FinSuppFn.zero()).whole_ring
    assert ring.double_annihilator(model, f).region == PeriodicSet.from_points([0])


def test_hull_partition(naturals_finite):
    f = FinSuppFn.of({0: 1, 2: 1})
    h_f = ring.hull(naturals_finite, f)
    h_af = ring.hull_of_annihilator(naturals_finite, f)
    assert h_af == PeriodicSet.from_points([0, 2])
    assert h_f | h_af == PeriodicSet.naturals()
    assert h_f.isdisjoint(h_af)


def test_hull_containment_iff_product_zero(naturals_finite, rng):
    window = [0, 1, 2, 3, 4]
    for _ in range(200):
        f = ring.random_member(naturals_finite, rng, window)
        g = ring.random_member(naturals_finite, rng, window)
        h_af = ring.hull_of_annihilator(naturals_finite, f)
        contained = h_af.issubset(ring.hull(naturals_finite, g))
        assert contained == (f * g).is_zero


def test_hull_needs_enumerable_model(naturals_all):
    with pytest.raises(UnsupportedModelError):
        ring.hull(naturals_all, FinSuppFn.unit(0))
    with pytest.raises(UnsupportedModelError):
        ring.minimal_prime_space(naturals_all)


def test_ac_witness(naturals_finite, rng):
    for _ in range(100):
        f = ring.random_member(naturals_finite, rng)
        g = ring.random_member(naturals_finite, rng)
        ann_f = ring.annihilator(naturals_finite, f).region
        joint = ann_f & ring.annihilator(naturals_finite, g).region
        assert ring.annihilator(naturals_finite, ring.ac_witness(f, g)).region == joint


def test_square_decomposition():
    f = FinSuppFn.of({1: Fraction(3, 7), 4: -2})
    a, b = ring.square_decomposition(f)
    assert a * b == f


def test_complement_element(finite_three, naturals_finite, naturals_all):
    f = FinSuppFn.of({0: 5})
    complement = ring.complement_element(finite_three, f)
    assert complement == FinSuppFn.indicator([1, 2])
    assert ring.is_complement(finite_three, f, complement)
    assert not ring.is_complement(finite_three, f, FinSuppFn.unit(1))
    assert ring.complement_element(naturals_finite, f) is None
    with pytest.raises(UnsupportedModelError):
        ring.complement_element(naturals_all, f)
    with pytest.raises(WitnessError):
        ring.complement_element(finite_three, FinSuppFn.zero())


def test_complement_matches_double_annihilator(finite_three):
    f = FinSuppFn.of({0: 2, 1: 1})
    f2 = FinSuppFn.unit(2, 9)
    assert ring.is_complement(finite_three, f, f2)
    ann_f = ring.annihilator(finite_three, f).region
    assert ring.double_annihilator(finite_three, f2).region == ann_f


def test_maximal_ideal_witness(naturals_finite):
    f = FinSuppFn.of({0: 5, 1: 1})
    g = FinSuppFn.unit(0, 7)
    decomposition = ring.maximal_ideal_witness(naturals_finite, 0, f, g)
    assert decomposition.coefficient == Fraction(7, 5)
    assert decomposition.in_maximal.is_zero
    assert decomposition.in_principal == g
    with pytest.raises(WitnessError):
        ring.maximal_ideal_witness(naturals_finite, 2, f, g)


@pytest.mark.parametrize(
    "ground,ideal",
    [
        ("finite:3", "all"),
        ("countable", "finite"),
        ("countable", "powerset:{0,1}"),
        ("finite:5", "finite"),
    ],
)
def test_complemented_iff_minimal_primes_compact(ground, ideal):
    model = parse_model(ground, ideal)
    space = ring.minimal_prime_space(model)
    assert space.compact == is_complemented(model, GraphFlavor.CP)


def test_minimal_prime_space(powerset_model):
    space = ring.minimal_prime_space(powerset_model(3))
    assert space.size == 3
    f = FinSuppFn.of({0: 1, 2: 1})
    assert space.contains(1, f)
    assert not space.contains(0, f)
    assert space.hull_of(f) == PeriodicSet.from_points([1])
    with pytest.raises(WitnessError):
        space.contains(7, f)


def test_brute_force_minimal_primes_are_coordinate_primes():
    result = ring.brute_force_minimal_primes(3, 2)
    assert result.minimal_prime_points == (0, 1, 2)
    assert result.all_coordinate
    assert result.ideal_count == 8
    assert result.prime_count == 3
    assert ring.brute_force_minimal_primes(2, 3).minimal_prime_points == (0, 1)


def test_brute_force_size_limit():
    with pytest.raises(UnsupportedModelError):
        ring.brute_force_minimal_primes(5, 3)


def test_vertex_support_matches_ring_support(finite_three):
    f = ring.ring_element(finite_three, {0: 1, 2: -1})
    vclass = VertexClass.of(finite_three, GraphFlavor.CP, f.support)
    assert vclass.to_text() == "{0,2}"
