import pytest
from hypothesis import given, settings

from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.lucas import binomial_in_field
from src.orekit.arith.multipoly import UNDEFINED_DEGREE
from src.orekit.arith.ratfunc import RatFunc
from src.orekit.counterexample.instance import build_instance, cyclic_shift
from src.orekit.errors import RingMismatchError
from src.orekit.maps.automorphism import AutomorphismSpec
from src.orekit.maps.derivation import compose_power
from src.orekit.ore.element import OreElement, commutator, skew_ladder
from src.orekit.ore.ring import OreRingDescriptor
from tests.strategies import F2_3, ore_elements

DELTA = cyclic_shift(F2_3)
RING = OreRingDescriptor(F2_3, 'x', None, DELTA, ('t',), 'A')
ROTATION = AutomorphismSpec.from_images(F2_3, {'x1': 'x2', 'x2': 'x3', 'x3': 'x1'}, name='s')
TWISTED = OreRingDescriptor(F2_3, 'y', ROTATION, None, ('t',), 'S')


def generator(ring, name):
    return OreElement.generator(ring, name)


def test_defining_relation():
    x, x1 = generator(RING, 'x'), generator(RING, 'x1')
    product = x * x1
    assert product == x1 * x + generator(RING, 'x2')
    assert str(product) == 'x1*x + x2'


def test_central_variable_commutes():
    t, x, x1 = generator(RING, 't'), generator(RING, 'x'), generator(RING, 'x1')
    assert commutator(t, x).is_zero
    assert commutator(t, x1).is_zero
    assert (t * x) == (x * t)


def test_skew_ladder_matches_repeated_products():
    c = RatFunc.variable(F2_3, 'x1')
    ladder = skew_ladder(RING, c, 3)
    x = OreElement.skew(RING)
    for j, row in enumerate(ladder):
        expected = OreElement.from_terms(RING, [((k, (0,)), a) for k, a in row.items()])
        assert x ** j * OreElement.scalar(RING, c) == expected


def test_scalars_and_queries():
    x1 = RatFunc.variable(F2_3, 'x1')
    a = OreElement.scalar(RING, x1)
    assert a.is_scalar
    assert a.scalar_value() == x1
    assert OreElement.zero(RING).degree() is UNDEFINED_DEGREE
    assert OreElement.skew(RING, 3).degree() == 3
    assert OreElement.central(RING, 't', 2).central_degree('t') == 2
    with pytest.raises(ValueError):
        OreElement.skew(RING).scalar_value()


def test_central_multidegree_must_match():
    with pytest.raises(ValueError):
        OreElement.from_terms(RING, [((0, (0, 0)), 1)])


def test_rings_do_not_mix(instance2):
    with pytest.raises(RingMismatchError):
        OreElement.skew(instance2.A) * OreElement.skew(instance2.B)
    with pytest.raises(RingMismatchError):
        OreElement.skew(instance2.A) + OreElement.skew(RING)


def test_negative_power_is_rejected():
    with pytest.raises(ValueError):
        OreElement.skew(RING) ** -1


@pytest.mark.parametrize('p', [2, 3])
@pytest.mark.parametrize('n', range(1, 7))
def test_commutator_with_powers_of_the_skew_variable(p, n):
    inst = build_instance(p)
    ring, delta = inst.A, inst.delta
    alpha = RatFunc.variable(inst.K, 'x1') / (RatFunc.variable(inst.K, 'x2') + 1)
    expected = OreElement.from_terms(
        ring,
        [((n - k, (0,)), compose_power(delta, k)(alpha) * binomial_in_field(inst.K, n, k)) for k in range(1, n + 1)],
    )
    bracket = commutator(OreElement.skew(ring, n), OreElement.scalar(ring, alpha))
    assert bracket == expected


@pytest.mark.parametrize('p', [2, 3])
def test_pth_power_of_the_skew_variable_acts_by_delta_to_the_p(p):
    inst = build_instance(p)
    for name in inst.K.variables:
        alpha = OreElement.generator(inst.A, name)
        bracket = commutator(OreElement.skew(inst.A, p), alpha)
        assert bracket == OreElement.scalar(inst.A, compose_power(inst.delta, p)(RatFunc.variable(inst.K, name)))


def test_twisted_multiplication():
    field = FieldDescriptor(0, ('x1', 'x2'))
    x1, x2 = RatFunc.variable(field, 'x1'), RatFunc.variable(field, 'x2')
    sigma = AutomorphismSpec.from_images(field, {'x1': x2, 'x2': x1}, name='s')
    ring = OreRingDescriptor(field, 'y', sigma, None, (), 'S')
    y = OreElement.skew(ring)
    assert y * OreElement.scalar(ring, x1) == OreElement.from_terms(ring, [((1, ()), x2)])
    assert not ring.is_differential


@settings(max_examples=100, derandomize=True)
@given(ore_elements(RING), ore_elements(RING), ore_elements(RING))
def test_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, derandomize=True)
@given(ore_elements(RING), ore_elements(RING), ore_elements(RING))
def test_multiplication_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=100, derandomize=True)
@given(ore_elements(RING), ore_elements(RING))
def test_skew_degree_is_additive(a, b):
    if a.is_zero or b.is_zero:
        assert (a * b).is_zero
    else:
        assert (a * b).degree() == a.degree() + b.degree()


def test_twisted_relation_on_every_generator():
    y = OreElement.skew(TWISTED)
    for name in F2_3.variables:
        c = RatFunc.variable(F2_3, name)
        assert y * OreElement.scalar(TWISTED, c) == OreElement.from_terms(TWISTED, [((1, (0,)), ROTATION(c))])
    assert commutator(OreElement.central(TWISTED, 't'), y).is_zero


def test_ordinary_derivation_needs_trivial_twist():
    with pytest.raises(ValueError, match='d is not a s-derivation'):
        OreRingDescriptor(F2_3, 'y', ROTATION, cyclic_shift(F2_3, name='d'), (), 'S')
    identity = AutomorphismSpec.from_images(F2_3, {}, name='id')
    assert OreRingDescriptor(F2_3, 'y', identity, DELTA, (), 'S').is_differential


@settings(max_examples=100, derandomize=True)
@given(ore_elements(TWISTED), ore_elements(TWISTED), ore_elements(TWISTED))
def test_twisted_multiplication_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, derandomize=True)
@given(ore_elements(TWISTED), ore_elements(TWISTED), ore_elements(TWISTED))
def test_twisted_multiplication_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=100, derandomize=True)
@given(ore_elements(TWISTED), ore_elements(TWISTED))
def test_twisted_skew_degree_is_additive(a, b):
    if a.is_zero or b.is_zero:
        assert (a * b).is_zero
    else:
        assert (a * b).degree() == a.degree() + b.degree()
