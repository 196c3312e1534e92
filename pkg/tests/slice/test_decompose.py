import pytest
from hypothesis import given, settings, strategies as st

from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.ratfunc import RatFunc
from src.orekit.counterexample.instance import cyclic_shift
from src.orekit.errors import NonKernelResidueError, SliceConditionError, TruncationExhaustedError
from src.orekit.hasse_schmidt.algebra import FieldAlgebra, OreAlgebra
from src.orekit.hasse_schmidt.constructions import divided_power_jet
from src.orekit.hasse_schmidt.jet import JetHom
from src.orekit.ore.element import OreElement
from src.orekit.ore.ring import OreRingDescriptor
from src.orekit.slice.decompose import (
    check_slice_condition,
    find_slice,
    independence_check,
    reconstruct,
    slice_decompose,
)
from tests.strategies import F2_3, ore_elements, polys

QQ = FieldDescriptor(0, ('u',))
TWO_VARIABLES = {p: FieldDescriptor(p, ('u', 'v')) for p in (0, 2, 3)}
ORE = OreRingDescriptor(F2_3, 'x', None, cyclic_shift(F2_3), ('t',), 'A')


@pytest.fixture
def shift():
    algebra = FieldAlgebra(QQ, polynomial=True)
    return RatFunc.variable(QQ, 'u'), divided_power_jet(algebra, 'u', truncation=6)


def test_decompose_a_quadratic(shift):
    u, j = shift
    a = u ** 2 + u * 3 + 5
    decomposition = slice_decompose(a, j, u)
    assert list(decomposition.coefficients) == [5, 3, 1]
    assert decomposition.degree == 2
    assert all(c.passed for c in decomposition.kernel_certificates)
    assert reconstruct(decomposition) == a


def test_zero_has_no_coefficients(shift):
    u, j = shift
    decomposition = slice_decompose(u - u, j, u)
    assert decomposition.coefficients == ()
    assert reconstruct(decomposition).is_zero


def test_slice_condition(shift):
    u, j = shift
    assert check_slice_condition(u, j).passed
    assert check_slice_condition(u + 7, j).passed
    certificate = check_slice_condition(u ** 2, j)
    assert certificate.failed
    assert certificate.witness == 'd_1(u^2) = 2*u, not 1'
    with pytest.raises(SliceConditionError):
        slice_decompose(u, j, u ** 2)


def test_shifted_slice(shift):
    u, j = shift
    a = u ** 3
    decomposition = slice_decompose(a, j, u + 1)
    assert list(decomposition.coefficients) == [-1, 3, -3, 1]
    assert reconstruct(decomposition) == a


def test_moving_coefficient_is_rejected():
    field = FieldDescriptor(0, ('u', 'v'))
    u, v = RatFunc.variable(field, 'u'), RatFunc.variable(field, 'v')
    j = JetHom(FieldAlgebra(field, polynomial=True), 4, {'u': [u, 1], 'v': [v, u]})
    with pytest.raises(NonKernelResidueError):
        slice_decompose(v, j, u)


def test_central_slice_in_an_ore_ring(instance2):
    A = instance2.A
    t = OreElement.central(A, 't')
    x = OreElement.skew(A)
    x1 = OreElement.generator(A, 'x1')
    x2 = OreElement.generator(A, 'x2')
    j = JetHom(OreAlgebra(A), 4, {'t': [t, OreElement.one(A)]})
    assert check_slice_condition(t, j).passed
    a = x * t ** 2 + x1 * t + x2
    decomposition = slice_decompose(a, j, t)
    assert list(decomposition.coefficients) == [x2, x1, x]
    assert reconstruct(decomposition) == a


def test_non_central_slice_is_rejected(instance2):
    A = instance2.A
    x = OreElement.skew(A)
    j = JetHom(OreAlgebra(A), 3, {'x': [x, OreElement.one(A)]})
    certificate = check_slice_condition(x, j)
    assert certificate.failed
    assert certificate.witness == 'not central: [x, x1] = x2'


def test_independence(shift):
    u, j = shift
    assert independence_check([1, 2, 3], u, j, 1).passed
    assert independence_check([0, 5], u ** 2, j, 2).passed
    assert independence_check([0, 0], u, j, 1).witness == '0 = 0'
    with pytest.raises(SliceConditionError):
        independence_check([1, 1], u, j, 3)
    with pytest.raises(SliceConditionError):
        independence_check([1, 1], u ** 2, j, 1)
    with pytest.raises(TruncationExhaustedError):
        independence_check([0] * 7 + [1], u, j, 1)


def test_independence_needs_kernel_coefficients(shift):
    u, j = shift
    certificate = independence_check([0, u], u, j, 1)
    assert certificate.failed
    assert certificate.witness == 'd_1(sum b_i x^i) = 2*u but b_1 d_1(x)^1 = u'


def test_find_slice_in_characteristic_zero(shift):
    u, j = shift
    found = find_slice(u ** 3 + u, j)
    assert found.slice == u
    assert found.steps == (u ** 3 + u, u * 3)
    assert found.certificate.passed


def test_find_slice_in_characteristic_three():
    field = FieldDescriptor(3, ('u',))
    u = RatFunc.variable(field, 'u')
    j = divided_power_jet(FieldAlgebra(field, polynomial=True), 'u', truncation=8)
    found = find_slice(u ** 2, j)
    assert found.slice == u
    assert found.source == u ** 2


def test_find_slice_fails_when_nu_stops_above_one():
    field = FieldDescriptor(2, ('u',))
    u = RatFunc.variable(field, 'u')
    j = divided_power_jet(FieldAlgebra(field, polynomial=True), 'u', truncation=8)
    with pytest.raises(SliceConditionError):
        find_slice(u ** 6, j)
    with pytest.raises(SliceConditionError):
        find_slice(u ** 0, j)


def test_find_slice_in_an_ore_ring(instance2):
    A = instance2.A
    t = OreElement.central(A, 't')
    x = OreElement.skew(A)
    x1 = RatFunc.variable(instance2.K, 'x1')
    j = JetHom(OreAlgebra(A), 3, {'t': [t, OreElement.one(A)]})
    found = find_slice(t.left_scale(x1) + x, j)
    assert found.slice == t + x.left_scale(x1.inverse())


def field_and_poly():
    """Polynomials in u and v of u-degree at most 3, in characteristic 0, 2 or 3."""
    return st.sampled_from(sorted(TWO_VARIABLES)).flatmap(
        lambda p: st.tuples(st.just(TWO_VARIABLES[p]), polys(TWO_VARIABLES[p], max_terms=5, max_exponent=3))
    )


@settings(max_examples=100, derandomize=True)
@given(field_and_poly())
def test_decomposition_of_a_polynomial_is_its_expansion_in_u(data):
    field, a = data
    u = RatFunc.variable(field, 'u')
    j = divided_power_jet(FieldAlgebra(field, polynomial=True), 'u', truncation=4)
    decomposition = slice_decompose(a, j, u)
    assert reconstruct(decomposition) == RatFunc(a)
    assert all(c.passed for c in decomposition.kernel_certificates)
    if a.is_zero:
        assert decomposition.coefficients == ()
        return
    expected = a.coefficients_in(0)
    assert decomposition.degree == a.degree_in(0)
    for i, c in enumerate(decomposition.coefficients):
        assert c == (RatFunc(expected[i]) if i in expected else 0)


@settings(max_examples=100, derandomize=True)
@given(ore_elements(ORE, max_terms=4, max_skew=2, max_central=3))
def test_decomposition_in_an_ore_ring_along_the_central_variable(a):
    t = OreElement.central(ORE, 't')
    j = JetHom(OreAlgebra(ORE), 4, {'t': [t, OreElement.one(ORE)]})
    decomposition = slice_decompose(a, j, t)
    assert reconstruct(decomposition) == a
    assert all(c.passed for c in decomposition.kernel_certificates)
    for c in decomposition.coefficients:
        assert c.is_zero or c.central_degree('t') == 0
    if not a.is_zero:
        assert decomposition.degree == a.central_degree('t')
