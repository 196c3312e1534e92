import pytest
from hypothesis import given, settings, strategies as st

from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.monomial import Monomial
from src.orekit.arith.multipoly import MultiPoly
from src.orekit.arith.ratfunc import RatFunc
from src.orekit.errors import JetError, NotPrimeError
from src.orekit.hasse_schmidt.algebra import FieldAlgebra
from src.orekit.hasse_schmidt.constructions import divided_power_delta
from src.orekit.hasse_schmidt.iterative import IterativeHSSpec, iterative_from_components
from src.orekit.hasse_schmidt.jet import hs_axiom_check, iterativity_check
from tests.strategies import polys


def shift_spec(p):
    field = FieldDescriptor(p, ('u',))
    algebra = FieldAlgebra(field, polynomial=True)
    return field, IterativeHSSpec(algebra, p, [{'u': 1}], name='D')


@pytest.mark.parametrize('p', [2, 3])
def test_components_reproduce_divided_powers(p):
    field, spec = shift_spec(p)
    for i in range(10):
        d_i = iterative_from_components(spec, i)
        for m in range(12):
            monomial = Monomial.variable(0, m)
            assert d_i(MultiPoly.monomial(field, monomial)) == divided_power_delta(field, 'u', i, monomial), (i, m)


@pytest.mark.parametrize('p', [2, 3])
def test_power_components(p):
    field, spec = shift_spec(p)
    u = RatFunc.variable(field, 'u')
    assert spec.power_component(0, u) == 1
    assert spec.power_component(1, u ** p) == 1
    assert spec.power_component(1, u).is_zero
    assert spec.power_component(2, u ** (p * p)) == 1


@pytest.mark.parametrize('p', [2, 3])
def test_assembled_jet_is_an_iterative_family(p):
    field, spec = shift_spec(p)
    jet = spec.to_jet(9)
    u = RatFunc.variable(field, 'u')
    assert jet.truncation == 9
    assert jet.series['u'].as_list()[:2] == [u, 1]
    assert all(c.is_zero for c in jet.series['u'].as_list()[2:])
    assert hs_axiom_check(jet, [(u ** 3, u + 1)]).passed
    assert iterativity_check(jet, [u ** 5]).passed


def test_genuine_pth_component():
    field = FieldDescriptor(2, ('u', 'v'))
    algebra = FieldAlgebra(field, polynomial=True)
    u, v = RatFunc.variable(field, 'u'), RatFunc.variable(field, 'v')
    spec = IterativeHSSpec(algebra, 2, [{'u': 1}, {'v': 1}])
    jet = spec.to_jet(3)
    assert jet.components(v) == [v, 0, 1, 0]
    assert jet.components(u) == [u, 1, 0, 0]
    assert hs_axiom_check(jet, [(u, v), (u * v, v ** 2)]).passed


def test_rejects_bad_parameters():
    field = FieldDescriptor(3, ('u',))
    algebra = FieldAlgebra(field)
    with pytest.raises(NotPrimeError):
        IterativeHSSpec(algebra, 4, [])
    with pytest.raises(JetError):
        IterativeHSSpec(algebra, 2, [])
    with pytest.raises(JetError):
        IterativeHSSpec(algebra, 3, [{'w': 1}])
    _, spec = shift_spec(3)
    with pytest.raises(ValueError):
        iterative_from_components(spec, -1)


def two_variable_spec(p):
    # u moves with d_1, v first moves with d_p
    algebra = FieldAlgebra(FieldDescriptor(p, ('u', 'v')), polynomial=True)
    return IterativeHSSpec(algebra, p, [{'u': 1}, {'v': 1}], name=f'D{p}')


TWO_VARIABLE_SPECS = {p: two_variable_spec(p) for p in (2, 3)}


def spec_and_polys():
    return st.sampled_from((2, 3)).flatmap(
        lambda p: st.tuples(
            st.just(TWO_VARIABLE_SPECS[p]),
            polys(TWO_VARIABLE_SPECS[p].algebra.field, max_terms=4, max_exponent=4),
            polys(TWO_VARIABLE_SPECS[p].algebra.field, max_terms=4, max_exponent=4),
        )
    )


@settings(max_examples=100, derandomize=True)
@given(spec_and_polys())
def test_two_variable_family_is_iterative_on_random_polynomials(data):
    spec, a, b = data
    jet = spec.to_jet(2 * spec.p + 1)
    assert iterativity_check(jet, [a, b]).passed
    assert hs_axiom_check(jet, [(a, b)]).passed


@settings(max_examples=100, derandomize=True)
@given(spec_and_polys())
def test_power_components_agree_with_the_assembled_jet(data):
    spec, a, _ = data
    jet = spec.to_jet(spec.p ** 2)
    for j in range(3):
        assert spec.power_component(j, a) == jet.component(spec.p ** j, a)
