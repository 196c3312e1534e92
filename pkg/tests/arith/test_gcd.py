from hypothesis import given, settings

from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.gcd import monic, poly_gcd
from src.orekit.arith.multipoly import MultiPoly
from tests.strategies import fields, nonzero_polys

QQ = FieldDescriptor(0, ('x1', 'x2', 'x3'))


def var(name):
    return MultiPoly.variable(QQ, name)


def test_common_factor():
    x1, x2, x3 = var('x1'), var('x2'), var('x3')
    g = poly_gcd((x1 + x2) * (x1 - x3), (x1 + x2) * (x2 + 1))
    assert g == x1 + x2


def test_monomial_content_is_kept():
    x1, x2 = var('x1'), var('x2')
    assert poly_gcd(x1 ** 2 * x2, x1 * x2 ** 3) == x1 * x2


def test_degenerate_inputs():
    zero = MultiPoly.zero(QQ)
    x1 = var('x1')
    assert poly_gcd(zero, zero).is_zero
    assert poly_gcd(zero, x1 * 3) == x1
    assert poly_gcd(MultiPoly.constant(QQ, 5), x1) == 1


def test_coprime_polynomials():
    x1, x2 = var('x1'), var('x2')
    assert poly_gcd(x1 + 1, x2 + 1) == 1


@settings(max_examples=100, derandomize=True)
@given(fields().flatmap(lambda f: nonzero_polys(f).flatmap(
    lambda a: nonzero_polys(f).flatmap(
        lambda b: nonzero_polys(f).map(lambda c: (a, b, c))))))
def test_gcd_is_a_common_multiple_of_the_shared_factor(data):
    a, b, c = data
    g = poly_gcd(a * b, a * c)
    assert (a * b).divmod(g)[1].is_zero
    assert (a * c).divmod(g)[1].is_zero
    assert g.divmod(monic(a))[1].is_zero
