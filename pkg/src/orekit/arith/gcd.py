"""
Multivariate polynomial GCD by recursive primitive remainder sequences.

Only used to shrink large fractions; equality of rational functions never
depends on it.
"""

import logging
from typing import Dict, Iterable

from .monomial import Monomial
from .multipoly import MultiPoly

logger = logging.getLogger(__name__)


def monic(f: MultiPoly) -> MultiPoly:
    """Scale so the graded-lex leading coefficient is 1 (zero stays zero)."""
    if f.is_zero:
        return f
    return f.scale(f.field.inv(f.leading_coefficient()))


def _main_variable(a: MultiPoly, b: MultiPoly) -> int:
    used = set(a.variables_used()) | set(b.variables_used())
    return min(used)


def _coefficients(f: MultiPoly, v: int) -> Dict[int, MultiPoly]:
    return f.coefficients_in(v)


def content_in(f: MultiPoly, v: int) -> MultiPoly:
    """GCD of the coefficients of f viewed as a polynomial in variable v."""
    return _gcd_many(_coefficients(f, v).values(), f)


def _gcd_many(polys: Iterable[MultiPoly], like: MultiPoly) -> MultiPoly:
    result = MultiPoly.zero(like.field)
    for g in polys:
        result = poly_gcd(result, g)
        if result.is_constant and not result.is_zero:
            break
    return result


def primitive_part(f: MultiPoly, v: int) -> MultiPoly:
    if f.is_zero:
        return f
    content = content_in(f, v)
    return f.exact_divide(content)


def pseudo_remainder(f: MultiPoly, g: MultiPoly, v: int) -> MultiPoly:
    """prem_v(f, g): lc(g)^k * f reduced modulo g as polynomials in v."""
    deg_g = g.degree_in(v)
    lead_g = _coefficients(g, v)[deg_g]
    r = f
    while not r.is_zero and r.degree_in(v) >= deg_g:
        deg_r = r.degree_in(v)
        lead_r = _coefficients(r, v)[deg_r]
        r = lead_g * r - (lead_r * g).shift(Monomial.variable(v, deg_r - deg_g))
    return r


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """
    Greatest common divisor, normalized to leading coefficient 1.

    Args:
        a: polynomial
        b: polynomial over the same field

    Returns:
        gcd(a, b); gcd(0, 0) = 0
    """
    a.field.require_same(b.field)
    if a.is_zero:
        return monic(b)
    if b.is_zero:
        return monic(a)
    if a.is_constant or b.is_constant:
        return MultiPoly.one(a.field)

    content = a.monomial_content().gcd(b.monomial_content())
    if not content.is_one:
        a = a.divide_monomial(content)
        b = b.divide_monomial(content)
        return poly_gcd(a, b).shift(content)

    v = _main_variable(a, b)
    if a.degree_in(v) == 0 or b.degree_in(v) == 0:
        # one side is free of v, so only the content in v can be shared
        free, other = (a, b) if a.degree_in(v) == 0 else (b, a)
        return monic(_gcd_many([free, *_coefficients(other, v).values()], a))

    common_content = poly_gcd(content_in(a, v), content_in(b, v))
    f, g = primitive_part(a, v), primitive_part(b, v)
    if f.degree_in(v) < g.degree_in(v):
        f, g = g, f
    while not g.is_zero and g.degree_in(v) > 0:
        r = pseudo_remainder(f, g, v)
        f, g = g, (primitive_part(r, v) if not r.is_zero else r)
    if g.is_zero:
        result = primitive_part(f, v)
    else:
        # nonzero remainder free of v: primitive parts are coprime in v
        result = MultiPoly.one(a.field)
    return monic(result * common_content)
