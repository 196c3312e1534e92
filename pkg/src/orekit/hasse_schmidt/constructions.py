"""
Standard Hasse-Schmidt families: divided powers, the canonical family of a
derivation in characteristic zero, and extension to new polynomial variables.
"""

from math import factorial
from typing import Optional, Sequence, Union

from ..arith.field import FieldDescriptor
from ..arith.lucas import binomial_in_field
from ..arith.monomial import Monomial
from ..arith.multipoly import MultiPoly
from ..arith.ratfunc import RatFunc
from ..config import default_truncation
from ..errors import JetError
from ..maps.derivation import DerivationSpec, apply_derivation
from ..ore.element import OreElement
from ..ore.ring import OreRingDescriptor
from .algebra import Algebra, FieldAlgebra, OreAlgebra
from .jet import JetHom


def divided_power_delta(field: FieldDescriptor, var: Union[int, str], n: int, monomial: Monomial) -> MultiPoly:
    """
    Delta_i^n(t^m) = C(m_i, n) t1^m1 ... ti^(m_i - n) ... td^md, or 0 when m_i < n.

    Args:
        field: The polynomial ring's field descriptor
        var: Index or name of t_i
        n: Order of the operator
        monomial: The monomial t^m
    """
    index = field.index(var) if isinstance(var, str) else var
    exponent = monomial.exponent(index)
    if n < 0:
        raise ValueError('negative order')
    if exponent < n:
        return MultiPoly.zero(field)
    coeff = binomial_in_field(field, exponent, n)
    return MultiPoly.monomial(field, monomial / Monomial.variable(index, n), coeff)


def divided_power_jet(
    algebra: Algebra,
    variables: Union[str, Sequence[str]],
    truncation: Optional[int] = None,
    name: Optional[str] = None,
) -> JetHom:
    """
    The jet G(u) = u + t for each listed generator u, identity elsewhere.

    With one variable its components are the divided powers Delta_u^n.
    """
    if isinstance(variables, str):
        variables = [variables]
    truncation = truncation or default_truncation(algebra.characteristic)
    jets = {v: [algebra.generator(v), algebra.one()] for v in variables}
    return JetHom(algebra, truncation, jets, name=name or f"Delta[{','.join(variables)}]")


def canonical_from_derivation(
    d: DerivationSpec,
    truncation: int,
    polynomial: bool = False,
    name: Optional[str] = None,
) -> JetHom:
    """
    The family d_n = delta^n / n!.

    Args:
        d: A derivation of a rational function field
        truncation: N; in characteristic p it must stay below p so that n! is invertible
        polynomial: Act on the polynomial ring instead of the fraction field

    Raises:
        JetError: n! is not invertible for some n <= N
    """
    field = d.field
    p = field.characteristic
    if p and truncation >= p:
        raise JetError(f'delta^n/n! is undefined in characteristic {p} for n >= {p}; truncation {truncation} is too large')
    algebra = FieldAlgebra(field, polynomial)
    jets = {}
    for i, var in enumerate(field.variables):
        values = [algebra.generator(var)]
        current = values[0]
        for n in range(1, truncation + 1):
            current = apply_derivation(d, current)
            values.append(current * field.inv(field.coerce(factorial(n))))
        jets[var] = values
    return JetHom(algebra, truncation, jets, name=name or f'exp({d.name})')


def extend_to_polynomial(j: JetHom, new_vars: Sequence[str], name: Optional[str] = None) -> JetHom:
    """
    Extend a family on A to A[new_vars] with every new variable in the kernel.

    Over a field algebra the variables are appended to the field descriptor;
    over an Ore ring they become additional central variables.
    """
    algebra = j.algebra
    if isinstance(algebra, FieldAlgebra):
        old = algebra.field
        field = old.with_variables([*old.variables, *new_vars])
        extended: Algebra = FieldAlgebra(field, algebra.polynomial)
        mapping = {i: i for i in range(old.nvars)}

        def lift(value):
            return RatFunc(value.numerator.remap(field, mapping), value.denominator.remap(field, mapping))
    else:
        ring = algebra.ring
        new_ring = OreRingDescriptor(
            ring.coefficients, ring.skew_var, ring.sigma, ring.delta, (*ring.central_vars, *new_vars), ring.name
        )
        extended = OreAlgebra(new_ring)
        padding = (0,) * len(new_vars)

        def lift(value):
            return OreElement(new_ring, {(m, e + padding): c for (m, e), c in value.terms.items()})

    jets = {}
    for gen in algebra.generators():
        series = j.series[gen]
        if not series.is_constant:
            jets[gen] = [lift(c) for c in series.coefficients]
    return JetHom(extended, j.truncation, jets, name=name or f'{j.name}[{",".join(new_vars)}]')
