"""
Specialization of a family on A[x1..xm] at central points of A.

Evaluating the extra variables at central z after applying G gives a
homomorphism A -> A[t]; its coefficients form a new family mu with mu_0 = id.
"""

from typing import Any, Dict, Mapping, Optional

from ..arith.ratfunc import RatFunc
from ..errors import JetError
from ..ore.centrality import is_central
from ..ore.element import OreElement
from .algebra import FieldAlgebra, OreAlgebra
from .jet import JetHom


def _specialize_ratfunc(value: RatFunc, images: Dict[int, RatFunc], target) -> RatFunc:
    def scalar(c):
        return RatFunc.constant(target, c)

    num = value.numerator.evaluate(images, scalar)
    if value.denominator.is_constant:
        return num
    return num / value.denominator.evaluate(images, scalar)


def _specialize_ore(value: OreElement, reduced, removed: Dict[int, OreElement], kept: Dict[int, int]) -> OreElement:
    total = OreElement.zero(reduced)
    for (m, e), c in value.terms.items():
        exponents = [0] * reduced.ncentral
        factor = OreElement.one(reduced)
        for i, k in enumerate(e):
            if not k:
                continue
            if i in kept:
                exponents[kept[i]] = k
            else:
                factor = factor * removed[i] ** k
        base = OreElement(reduced, {(m, tuple(exponents)): c})
        total = total + base * factor
    return total


def specialize_at_central(j: JetHom, values: Mapping[str, Any], name: Optional[str] = None) -> JetHom:
    """
    mu_i(a) = coefficient of t^i in G(a) with the variables in `values` set to their values.

    Args:
        j: A family on A[x-vars] fixing every x-var
        values: x-var name -> central element of A

    Returns:
        The specialized family on A

    Raises:
        JetError: j moves an x-var, or a value is not central
    """
    algebra = j.algebra
    for var in values:
        if not j.is_trivial_on(var):
            raise JetError(f'{j.name} does not fix {var}, so it cannot be specialized there')

    if isinstance(algebra, FieldAlgebra):
        field = algebra.field
        kept_names = [v for v in field.variables if v not in values]
        target = field.with_variables(kept_names)
        reduced_algebra = FieldAlgebra(target, algebra.polynomial)
        images: Dict[int, RatFunc] = {}
        for i, v in enumerate(field.variables):
            if v in values:
                images[i] = reduced_algebra.coerce(values[v])
            else:
                images[i] = RatFunc.variable(target, v)

        def specialize(value):
            return _specialize_ratfunc(value, images, target)
    else:
        ring = algebra.ring
        reduced = ring.without_central(list(values))
        reduced_algebra = OreAlgebra(reduced)
        removed: Dict[int, OreElement] = {}
        for v, z in values.items():
            z = reduced_algebra.coerce(z)
            certificate = is_central(z)
            if certificate.failed:
                raise JetError(f'specialization point {v} = {z} is not central: {certificate.witness}')
            removed[ring.central_index(v)] = z
        kept = {ring.central_index(t): reduced.central_index(t) for t in reduced.central_vars}

        def specialize(value):
            return _specialize_ore(value, reduced, removed, kept)

    jets = {}
    for gen in reduced_algebra.generators():
        series = j.series[gen]
        if not series.is_constant:
            jets[gen] = [specialize(c) for c in series.coefficients]
    return JetHom(reduced_algebra, j.truncation, jets, name=name or f'{j.name}|{",".join(values)}')
