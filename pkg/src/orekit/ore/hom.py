"""
Ring homomorphisms between Ore rings, given on generators.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..arith.linalg import EchelonBasis
from ..arith.ratfunc import RatFunc
from ..certificate import Certificate, combine, failed, passed
from ..errors import RingMismatchError, UnmappedGeneratorError, WitnessError
from ..maps.derivation import apply_derivation
from .centrality import is_central
from .element import OreElement, commutator
from .ring import OreRingDescriptor

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RingHomSpec:
    """
    h: source -> target.

    `coeff_images[i]` is the image of the i-th coefficient variable;
    `var_images` holds the images of the skew variable and of each central
    variable of the source.
    """
    source: OreRingDescriptor
    target: OreRingDescriptor
    coeff_images: Tuple[OreElement, ...]
    var_images: Mapping[str, OreElement]
    name: str = 'h'

    def __post_init__(self) -> None:
        if len(self.coeff_images) != self.source.coefficients.nvars:
            raise UnmappedGeneratorError(f'{self.name}: every coefficient variable of {self.source.name} needs an image')
        for var in (self.source.skew_var, *self.source.central_vars):
            if var not in self.var_images:
                raise UnmappedGeneratorError(f'{self.name}: no image for generator {var}')
        for image in (*self.coeff_images, *self.var_images.values()):
            if image.ring is not self.target:
                raise RingMismatchError(f'{self.name}: image {image} does not lie in {self.target.name}')

    @property
    def fixes_coefficients(self) -> bool:
        """h restricted to K is the identity of K."""
        if self.source.coefficients != self.target.coefficients:
            return False
        return all(
            img.is_scalar and img.scalar_value() == RatFunc.variable(self.target.coefficients, i)
            for i, img in enumerate(self.coeff_images)
        )

    def image_of(self, name: str) -> OreElement:
        if name in self.var_images:
            return self.var_images[name]
        if self.source.coefficients.has_variable(name):
            return self.coeff_images[self.source.coefficients.index(name)]
        raise UnmappedGeneratorError(f'{self.name}: {name} is not a generator of {self.source.name}')

    def __call__(self, a: OreElement) -> OreElement:
        return hom_apply(self, a)


def ring_hom(
    source: OreRingDescriptor,
    target: OreRingDescriptor,
    var_images: Mapping[str, OreElement],
    coeff_images: Optional[Mapping[str, OreElement]] = None,
    name: str = 'h',
) -> RingHomSpec:
    """
    Build a homomorphism; coefficient variables without an explicit image go
    to the same-named coefficient variable of the target.
    """
    images = dict(coeff_images or {})
    ordered = []
    for var in source.coefficients.variables:
        if var in images:
            ordered.append(images[var])
        elif target.coefficients.has_variable(var):
            ordered.append(OreElement.generator(target, var))
        else:
            raise UnmappedGeneratorError(f'{name}: no image for coefficient variable {var}')
    return RingHomSpec(source, target, tuple(ordered), dict(var_images), name)


def _coefficient_image(h: RingHomSpec, c: RatFunc) -> OreElement:
    target = h.target
    images = dict(enumerate(h.coeff_images))

    def scalar(value):
        return OreElement.scalar(target, value)

    num = c.numerator.evaluate(images, scalar)
    if c.denominator.is_constant:
        return num
    den = c.denominator.evaluate(images, scalar)
    if not den.is_scalar or den.is_zero:
        raise RingMismatchError(f'{h.name}: cannot invert the image {den} of a denominator')
    return OreElement.scalar(target, den.scalar_value().inverse()) * num


def hom_apply(h: RingHomSpec, a: OreElement) -> OreElement:
    """
    Evaluate h on an element by substituting generator images.

    Each term c*x^m*t^e maps to h(c)*h(x)^m*h(t1)^e1*..., multiplied left to
    right in the target.

    Raises:
        RingMismatchError: `a` is not in the source ring
    """
    if a.ring is not h.source:
        raise RingMismatchError(f'{h.name}: {a} is not in {h.source.name}')
    target = h.target
    fixed = h.fixes_coefficients
    skew_image = h.var_images[h.source.skew_var]
    central_images = [h.var_images[t] for t in h.source.central_vars]

    skew_powers: Dict[int, OreElement] = {}
    central_powers: Dict[Tuple[int, int], OreElement] = {}
    total = OreElement.zero(target)
    for (m, e), c in a.sorted_terms():
        if m not in skew_powers:
            skew_powers[m] = skew_image ** m
        monomial = skew_powers[m]
        for i, k in enumerate(e):
            if not k:
                continue
            if (i, k) not in central_powers:
                central_powers[(i, k)] = central_images[i] ** k
            monomial = monomial * central_powers[(i, k)]
        if fixed:
            total = total + monomial.left_scale(c)
        else:
            total = total + _coefficient_image(h, c) * monomial
    return total


def hom_check(h: RingHomSpec) -> Certificate:
    """
    Certify that the generator images define a homomorphism.

    For a source K[x; delta][t...] it suffices that
    [h(x), h(a)] = h(delta(a)) for every coefficient generator a, that the
    images of K commute with each other, and that every h(t) is central.

    Returns:
        A combined certificate whose first failure names the violated relation
    """
    source = h.source
    if not source.is_differential:
        raise ValueError(f'{h.name}: homomorphism checks need a source with sigma = id')
    parts: List[Certificate] = []
    skew = h.var_images[source.skew_var]
    x = source.skew_var

    for i, var in enumerate(source.coefficients.variables):
        label = f'[{h.name}({x}), {h.name}({var})] = {h.name}(delta({var}))'
        lhs = commutator(skew, h.coeff_images[i])
        if source.delta is not None:
            delta_value = apply_derivation(source.delta, RatFunc.variable(source.coefficients, i))
        else:
            delta_value = RatFunc.zero(source.coefficients)
        rhs = hom_apply(h, OreElement.scalar(source, delta_value))
        if lhs != rhs:
            parts.append(failed(label, f'[{h.name}({x}), {h.name}({var})] = {lhs} but {h.name}(delta({var})) = {rhs}', generator=var))
            break
        parts.append(passed(label))

    if not h.fixes_coefficients:
        images = list(zip(source.coefficients.variables, h.coeff_images))
        for i, (u, hu) in enumerate(images):
            for v, hv in images[i + 1:]:
                bracket = commutator(hu, hv)
                if not bracket.is_zero:
                    parts.append(failed('coefficient images commute', f'[{h.name}({u}), {h.name}({v})] = {bracket}'))
                    return combine(f'homomorphism({h.name})', parts)

    for t in source.central_vars:
        cert = is_central(h.var_images[t], label=f'{h.name}({t}) central')
        parts.append(cert)

    result = combine(f'homomorphism({h.name})', parts)
    logger.info('hom_check %s: %s', h.name, result.status)
    return result


def surjectivity_witnesses(
    h: RingHomSpec,
    claims: Sequence[Tuple[str, OreElement, OreElement]],
) -> Dict[str, OreElement]:
    """
    Verify proposed preimages.

    Args:
        h: The homomorphism
        claims: (label, target element, proposed preimage) triples, checked in order

    Returns:
        label -> verified preimage

    Raises:
        WitnessError: some h(preimage) differs from its target
    """
    verified: Dict[str, OreElement] = {}
    for label, target, preimage in claims:
        image = hom_apply(h, preimage)
        if image != target:
            raise WitnessError(f'{h.name}({preimage}) = {image}, not {label} = {target}')
        verified[label] = preimage
        logger.debug('witness for %s verified', label)
    return verified


def kernel_probe(h: RingHomSpec, max_skew: int = 2, max_central: int = 1) -> Certificate:
    """
    Check that no nonzero element of the left K-span of
    {x^m t^e : m <= max_skew, each e_i <= max_central} maps to zero.

    Only meaningful when h fixes K, so that h is left K-linear.
    """
    if not h.fixes_coefficients:
        raise ValueError(f'{h.name}: the kernel probe needs a homomorphism fixing the coefficients')
    source = h.source
    name = f'kernel probe({h.name}, {source.skew_var}-degree <= {max_skew})'
    basis = EchelonBasis()
    monomials = []
    for m in range(max_skew + 1):
        for e in product(range(max_central + 1), repeat=source.ncentral):
            element = OreElement(source, {(m, tuple(e)): RatFunc.one(source.coefficients)})
            image = hom_apply(h, element)
            monomials.append(element)
            if not basis.insert(dict(image.terms)):
                return failed(name, f'{h.name}({element}) is K-dependent on the earlier images', element=element)
    return passed(name, f'{len(monomials)} monomials have K-independent images', rank=basis.rank)
