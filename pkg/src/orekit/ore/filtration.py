import logging
from typing import Dict, Hashable, List

from ..arith.linalg import EchelonBasis
from ..arith.multipoly import MultiPoly
from ..arith.pth_power import PthPowerSubfield, pth_power_decompose
from ..arith.ratfunc import RatFunc
from ..errors import RingMismatchError
from .element import OreElement, ore_mul
from .ring import OreRingDescriptor

logger = logging.getLogger(__name__)


def _coordinates(a: OreElement) -> Dict[Hashable, RatFunc]:
    """Coordinates over k: (skew degree, central exponents, basis monomial) -> coefficient in k."""
    vector: Dict[Hashable, RatFunc] = {}
    for (m, e), c in a.terms.items():
        for monomial, coeff in pth_power_decompose(c).items():
            vector[(m, e, monomial.powers)] = coeff
    return vector


def filtration_dims(ring: OreRingDescriptor, subfield: PthPowerSubfield, n_max: int) -> List[int]:
    """
    Growth profile of the ring over the subfield k of p-th powers.

    F_n is the k-span of all products of basis elements of K over k with at
    most n factors equal to the skew variable; F_n = F_(n-1) + F_(n-1)*x*K,
    and only the vectors that enlarged F_(n-1) need to be multiplied again.

    Args:
        ring: An Ore ring over a field of characteristic p
        subfield: The p-th-power subfield of ring.coefficients
        n_max: Last filtration index

    Returns:
        [dim_k F_0, ..., dim_k F_n_max]
    """
    if subfield.field != ring.coefficients:
        raise RingMismatchError(f'{subfield} is not the p-th-power subfield of {ring.coefficients}')
    if n_max < 0:
        raise ValueError('n_max must be nonnegative')

    basis_elements = [OreElement.scalar(ring, MultiPoly.monomial(ring.coefficients, m)) for m in subfield.basis()]
    skew = OreElement.skew(ring)

    span = EchelonBasis()
    layer = []
    for b in basis_elements:
        if span.insert(_coordinates(b)):
            layer.append(b)
    dims = [span.rank]
    logger.debug('filtration F_0: dim %d', span.rank)

    for n in range(1, n_max + 1):
        next_layer = []
        for g in layer:
            gx = ore_mul(g, skew)
            for b in basis_elements:
                product = ore_mul(gx, b)
                if span.insert(_coordinates(product)):
                    next_layer.append(product)
        layer = next_layer
        dims.append(span.rank)
        logger.debug('filtration F_%d: dim %d', n, span.rank)
    return dims