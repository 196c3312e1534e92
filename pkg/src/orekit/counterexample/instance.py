"""
The non-cancellation instance in characteristic p.

K = F_p(x1, ..., x_n) with n = p^2 - 1 and the cyclic derivation
delta(x_i) = x_(i+1) (indices mod n), delta' = delta^p,
A = K[x; delta][t], B = K[x'; delta'][t'] and
Phi: A[t] -> B[t'] fixing K with Phi(x) = x'^p + t', Phi(t) = x'^(p^2) - x' + t'^p.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..arith.field import FieldDescriptor, is_prime
from ..arith.pth_power import PthPowerSubfield
from ..arith.ratfunc import RatFunc
from ..errors import NotPrimeError
from ..maps.derivation import DerivationSpec, compose_power
from ..ore.element import OreElement
from ..ore.hom import RingHomSpec, ring_hom
from ..ore.ring import OreRingDescriptor

logger = logging.getLogger(__name__)

VERIFIED_PRIMES = (2, 3)


@dataclass(frozen=True, eq=False)
class CounterexampleInstance:
    p: int
    K: FieldDescriptor
    k: PthPowerSubfield
    delta: DerivationSpec
    delta_prime: DerivationSpec
    A: OreRingDescriptor
    B: OreRingDescriptor
    phi: RingHomSpec
    z: OreElement
    z_prime: OreElement

    @property
    def nvars(self) -> int:
        return self.K.nvars

    def x(self, i: int) -> str:
        """Name of the 1-based generator x_i, read cyclically."""
        return self.K.variables[(i - 1) % self.nvars]

    def parameters(self) -> dict:
        return {
            'prime': self.p,
            'variables': self.nvars,
            'delta_prime': self.delta_prime.name,
        }


def cyclic_shift(field: FieldDescriptor, name: str = 'delta') -> DerivationSpec:
    """x_i -> x_(i+1), with the last variable sent to the first."""
    names = field.variables
    images = {v: RatFunc.variable(field, names[(i + 1) % len(names)]) for i, v in enumerate(names)}
    return DerivationSpec.from_images(field, images, name=name)


def build_instance(p: int, delta_prime_power: Optional[int] = None) -> CounterexampleInstance:
    """
    Build every object of the instance for the prime p.

    Args:
        p: The characteristic
        delta_prime_power: Build delta' as delta^m for this m instead of
            delta^p (m = 1 gives the control instance with A = B)

    Raises:
        NotPrimeError: p is not prime
    """
    if not is_prime(p):
        raise NotPrimeError(f'{p} is not prime')
    if p not in VERIFIED_PRIMES:
        logger.warning('p = %d: the instance has %d variables; only p in %s is verified routinely', p, p * p - 1, VERIFIED_PRIMES)

    K = FieldDescriptor(p, tuple(f'x{i}' for i in range(1, p * p)))
    delta = cyclic_shift(K)
    power = p if delta_prime_power is None else delta_prime_power
    delta_prime = compose_power(delta, power).as_derivation("delta'")

    A = OreRingDescriptor(K, 'x', None, delta, ('t',), 'A')
    B = OreRingDescriptor(K, "x'", None, delta_prime, ("t'",), 'B')

    x = OreElement.skew(A)
    xp = OreElement.skew(B)
    tp = OreElement.central(B, "t'")
    phi = ring_hom(
        A,
        B,
        {
            'x': xp ** p + tp,
            't': xp ** (p * p) - xp + tp ** p,
        },
        name='Phi',
    )
    z = x ** (p * p) - x
    z_prime = xp ** (p * p) - xp

    logger.info('built instance p=%d over %s', p, K)
    return CounterexampleInstance(p, K, PthPowerSubfield(K), delta, delta_prime, A, B, phi, z, z_prime)
