from typing import Optional, Sequence

from ..certificate import Certificate, failed, passed
from .element import OreElement, commutator


def is_central(a: OreElement, witnesses: Optional[Sequence[str]] = None, label: Optional[str] = None) -> Certificate:
    """
    Certify that `a` commutes with a generating set.

    The default generating set is every coefficient variable, the skew
    variable and every central variable; commuting with generators implies
    commuting with the whole ring.

    Args:
        a: The element to test
        witnesses: Generator names to test against (defaults to all generators)
        label: Name of the certificate

    Returns:
        A pass certificate, or a failure naming the first generator g with
        [a, g] != 0 together with that commutator
    """
    ring = a.ring
    name = label or f'central({a})'
    names = list(witnesses) if witnesses is not None else [n for _, n in ring.generators()]
    for generator in names:
        g = OreElement.generator(ring, generator)
        bracket = commutator(a, g)
        if not bracket.is_zero:
            return failed(name, f'[{a}, {generator}] = {bracket}', generator=generator, commutator=bracket)
    return passed(name, None, generators=names)
