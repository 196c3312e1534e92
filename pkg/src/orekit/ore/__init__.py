from .centrality import is_central
from .element import OreElement, commutator, ore_mul, skew_ladder
from .filtration import filtration_dims
from .hom import RingHomSpec, hom_apply, hom_check, kernel_probe, ring_hom, surjectivity_witnesses
from .ring import OreRingDescriptor

__all__ = [
    'is_central',
    'OreElement',
    'commutator',
    'ore_mul',
    'skew_ladder',
    'filtration_dims',
    'RingHomSpec',
    'hom_apply',
    'hom_check',
    'kernel_probe',
    'ring_hom',
    'surjectivity_witnesses',
    'OreRingDescriptor',
]
