from .algebra import FieldAlgebra, OreAlgebra
from .constructions import canonical_from_derivation, divided_power_delta, divided_power_jet, extend_to_polynomial
from .iterative import IterativeHSSpec, iterative_from_components
from .jet import HSFamily, JetHom, hs_axiom_check, iterativity_check, jet_extend, kernel_membership
from .series import TruncatedSeries
from .specialize import specialize_at_central

__all__ = [
    'FieldAlgebra',
    'OreAlgebra',
    'canonical_from_derivation',
    'divided_power_delta',
    'divided_power_jet',
    'extend_to_polynomial',
    'IterativeHSSpec',
    'iterative_from_components',
    'HSFamily',
    'JetHom',
    'hs_axiom_check',
    'iterativity_check',
    'jet_extend',
    'kernel_membership',
    'TruncatedSeries',
    'specialize_at_central',
]
