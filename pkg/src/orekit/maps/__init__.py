from .automorphism import (
    AutomorphismSpec,
    apply_automorphism,
    check_multiplicative,
    compose_automorphisms,
    identity_automorphism,
    inverse_check,
)
from .derivation import (
    DerivationPower,
    DerivationSpec,
    apply_derivation,
    check_kills_pth_powers,
    check_leibniz,
    compose_power,
    derivation_equal_on_generators,
)

__all__ = [
    'AutomorphismSpec',
    'apply_automorphism',
    'check_multiplicative',
    'compose_automorphisms',
    'identity_automorphism',
    'inverse_check',
    'DerivationPower',
    'DerivationSpec',
    'apply_derivation',
    'check_kills_pth_powers',
    'check_leibniz',
    'compose_power',
    'derivation_equal_on_generators',
]
