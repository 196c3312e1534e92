from .checks import (
    ansatz_obstruction,
    pth_root_rigidity,
    surjectivity_claims,
    verify_centrality,
    verify_delta_periodicity,
    verify_filtration,
    verify_kernel_probe,
    verify_not_isomorphic,
    verify_phi,
)
from .instance import CounterexampleInstance, build_instance, cyclic_shift
from .pipeline import planned_checks, run_all

__all__ = [
    'ansatz_obstruction',
    'pth_root_rigidity',
    'surjectivity_claims',
    'verify_centrality',
    'verify_delta_periodicity',
    'verify_filtration',
    'verify_kernel_probe',
    'verify_not_isomorphic',
    'verify_phi',
    'CounterexampleInstance',
    'build_instance',
    'cyclic_shift',
    'planned_checks',
    'run_all',
]
