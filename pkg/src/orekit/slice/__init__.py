from .decompose import (
    FoundSlice,
    SliceDecomposition,
    check_slice_condition,
    find_slice,
    independence_check,
    reconstruct,
    slice_decompose,
)
from .nu import NuReductionChain, NuReductionStep, nonzero_digit_count, nu, nu_divisibility, nu_reduce
from .vandermonde import VandermondeCertificate, vandermonde_certify

__all__ = [
    'FoundSlice',
    'SliceDecomposition',
    'check_slice_condition',
    'find_slice',
    'independence_check',
    'reconstruct',
    'slice_decompose',
    'NuReductionChain',
    'NuReductionStep',
    'nonzero_digit_count',
    'nu',
    'nu_divisibility',
    'nu_reduce',
    'VandermondeCertificate',
    'vandermonde_certify',
]
