from .field import FieldDescriptor, Scalar, is_prime
from .gcd import poly_gcd
from .linalg import EchelonBasis, adjugate, determinant
from .lucas import base_p_digits, binomial_in_field, lucas_binom
from .monomial import Monomial
from .multipoly import UNDEFINED_DEGREE, MultiPoly, poly_arith
from .pth_power import PthPowerSubfield, frobenius, pth_power_decompose, pth_root
from .ratfunc import RatFunc, ratfunc_eq

__all__ = [
    'FieldDescriptor',
    'Scalar',
    'is_prime',
    'poly_gcd',
    'EchelonBasis',
    'adjugate',
    'determinant',
    'base_p_digits',
    'binomial_in_field',
    'lucas_binom',
    'Monomial',
    'UNDEFINED_DEGREE',
    'MultiPoly',
    'poly_arith',
    'PthPowerSubfield',
    'frobenius',
    'pth_power_decompose',
    'pth_root',
    'RatFunc',
    'ratfunc_eq',
]
