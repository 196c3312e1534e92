"""
Zero certificates for polynomials with coefficients in a commutative domain:
a polynomial of degree <= d vanishing at d+1 distinct points is zero, because
adj(M) M = det(M) I for the Vandermonde matrix M and det(M) != 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from ..arith.field import FieldDescriptor
from ..arith.linalg import adjugate, determinant, mat_mul, mat_vec
from ..arith.multipoly import MultiPoly
from ..arith.ratfunc import RatFunc
from ..certificate import Certificate
from ..errors import InsufficientPointsError


@dataclass(frozen=True)
class VandermondeCertificate(Certificate):
    all_zero: bool = False
    point: Any = None
    value: Any = None
    determinant: Any = None


def _coefficient_field(values: Sequence[Any]) -> Optional[FieldDescriptor]:
    for value in values:
        if isinstance(value, (MultiPoly, RatFunc)):
            return value.field
    return None


def _lift(value: Any, field: Optional[FieldDescriptor]) -> Any:
    """Rationals become Fractions; with a polynomial in play everything moves to the fraction field."""
    if isinstance(value, MultiPoly):
        return RatFunc(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc.constant(field, value) if field is not None else Fraction(value)
    return value


def evaluate(coeffs: Sequence[Any], z: Any) -> Any:
    """a_0 + a_1 z + ... + a_d z^d by Horner's rule."""
    total = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        total = total * z + c
    return total


def vandermonde_matrix(points: Sequence[Any], degree: int) -> List[List[Any]]:
    """Row j is [1, z_j, z_j^2, ..., z_j^degree]."""
    rows = []
    for z in points:
        row = [z * 0 + 1]
        for _ in range(degree):
            row.append(row[-1] * z)
        rows.append(row)
    return rows


def vandermonde_product(points: Sequence[Any]) -> Any:
    """prod_(i<j) (z_j - z_i)."""
    result = points[0] * 0 + 1
    for j in range(len(points)):
        for i in range(j):
            result = result * (points[j] - points[i])
    return result


def vandermonde_certify(coeffs: Sequence[Any], points: Sequence[Any], name: Optional[str] = None) -> VandermondeCertificate:
    """
    Decide whether a_0 + a_1 z + ... + a_d z^d is the zero polynomial from its
    values at d+1 distinct points.

    Args:
        coeffs: a_0..a_d in a commutative domain
        points: at least d+1 pairwise distinct points

    Returns:
        pass with `all_zero` when every value vanishes (then every a_i = 0 by
        the adjugate identity); fail with the first point of nonzero value otherwise

    Raises:
        InsufficientPointsError: fewer than d+1 points
        ValueError: repeated points
    """
    field = _coefficient_field([*coeffs, *points])
    coeffs = [_lift(c, field) for c in coeffs]
    points = [_lift(z, field) for z in points]
    d = len(coeffs) - 1
    name = name or 'vandermonde'
    if d < 0:
        raise ValueError('no coefficients given')
    if len(points) < d + 1:
        raise InsufficientPointsError(f'need d+1 distinct central elements: degree {d} needs {d + 1} points, got {len(points)}')
    for j, z in enumerate(points):
        if any(z == w for w in points[:j]):
            raise ValueError(f'point {z} is repeated')

    used = points[: d + 1]
    matrix = vandermonde_matrix(used, d)
    det = determinant(matrix)
    if det != vandermonde_product(used):
        return VandermondeCertificate(name, 'fail', f'determinant {det} disagrees with the product formula', determinant=det)

    values = [evaluate(coeffs, z) for z in points]
    for z, v in zip(points, values):
        if v != 0:
            return VandermondeCertificate(name, 'fail', f'p({z}) = {v}', point=z, value=v, determinant=det)

    adj = adjugate(matrix)
    product = mat_mul(adj, matrix)
    for i in range(d + 1):
        for k in range(d + 1):
            expected = det if i == k else det * 0
            if product[i][k] != expected:
                return VandermondeCertificate(name, 'fail', f'adj(M) M differs from det(M) I at ({i}, {k})', determinant=det)
    # adj(M) (M a) = det(M) a and M a is the vector of values
    scaled = mat_vec(adj, values[: d + 1])
    if any(s != 0 for s in scaled) or any(c != 0 for c in coeffs):
        return VandermondeCertificate(name, 'fail', 'det(M) a != 0 although every value vanishes', determinant=det)
    return VandermondeCertificate(
        name, 'pass', f'all {len(points)} values vanish and det(M) = {det} != 0', all_zero=True, determinant=det
    )
