"""
The subfield of p-th powers.

Over F_p(x1..xn) every element is uniquely a combination of the monomials
with all exponents below p, with coefficients in k = F_p(x1^p..xn^p).
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, List

from .field import FieldDescriptor
from .monomial import Monomial
from .multipoly import MultiPoly
from .ratfunc import RatFunc


def _require_positive_characteristic(field: FieldDescriptor) -> int:
    p = field.characteristic
    if not p:
        raise ValueError('p-th powers need positive characteristic')
    return p


def pth_power_decompose(f: RatFunc) -> Dict[Monomial, RatFunc]:
    """
    Coordinates of f over the p-th-power subfield.

    Writes f = u*v^(p-1) / v^p, so the denominator lies in k, and splits the
    numerator by exponent residues mod p.

    Args:
        f: rational function over F_p(x1..xn)

    Returns:
        basis monomial (exponents < p) -> coefficient in k; zero coefficients omitted
    """
    field = f.field
    p = _require_positive_characteristic(field)
    if f.is_zero:
        return {}
    u, v = f.numerator, f.denominator
    numerator = u * v ** (p - 1) if not v.is_constant else u
    denominator = v.frobenius() if not v.is_constant else v

    buckets: Dict[Monomial, Dict[Monomial, int]] = {}
    for m, c in numerator.terms.items():
        residue, _ = m.split_pth_power(p)
        buckets.setdefault(residue, {})[m / residue] = c
    return {
        residue: RatFunc(MultiPoly(field, terms), denominator)
        for residue, terms in sorted(buckets.items(), key=lambda item: item[0].sort_key())
    }


def recompose(coordinates: Dict[Monomial, RatFunc], field: FieldDescriptor) -> RatFunc:
    total = RatFunc.zero(field)
    for m, c in coordinates.items():
        total = total + c * MultiPoly.monomial(field, m)
    return total


def frobenius(f: RatFunc) -> RatFunc:
    """f -> f^p."""
    _require_positive_characteristic(f.field)
    return f.frobenius()


def pth_root(f: RatFunc) -> RatFunc:
    """
    The unique p-th root of f in K.

    Raises:
        ValueError: f does not lie in the p-th-power subfield
    """
    p = _require_positive_characteristic(f.field)
    coordinates = pth_power_decompose(f)
    if not coordinates:
        return f
    if set(coordinates) != {Monomial.one()}:
        raise ValueError(f'{f} is not a p-th power')
    c = coordinates[Monomial.one()]
    # numerator terms are p-th powers and the denominator is v^p
    root_num = {Monomial(tuple((i, e // p) for i, e in m.powers)): a for m, a in c.numerator.terms.items()}
    root_den = {Monomial(tuple((i, e // p) for i, e in m.powers)): a for m, a in c.denominator.terms.items()}
    return RatFunc(MultiPoly(f.field, root_num), MultiPoly(f.field, root_den))


@dataclass(frozen=True)
class PthPowerSubfield:
    """The subfield k of p-th powers of a rational function field K."""
    field: FieldDescriptor

    def __post_init__(self) -> None:
        _require_positive_characteristic(self.field)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def degree(self) -> int:
        """[K : k] = p^n."""
        return self.characteristic ** self.field.nvars

    def basis(self) -> List[Monomial]:
        """Monomials with every exponent below p, in increasing graded-lex order."""
        p = self.characteristic
        monomials = [Monomial.from_exponents(e) for e in product(range(p), repeat=self.field.nvars)]
        return sorted(monomials, key=Monomial.sort_key)

    def decompose(self, f: RatFunc) -> Dict[Monomial, RatFunc]:
        return pth_power_decompose(f)

    def contains(self, f: RatFunc) -> bool:
        return set(pth_power_decompose(f)) <= {Monomial.one()}

    def __str__(self) -> str:
        p = self.characteristic
        inner = ', '.join(f'{name}^{p}' for name in self.field.variables)
        return f'F{p}({inner})' if inner else f'F{p}'
