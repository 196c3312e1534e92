"""
Rational functions: fractions of `MultiPoly` over a common field descriptor.

Fractions are only cheaply reduced (common monomial factor, monic
denominator). Equality compares by cross-multiplication, so two
representations of the same function are equal even when neither is in
lowest terms.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Union

from ..config import current_settings
from ..errors import NotInvertibleError
from .field import FieldDescriptor, Scalar
from .gcd import poly_gcd
from .multipoly import MultiPoly

logger = logging.getLogger(__name__)

Operand = Union['RatFunc', MultiPoly, int, Scalar]


@dataclass(frozen=True, eq=False)
class RatFunc:
    numerator: MultiPoly
    denominator: MultiPoly = dc_field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        num = self.numerator
        den = self.denominator if self.denominator is not None else MultiPoly.one(num.field)
        num.field.require_same(den.field)
        if den.is_zero:
            raise NotInvertibleError('rational function with zero denominator')

        if num.is_zero:
            den = MultiPoly.one(num.field)
        elif not den.is_constant:
            content = num.monomial_content().gcd(den.monomial_content())
            if not content.is_one:
                num = num.divide_monomial(content)
                den = den.divide_monomial(content)
            threshold = current_settings().gcd_threshold
            if len(num) + len(den) > threshold and not den.is_constant:
                logger.debug('gcd pass on a fraction with %d + %d terms', len(num), len(den))
                g = poly_gcd(num, den)
                if not g.is_constant:
                    num = num.exact_divide(g)
                    den = den.exact_divide(g)

        lead = den.leading_coefficient()
        if lead != 1:
            scale = num.field.inv(lead)
            num = num.scale(scale)
            den = den.scale(scale)

        object.__setattr__(self, 'numerator', num)
        object.__setattr__(self, 'denominator', den)

    # CONSTRUCTORS

    @classmethod
    def zero(cls, field: FieldDescriptor) -> 'RatFunc':
        return cls(MultiPoly.zero(field))

    @classmethod
    def one(cls, field: FieldDescriptor) -> 'RatFunc':
        return cls(MultiPoly.one(field))

    @classmethod
    def constant(cls, field: FieldDescriptor, value: Scalar) -> 'RatFunc':
        return cls(MultiPoly.constant(field, value))

    @classmethod
    def variable(cls, field: FieldDescriptor, name: Union[str, int], exponent: int = 1) -> 'RatFunc':
        return cls(MultiPoly.variable(field, name, exponent))

    # QUERIES

    @property
    def field(self) -> FieldDescriptor:
        return self.numerator.field

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.denominator.is_constant

    @property
    def is_constant(self) -> bool:
        return self.numerator.is_constant and self.denominator.is_constant

    def as_polynomial(self) -> MultiPoly:
        """The polynomial this fraction equals; ValueError if the denominator is not constant."""
        if not self.denominator.is_constant:
            raise ValueError(f'{self} is not a polynomial')
        # denominators are monic, so a constant denominator is 1
        return self.numerator

    def constant_value(self) -> Scalar:
        if not self.is_constant:
            raise ValueError(f'{self} is not constant')
        return self.numerator.constant_value

    # EQUALITY

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return ratfunc_eq(self, other)
        if isinstance(other, (MultiPoly, int)) or hasattr(other, 'denominator'):
            return ratfunc_eq(self, self._lift(other))  # type: ignore[arg-type]
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # ARITHMETIC

    def _lift(self, other: Operand) -> 'RatFunc':
        if isinstance(other, RatFunc):
            self.field.require_same(other.field)
            return other
        if isinstance(other, MultiPoly):
            self.field.require_same(other.field)
            return RatFunc(other)
        return RatFunc.constant(self.field, other)

    def __add__(self, other: Operand) -> 'RatFunc':
        other = self._lift(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.denominator == other.denominator:
            return RatFunc(self.numerator + other.numerator, self.denominator)
        return RatFunc(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> 'RatFunc':
        return RatFunc(-self.numerator, self.denominator)

    def __sub__(self, other: Operand) -> 'RatFunc':
        return self + (-self._lift(other))

    def __rsub__(self, other: Operand) -> 'RatFunc':
        return self._lift(other) - self

    def __mul__(self, other: Operand) -> 'RatFunc':
        other = self._lift(other)
        if self.is_zero or other.is_zero:
            return RatFunc.zero(self.field)
        return RatFunc(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def inverse(self) -> 'RatFunc':
        if self.is_zero:
            raise NotInvertibleError('zero has no inverse')
        return RatFunc(self.denominator, self.numerator)

    def __truediv__(self, other: Operand) -> 'RatFunc':
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other: Operand) -> 'RatFunc':
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int) -> 'RatFunc':
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.numerator ** n, self.denominator ** n)

    def frobenius(self) -> 'RatFunc':
        return RatFunc(self.numerator.frobenius(), self.denominator.frobenius())

    # FORMATTING

    def __str__(self) -> str:
        if self.denominator.is_constant:
            return str(self.numerator)
        num, den = str(self.numerator), str(self.denominator)
        if len(self.numerator) > 1:
            num = f'({num})'
        if len(self.denominator) > 1 or len(self.denominator.leading_term()[0].powers) > 1:
            den = f'({den})'
        return f'{num}/{den}'

    def __repr__(self) -> str:
        return f'RatFunc({self})'


def ratfunc_eq(f: RatFunc, g: RatFunc) -> bool:
    """
    Semantic equality: f = g iff num(f)*den(g) = num(g)*den(f).

    Raises:
        FieldMismatchError: f and g live over different fields
    """
    f.field.require_same(g.field)
    if f.is_zero or g.is_zero:
        return f.is_zero and g.is_zero
    return f.numerator * g.denominator == g.numerator * f.denominator
