"""
The algebras a jet homomorphism can act on: a polynomial ring or rational
function field over Q or F_p, or an Ore ring K[x; sigma, delta][t...].

Each adapter knows its generators and how to push an element through
generator series, which is all a `JetHom` needs.
"""

from dataclasses import dataclass
from typing import Any, Dict, Mapping, Tuple, Union

from ..arith.field import FieldDescriptor, Scalar
from ..arith.ratfunc import RatFunc
from ..errors import JetError
from ..maps.derivation import as_ratfunc
from ..ore.element import OreElement
from ..ore.ring import OreRingDescriptor
from .series import TruncatedSeries


def _evaluate_fraction(c: RatFunc, images: Mapping[int, TruncatedSeries], scalar, invert) -> TruncatedSeries:
    num = c.numerator.evaluate(images, scalar)
    if c.denominator.is_constant:
        return num
    den = c.denominator.evaluate(images, scalar)
    return num * den.inverse(invert)


@dataclass(frozen=True)
class FieldAlgebra:
    """K = F(x1..xn), or the polynomial ring F[x1..xn] when `polynomial` is set."""
    field: FieldDescriptor
    polynomial: bool = False

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def generators(self) -> Tuple[str, ...]:
        return self.field.variables

    def generator(self, name: str) -> RatFunc:
        return RatFunc.variable(self.field, name)

    def zero(self) -> RatFunc:
        return RatFunc.zero(self.field)

    def one(self) -> RatFunc:
        return RatFunc.one(self.field)

    def coerce(self, value: Any) -> RatFunc:
        value = as_ratfunc(self.field, value)
        if self.polynomial and not value.is_polynomial:
            raise JetError(f'{value} is not a polynomial of {self}')
        return value

    def scale(self, a: RatFunc, c: Scalar) -> RatFunc:
        return a * c

    def expand(self, a: RatFunc, jets: Mapping[str, TruncatedSeries], truncation: int) -> TruncatedSeries:
        a = self.coerce(a)
        used = set(a.numerator.variables_used()) | set(a.denominator.variables_used())
        names = self.field.variables
        if all(jets[names[i]].is_constant for i in used):
            return TruncatedSeries.constant(a, truncation)
        images = {i: jets[names[i]] for i in used}

        def scalar(c):
            return TruncatedSeries.constant(RatFunc.constant(self.field, c), truncation)

        return _evaluate_fraction(a, images, scalar, RatFunc.inverse)

    def __str__(self) -> str:
        if self.polynomial:
            return f"{self.field.prime_field}[{', '.join(self.field.variables)}]"
        return str(self.field)


@dataclass(frozen=True)
class OreAlgebra:
    ring: OreRingDescriptor

    @property
    def characteristic(self) -> int:
        return self.ring.characteristic

    def generators(self) -> Tuple[str, ...]:
        return tuple(name for _, name in self.ring.generators())

    def generator(self, name: str) -> OreElement:
        return OreElement.generator(self.ring, name)

    def zero(self) -> OreElement:
        return OreElement.zero(self.ring)

    def one(self) -> OreElement:
        return OreElement.one(self.ring)

    def coerce(self, value: Any) -> OreElement:
        if isinstance(value, OreElement):
            if value.ring is not self.ring:
                raise JetError(f'{value} is not an element of {self.ring.name}')
            return value
        return OreElement.scalar(self.ring, value)

    def scale(self, a: OreElement, c: Scalar) -> OreElement:
        return a.left_scale(c)

    def _invert_scalar(self, a: OreElement) -> OreElement:
        if not a.is_scalar:
            raise JetError(f'{a} is not invertible in {self.ring.name}')
        return OreElement.scalar(self.ring, a.scalar_value().inverse())

    def expand(self, a: OreElement, jets: Mapping[str, TruncatedSeries], truncation: int) -> TruncatedSeries:
        a = self.coerce(a)
        ring = self.ring
        field = ring.coefficients
        coeff_jets = {i: jets[name] for i, name in enumerate(field.variables)}
        skew_jet = jets[ring.skew_var]
        central_jets = [jets[t] for t in ring.central_vars]

        def scalar(c):
            return TruncatedSeries.constant(OreElement.scalar(ring, c), truncation)

        skew_powers: Dict[int, TruncatedSeries] = {}
        central_powers: Dict[Tuple[int, int], TruncatedSeries] = {}
        total = TruncatedSeries.constant(self.zero(), truncation)
        for (m, e), c in a.terms.items():
            used = set(c.numerator.variables_used()) | set(c.denominator.variables_used())
            if all(coeff_jets[i].is_constant for i in used):
                series = TruncatedSeries.constant(OreElement.scalar(ring, c), truncation)
            else:
                series = _evaluate_fraction(c, {i: coeff_jets[i] for i in used}, scalar, self._invert_scalar)
            if m:
                if m not in skew_powers:
                    skew_powers[m] = skew_jet ** m
                series = series * skew_powers[m]
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in central_powers:
                        central_powers[(i, k)] = central_jets[i] ** k
                    series = series * central_powers[(i, k)]
            total = total + series
        return total

    def __str__(self) -> str:
        return str(self.ring)


Algebra = Union[FieldAlgebra, OreAlgebra]
Element = Union[RatFunc, OreElement]
