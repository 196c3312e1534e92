"""
Field descriptors and scalar arithmetic.

A `FieldDescriptor` names a prime field (Q or F_p) together with an ordered
list of variables; it is the coefficient universe of `MultiPoly` and
`RatFunc`. Scalars are `Fraction` over Q and plain `int` in [0, p) over F_p.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from ..errors import FieldMismatchError, NotInvertibleError, NotPrimeError

Scalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    characteristic: int
    variables: Tuple[str, ...] = ()
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise NotPrimeError(f'characteristic must be 0 or a prime, got {self.characteristic}')
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f'variable names must be pairwise distinct: {variables}')
        object.__setattr__(self, 'variables', variables)
        object.__setattr__(self, '_index', {name: i for i, name in enumerate(variables)})

    # DESCRIPTION

    @property
    def prime_field(self) -> str:
        """'Q' or 'F<p>', the label used by scripts and reports."""
        return 'Q' if self.characteristic == 0 else f'F{self.characteristic}'

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f'{name!r} is not a variable of {self}') from None

    def has_variable(self, name: str) -> bool:
        return name in self._index

    def with_variables(self, variables: Iterable[str]) -> 'FieldDescriptor':
        return FieldDescriptor(self.characteristic, tuple(variables))

    def __str__(self) -> str:
        if not self.variables:
            return self.prime_field
        return f"{self.prime_field}({', '.join(self.variables)})"

    def require_same(self, other: 'FieldDescriptor') -> None:
        if self != other:
            raise FieldMismatchError(f'field mismatch: {self} vs {other}')

    # SCALARS

    def coerce(self, value: Scalar) -> Scalar:
        """Map an int or Fraction into this prime field."""
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise NotInvertibleError(f'{value} has no image in F{p}')
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def zero(self) -> Scalar:
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.characteristic == 0 else 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a * b) % self.characteristic
        return a * b

    def neg(self, a: Scalar) -> Scalar:
        if self.characteristic:
            return (-a) % self.characteristic
        return -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise NotInvertibleError('division by zero scalar')
        if self.characteristic:
            return pow(int(a), -1, self.characteristic)
        return 1 / Fraction(a)

    def scalar_str(self, a: Scalar) -> str:
        return str(a)
