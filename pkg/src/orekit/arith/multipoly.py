"""
Sparse multivariate polynomials over Q or F_p.

A `MultiPoly` maps monomials to nonzero scalars; the zero polynomial is the
empty map. Values are immutable: every operation returns a new polynomial.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, TypeVar, Union

from ..errors import NotInvertibleError
from .field import FieldDescriptor, Scalar
from .monomial import Monomial

T = TypeVar('T')


class _UndefinedDegree:
    """Degree of the zero polynomial. Deliberately not an integer and not comparable."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'UNDEFINED_DEGREE'

    def __bool__(self) -> bool:
        raise TypeError('the degree of the zero polynomial is undefined; branch on is_zero first')


UNDEFINED_DEGREE = _UndefinedDegree()

Degree = Union[int, _UndefinedDegree]


@dataclass(frozen=True, eq=False)
class MultiPoly:
    field: FieldDescriptor
    terms: Mapping[Monomial, Scalar]

    # CONSTRUCTORS

    @classmethod
    def from_terms(cls, field: FieldDescriptor, terms: Mapping[Monomial, Scalar] | Iterable[Tuple[Monomial, Scalar]]) -> 'MultiPoly':
        """Coerce coefficients into the field, merge repeated monomials and drop zeros."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: Dict[Monomial, Scalar] = {}
        for monomial, coeff in items:
            c = field.coerce(coeff)
            if monomial in merged:
                c = field.add(merged[monomial], c)
            merged[monomial] = c
        return cls(field, {m: c for m, c in merged.items() if c != 0})

    @classmethod
    def zero(cls, field: FieldDescriptor) -> 'MultiPoly':
        return cls(field, {})

    @classmethod
    def one(cls, field: FieldDescriptor) -> 'MultiPoly':
        return cls(field, {Monomial.one(): field.one()})

    @classmethod
    def constant(cls, field: FieldDescriptor, value: Scalar) -> 'MultiPoly':
        c = field.coerce(value)
        return cls(field, {Monomial.one(): c} if c != 0 else {})

    @classmethod
    def variable(cls, field: FieldDescriptor, name: Union[str, int], exponent: int = 1) -> 'MultiPoly':
        index = field.index(name) if isinstance(name, str) else name
        return cls(field, {Monomial.variable(index, exponent): field.one()})

    @classmethod
    def monomial(cls, field: FieldDescriptor, monomial: Monomial, coeff: Scalar = 1) -> 'MultiPoly':
        c = field.coerce(coeff)
        return cls(field, {monomial: c} if c != 0 else {})

    # QUERIES

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and Monomial.one() in self.terms)

    @property
    def constant_value(self) -> Scalar:
        """The scalar value of a constant polynomial."""
        if not self.is_constant:
            raise ValueError(f'{self} is not constant')
        return self.terms.get(Monomial.one(), self.field.zero())

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> Iterator[Tuple[Monomial, Scalar]]:
        """Terms in decreasing graded-lex order."""
        return iter(sorted(self.terms.items(), key=lambda item: item[0].sort_key(), reverse=True))

    def degree(self) -> Degree:
        if not self.terms:
            return UNDEFINED_DEGREE
        return max(m.degree for m in self.terms)

    def degree_in(self, index: int) -> Degree:
        if not self.terms:
            return UNDEFINED_DEGREE
        return max(m.exponent(index) for m in self.terms)

    def leading_term(self) -> Tuple[Monomial, Scalar]:
        if not self.terms:
            raise ValueError('the zero polynomial has no leading term')
        monomial = max(self.terms, key=Monomial.sort_key)
        return monomial, self.terms[monomial]

    def leading_coefficient(self) -> Scalar:
        return self.leading_term()[1]

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term (1 for the zero polynomial)."""
        content = None
        for m in self.terms:
            content = m if content is None else content.gcd(m)
            if content.is_one:
                break
        return content if content is not None else Monomial.one()

    def variables_used(self) -> Tuple[int, ...]:
        used = set()
        for m in self.terms:
            used.update(m.indices())
        return tuple(sorted(used))

    def coefficients_in(self, index: int) -> Dict[int, 'MultiPoly']:
        """View as a univariate polynomial in variable `index`: exponent -> coefficient."""
        buckets: Dict[int, Dict[Monomial, Scalar]] = {}
        for m, c in self.terms.items():
            buckets.setdefault(m.exponent(index), {})[m.without(index)] = c
        return {e: MultiPoly(self.field, terms) for e, terms in buckets.items()}

    # EQUALITY

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.field == other.field and dict(self.terms) == dict(other.terms)
        if isinstance(other, (int,)) or hasattr(other, 'denominator'):
            return self.is_constant and self.constant_value == self.field.coerce(other)  # type: ignore[arg-type]
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, frozenset(self.terms.items())))

    # ARITHMETIC

    def _lift(self, other: Union['MultiPoly', Scalar]) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            self.field.require_same(other.field)
            return other
        return MultiPoly.constant(self.field, other)

    def __add__(self, other: Union['MultiPoly', Scalar]) -> 'MultiPoly':
        other = self._lift(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        f = self.field
        result = dict(self.terms)
        for m, c in other.terms.items():
            if m in result:
                s = f.add(result[m], c)
                if s == 0:
                    del result[m]
                else:
                    result[m] = s
            else:
                result[m] = c
        return MultiPoly(f, result)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        f = self.field
        return MultiPoly(f, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: Union['MultiPoly', Scalar]) -> 'MultiPoly':
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> 'MultiPoly':
        return self._lift(other) - self

    def scale(self, scalar: Scalar) -> 'MultiPoly':
        f = self.field
        c = f.coerce(scalar)
        if c == 0:
            return MultiPoly(f, {})
        return MultiPoly(f, {m: f.mul(a, c) for m, a in self.terms.items()})

    def shift(self, monomial: Monomial, scalar: Scalar = 1) -> 'MultiPoly':
        """Multiply by the single term scalar*monomial."""
        f = self.field
        c = f.coerce(scalar)
        if c == 0:
            return MultiPoly(f, {})
        return MultiPoly(f, {m * monomial: f.mul(a, c) for m, a in self.terms.items()})

    def __mul__(self, other: Union['MultiPoly', Scalar]) -> 'MultiPoly':
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self.field.require_same(other.field)
        if not self.terms or not other.terms:
            return MultiPoly(self.field, {})
        if len(other.terms) == 1:
            (m, c), = other.terms.items()
            return self.shift(m, c)
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            return other.shift(m, c)

        p = self.field.characteristic
        result: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                result[m] = result.get(m, 0) + c1 * c2
        if p:
            return MultiPoly(self.field, {m: c % p for m, c in result.items() if c % p})
        return MultiPoly(self.field, {m: c for m, c in result.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'MultiPoly':
        if n < 0:
            raise ValueError('negative exponent for a polynomial; use RatFunc')
        p = self.field.characteristic
        if p and n and n % p == 0:
            return self.frobenius() ** (n // p)
        result = MultiPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self) -> 'MultiPoly':
        """f -> f^p; coefficients are fixed because they lie in the prime field."""
        p = self.field.characteristic
        if not p:
            raise ValueError('Frobenius needs positive characteristic')
        return MultiPoly(self.field, {m ** p: c for m, c in self.terms.items()})

    def partial_derivative(self, index: int) -> 'MultiPoly':
        f = self.field
        result: Dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            e = m.exponent(index)
            if not e:
                continue
            coeff = f.mul(c, f.coerce(e))
            if coeff != 0:
                result[m / Monomial.variable(index)] = coeff
        return MultiPoly(f, result)

    def divmod(self, divisor: 'MultiPoly') -> Tuple['MultiPoly', 'MultiPoly']:
        """
        Multivariate division by a single divisor under graded-lex order.

        Returns:
            (quotient, remainder) with self = quotient*divisor + remainder and no
            term of the remainder divisible by the leading monomial of divisor
        """
        self.field.require_same(divisor.field)
        if divisor.is_zero:
            raise NotInvertibleError('polynomial division by zero')
        f = self.field
        lead_m, lead_c = divisor.leading_term()
        lead_inv = f.inv(lead_c)
        quotient: Dict[Monomial, Scalar] = {}
        remainder: Dict[Monomial, Scalar] = {}
        rest = MultiPoly(f, dict(self.terms))
        while not rest.is_zero:
            m, c = rest.leading_term()
            if lead_m.divides(m):
                qm = m / lead_m
                qc = f.mul(c, lead_inv)
                quotient[qm] = f.add(quotient.get(qm, f.zero()), qc)
                rest = rest - divisor.shift(qm, qc)
            else:
                remainder[m] = c
                rest = MultiPoly(f, {k: v for k, v in rest.terms.items() if k != m})
        return (
            MultiPoly(f, {m: c for m, c in quotient.items() if c != 0}),
            MultiPoly(f, remainder),
        )

    def exact_divide(self, divisor: 'MultiPoly') -> 'MultiPoly':
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise ValueError(f'{divisor} does not divide {self}')
        return quotient

    def divide_monomial(self, monomial: Monomial) -> 'MultiPoly':
        return MultiPoly(self.field, {m / monomial: c for m, c in self.terms.items()})

    # SUBSTITUTION

    def evaluate(self, images: Mapping[int, T], scalar: Callable[[Scalar], T]) -> T:
        """
        Substitute images for variables and evaluate in the images' ring.

        Factors are multiplied left to right as scalar * x_i1^e1 * x_i2^e2 ...
        in increasing variable index, which matters only when the images do
        not commute.

        Args:
            images: variable index -> value (only indices that occur are needed)
            scalar: embeds a field scalar into the target ring
        """
        total = None
        powers: Dict[Tuple[int, int], T] = {}
        for m, c in self.terms.items():
            value = scalar(c)
            for i, e in m.powers:
                key = (i, e)
                if key not in powers:
                    powers[key] = images[i] ** e  # type: ignore[operator]
                value = value * powers[key]  # type: ignore[operator]
            total = value if total is None else total + value  # type: ignore[operator]
        return scalar(self.field.zero()) if total is None else total

    def remap(self, field: FieldDescriptor, mapping: Mapping[int, int]) -> 'MultiPoly':
        """Move to another field over the same prime field, renaming variable indices."""
        if field.characteristic != self.field.characteristic:
            raise ValueError('cannot remap across characteristics')
        return MultiPoly(field, {m.remap(mapping): c for m, c in self.terms.items()})

    # FORMATTING

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        names = self.field.variables
        pieces = []
        for m, c in self.sorted_terms():
            negative = self.field.characteristic == 0 and c < 0
            magnitude = -c if negative else c
            if m.is_one:
                body = str(magnitude)
            elif magnitude == 1:
                body = m.format(names)
            else:
                body = f'{magnitude}*{m.format(names)}'
            pieces.append(('-' if negative else '+', body))
        sign, body = pieces[0]
        text = f'-{body}' if sign == '-' else body
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text

    def __repr__(self) -> str:
        return f'MultiPoly({self})'


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Exact add/sub/mul of two polynomials over the same field descriptor."""
    a.field.require_same(b.field)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ValueError(f'unknown polynomial operation {op!r}')
