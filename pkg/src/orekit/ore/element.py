"""
Elements of K[x; sigma, delta][t1..td] in left normal form:
a finite sum of c * x^m * t^e with c in K written on the left.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from ..arith.multipoly import UNDEFINED_DEGREE, Degree, MultiPoly
from ..arith.ratfunc import RatFunc
from ..errors import RingMismatchError
from ..maps.automorphism import apply_automorphism
from ..maps.derivation import apply_derivation, as_ratfunc
from .ring import OreRingDescriptor

Key = Tuple[int, Tuple[int, ...]]
Coefficient = Union[RatFunc, MultiPoly, int]


def _add_exponents(e: Tuple[int, ...], f: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(a + b for a, b in zip(e, f))


def _accumulate(into: Dict[Key, RatFunc], key: Key, value: RatFunc) -> None:
    if value.is_zero:
        return
    if key in into:
        total = into[key] + value
        if total.is_zero:
            del into[key]
        else:
            into[key] = total
    else:
        into[key] = value


@dataclass(frozen=True, eq=False)
class OreElement:
    ring: OreRingDescriptor
    terms: Mapping[Key, RatFunc]

    # CONSTRUCTORS

    @classmethod
    def from_terms(cls, ring: OreRingDescriptor, terms: Iterable[Tuple[Key, Coefficient]]) -> 'OreElement':
        collected: Dict[Key, RatFunc] = {}
        for (m, e), c in terms:
            e = tuple(e)
            if len(e) != ring.ncentral:
                raise ValueError(f'central multidegree {e} does not match {ring.central_vars}')
            _accumulate(collected, (m, e), as_ratfunc(ring.coefficients, c))
        return cls(ring, collected)

    @classmethod
    def zero(cls, ring: OreRingDescriptor) -> 'OreElement':
        return cls(ring, {})

    @classmethod
    def scalar(cls, ring: OreRingDescriptor, c: Coefficient) -> 'OreElement':
        value = as_ratfunc(ring.coefficients, c)
        if value.is_zero:
            return cls(ring, {})
        return cls(ring, {(0, (0,) * ring.ncentral): value})

    @classmethod
    def one(cls, ring: OreRingDescriptor) -> 'OreElement':
        return cls.scalar(ring, 1)

    @classmethod
    def skew(cls, ring: OreRingDescriptor, power: int = 1) -> 'OreElement':
        return cls(ring, {(power, (0,) * ring.ncentral): RatFunc.one(ring.coefficients)})

    @classmethod
    def central(cls, ring: OreRingDescriptor, name: str, power: int = 1) -> 'OreElement':
        exponents = [0] * ring.ncentral
        exponents[ring.central_index(name)] = power
        return cls(ring, {(0, tuple(exponents)): RatFunc.one(ring.coefficients)})

    @classmethod
    def generator(cls, ring: OreRingDescriptor, name: str) -> 'OreElement':
        """The element named by a coefficient, skew or central variable."""
        if name == ring.skew_var:
            return cls.skew(ring)
        if name in ring.central_vars:
            return cls.central(ring, name)
        return cls.scalar(ring, RatFunc.variable(ring.coefficients, name))

    # QUERIES

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_scalar(self) -> bool:
        """The element lies in K."""
        return all(m == 0 and not any(e) for m, e in self.terms)

    def scalar_value(self) -> RatFunc:
        if not self.is_scalar:
            raise ValueError(f'{self} does not lie in {self.ring.coefficients}')
        return self.coefficient(0)

    def coefficient(self, skew_degree: int, central: Tuple[int, ...] = None) -> RatFunc:
        key = (skew_degree, central if central is not None else (0,) * self.ring.ncentral)
        return self.terms.get(key, RatFunc.zero(self.ring.coefficients))

    def degree(self) -> Degree:
        """Degree in the skew variable."""
        if not self.terms:
            return UNDEFINED_DEGREE
        return max(m for m, _ in self.terms)

    def central_degree(self, name: str) -> Degree:
        if not self.terms:
            return UNDEFINED_DEGREE
        i = self.ring.central_index(name)
        return max(e[i] for _, e in self.terms)

    def sorted_terms(self) -> List[Tuple[Key, RatFunc]]:
        return sorted(self.terms.items(), key=lambda item: (item[0][0], item[0][1]), reverse=True)

    # EQUALITY

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OreElement):
            if other.ring is not self.ring:
                return False
            if set(self.terms) != set(other.terms):
                return False
            return all(c == other.terms[k] for k, c in self.terms.items())
        if isinstance(other, (RatFunc, MultiPoly, int)):
            return self == OreElement.scalar(self.ring, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # ARITHMETIC

    def _lift(self, other: Union['OreElement', Coefficient]) -> 'OreElement':
        if isinstance(other, OreElement):
            if other.ring is not self.ring:
                raise RingMismatchError(f'ring mismatch: {self.ring.name} vs {other.ring.name}')
            return other
        return OreElement.scalar(self.ring, other)

    def __add__(self, other: Union['OreElement', Coefficient]) -> 'OreElement':
        other = self._lift(other)
        result = dict(self.terms)
        for key, c in other.terms.items():
            _accumulate(result, key, c)
        return OreElement(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> 'OreElement':
        return OreElement(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Union['OreElement', Coefficient]) -> 'OreElement':
        return self + (-self._lift(other))

    def __rsub__(self, other: Coefficient) -> 'OreElement':
        return self._lift(other) - self

    def left_scale(self, c: Coefficient) -> 'OreElement':
        """c * self, which needs no rewriting because coefficients sit on the left."""
        value = as_ratfunc(self.ring.coefficients, c)
        if value.is_zero:
            return OreElement(self.ring, {})
        return OreElement(self.ring, {k: value * a for k, a in self.terms.items()})

    def __mul__(self, other: Union['OreElement', Coefficient]) -> 'OreElement':
        return ore_mul(self, self._lift(other))

    def __rmul__(self, other: Coefficient) -> 'OreElement':
        return self.left_scale(other)

    def __pow__(self, n: int) -> 'OreElement':
        if n < 0:
            raise ValueError('negative power of an Ore element')
        result = OreElement.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = ore_mul(result, base)
            n >>= 1
            if n:
                base = ore_mul(base, base)
        return result

    # FORMATTING

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        ring = self.ring
        pieces = []
        for (m, e), c in self.sorted_terms():
            factors = []
            if m:
                factors.append(ring.skew_var if m == 1 else f'{ring.skew_var}^{m}')
            for name, k in zip(ring.central_vars, e):
                if k:
                    factors.append(name if k == 1 else f'{name}^{k}')
            monomial = '*'.join(factors)
            coeff = str(c)
            if not factors:
                pieces.append(coeff)
            elif c == 1:
                pieces.append(monomial)
            elif c == -1:
                pieces.append(f'-{monomial}')
            elif len(c.numerator) == 1 and c.is_polynomial and not coeff.startswith('-'):
                pieces.append(f'{coeff}*{monomial}')
            else:
                pieces.append(f'({coeff})*{monomial}')
        text = pieces[0]
        for piece in pieces[1:]:
            text += f' - {piece[1:]}' if piece.startswith('-') else f' + {piece}'
        return text

    def __repr__(self) -> str:
        return f'OreElement({self})'


def _commutes_with_skew(ring: OreRingDescriptor, c: RatFunc) -> bool:
    if c.is_constant or ring.is_commutative_extension:
        return True
    if ring.delta is not None and not apply_derivation(ring.delta, c).is_zero:
        return False
    return ring.sigma is None or apply_automorphism(ring.sigma, c) == c


def skew_ladder(ring: OreRingDescriptor, c: RatFunc, top: int) -> List[Dict[int, RatFunc]]:
    """
    x^j * c in left normal form for j = 0..top, as {power of x: coefficient}.

    Built one step at a time from x*(a*x^k) = sigma(a)*x^(k+1) + delta(a)*x^k.
    """
    ladder: List[Dict[int, RatFunc]] = [{0: c}]
    if _commutes_with_skew(ring, c):
        return [{j: c} for j in range(top + 1)]
    for _ in range(top):
        step: Dict[int, RatFunc] = {}
        for k, a in ladder[-1].items():
            shifted = apply_automorphism(ring.sigma, a) if ring.sigma is not None else a
            _accumulate(step, k + 1, shifted)  # type: ignore[arg-type]
            if ring.delta is not None:
                _accumulate(step, k, apply_derivation(ring.delta, a))  # type: ignore[arg-type]
        ladder.append(step)
    return ladder


def ore_mul(a: OreElement, b: OreElement) -> OreElement:
    """
    The Ore product a*b.

    Each coefficient of b is moved left across the powers of x occurring in a,
    then coefficients multiply in K and central exponents add.

    Raises:
        RingMismatchError: a and b belong to different rings
    """
    if a.ring is not b.ring:
        raise RingMismatchError(f'ring mismatch: {a.ring.name} vs {b.ring.name}')
    ring = a.ring
    if a.is_zero or b.is_zero:
        return OreElement(ring, {})
    top = max(m for m, _ in a.terms)
    result: Dict[Key, RatFunc] = {}
    for (n, f), b_coeff in b.terms.items():
        ladder = skew_ladder(ring, b_coeff, top)
        for (m, e), a_coeff in a.terms.items():
            exponents = _add_exponents(e, f)
            for k, c in ladder[m].items():
                _accumulate(result, (k + n, exponents), a_coeff * c)
    return OreElement(ring, result)


def commutator(a: OreElement, b: OreElement) -> OreElement:
    """[a, b] = ab - ba."""
    return ore_mul(a, b) - ore_mul(b, a)
