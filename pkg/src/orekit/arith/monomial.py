from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Tuple


@dataclass(frozen=True)
class Monomial:
    """
    A power product of field variables, stored sparsely.

    `powers` holds (variable index, exponent) pairs sorted by index with no
    zero exponent, so equal monomials have equal representations.

    Monomials are ordered graded-lexicographically with x1 > x2 > ... :
    total degree first, then the exponent of x1, then of x2, and so on.
    """
    powers: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def one(cls) -> 'Monomial':
        return _ONE

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> 'Monomial':
        if exponent < 0:
            raise ValueError('negative exponent')
        if exponent == 0:
            return _ONE
        return cls(((index, exponent),))

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int] | Sequence[int]) -> 'Monomial':
        """Build from an index->exponent mapping or a dense exponent vector."""
        items: Iterable[Tuple[int, int]]
        if isinstance(exponents, Mapping):
            items = exponents.items()
        else:
            items = enumerate(exponents)
        powers = []
        for index, exponent in sorted(items):
            if exponent < 0:
                raise ValueError('negative exponent')
            if exponent:
                powers.append((index, exponent))
        return cls(tuple(powers))

    # QUERIES

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def is_one(self) -> bool:
        return not self.powers

    def exponent(self, index: int) -> int:
        for i, e in self.powers:
            if i == index:
                return e
            if i > index:
                break
        return 0

    def indices(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.powers)

    def dense(self, nvars: int) -> Tuple[int, ...]:
        vector = [0] * nvars
        for i, e in self.powers:
            vector[i] = e
        return tuple(vector)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Graded-lex key; larger keys are larger monomials."""
        if not self.powers:
            return (0, ())
        return (self.degree, self.dense(self.powers[-1][0] + 1))

    def __lt__(self, other: 'Monomial') -> bool:
        return self.sort_key() < other.sort_key()

    # ARITHMETIC

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        if not other.powers:
            return self
        if not self.powers:
            return other
        merged = dict(self.powers)
        for i, e in other.powers:
            merged[i] = merged.get(i, 0) + e
        return Monomial(tuple(sorted(merged.items())))

    def __pow__(self, n: int) -> 'Monomial':
        if n < 0:
            raise ValueError('negative exponent')
        if n == 0:
            return _ONE
        return Monomial(tuple((i, e * n) for i, e in self.powers))

    def divides(self, other: 'Monomial') -> bool:
        return all(other.exponent(i) >= e for i, e in self.powers)

    def __truediv__(self, other: 'Monomial') -> 'Monomial':
        """Exact quotient; raises ValueError when `other` does not divide `self`."""
        remaining = dict(self.powers)
        for i, e in other.powers:
            left = remaining.get(i, 0) - e
            if left < 0:
                raise ValueError(f'{other} does not divide {self}')
            if left:
                remaining[i] = left
            else:
                remaining.pop(i, None)
        return Monomial(tuple(sorted(remaining.items())))

    def gcd(self, other: 'Monomial') -> 'Monomial':
        powers = []
        for i, e in self.powers:
            f = other.exponent(i)
            if f:
                powers.append((i, min(e, f)))
        return Monomial(tuple(powers))

    def without(self, index: int) -> 'Monomial':
        return Monomial(tuple((i, e) for i, e in self.powers if i != index))

    def split_pth_power(self, p: int) -> Tuple['Monomial', 'Monomial']:
        """
        Write m = r * q^p with every exponent of r in [0, p).

        Returns:
            (r, q)
        """
        low = tuple((i, e % p) for i, e in self.powers if e % p)
        high = tuple((i, e // p) for i, e in self.powers if e // p)
        return Monomial(low), Monomial(high)

    def remap(self, mapping: Mapping[int, int]) -> 'Monomial':
        """Rename variable indices (used when a field drops or reorders variables)."""
        return Monomial.from_exponents({mapping[i]: e for i, e in self.powers})

    def format(self, names: Sequence[str]) -> str:
        if not self.powers:
            return '1'
        parts = []
        for i, e in self.powers:
            parts.append(names[i] if e == 1 else f'{names[i]}^{e}')
        return '*'.join(parts)


_ONE = Monomial(())
