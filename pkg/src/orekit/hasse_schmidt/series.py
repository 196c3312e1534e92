from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from ..errors import JetError


@dataclass(frozen=True)
class TruncatedSeries:
    """
    a_0 + a_1 t + ... + a_N t^N modulo t^(N+1), with coefficients in a
    possibly noncommutative algebra; t itself is central.
    """
    coefficients: Tuple[Any, ...]

    @classmethod
    def constant(cls, value: Any, truncation: int) -> 'TruncatedSeries':
        zero = value - value
        return cls((value,) + (zero,) * truncation)

    @classmethod
    def from_list(cls, values: Sequence[Any], truncation: int, zero: Any) -> 'TruncatedSeries':
        values = list(values[: truncation + 1])
        values += [zero] * (truncation + 1 - len(values))
        return cls(tuple(values))

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Any:
        return self.coefficients[i]

    def as_list(self) -> List[Any]:
        return list(self.coefficients)

    @property
    def is_constant(self) -> bool:
        return all(c.is_zero for c in self.coefficients[1:])

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        """Cauchy product; factor order is kept, so noncommutative coefficients are fine."""
        n = self.truncation
        a, b = self.coefficients, other.coefficients
        if other.is_constant:
            return TruncatedSeries(tuple(c * b[0] for c in a))
        if self.is_constant:
            return TruncatedSeries(tuple(a[0] * c for c in b))
        out = []
        for k in range(n + 1):
            total = None
            for i in range(k + 1):
                if a[i].is_zero or b[k - i].is_zero:
                    continue
                term = a[i] * b[k - i]
                total = term if total is None else total + term
            out.append(total if total is not None else a[0] - a[0])
        return TruncatedSeries(tuple(out))

    def __pow__(self, e: int) -> 'TruncatedSeries':
        if e < 0:
            raise ValueError('negative power of a truncated series')
        if self.is_constant:
            return TruncatedSeries((self.coefficients[0] ** e,) + self.coefficients[1:])
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        if result is None:
            one = self.coefficients[0] ** 0
            return TruncatedSeries.constant(one, self.truncation)
        return result

    def inverse(self, invert_constant) -> 'TruncatedSeries':
        """
        Series inverse, b_n = -a_0^(-1) * sum_(i>=1) a_i b_(n-i).

        Args:
            invert_constant: inverts the constant term a_0 in the coefficient algebra
        """
        a = self.coefficients
        if a[0].is_zero:
            raise JetError('cannot invert a series with zero constant term')
        inv0 = invert_constant(a[0])
        out = [inv0]
        for n in range(1, self.truncation + 1):
            total = None
            for i in range(1, n + 1):
                if a[i].is_zero:
                    continue
                term = a[i] * out[n - i]
                total = term if total is None else total + term
            out.append(-(inv0 * total) if total is not None else inv0 - inv0)
        return TruncatedSeries(tuple(out))
