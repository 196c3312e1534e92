"""
Hasse-Schmidt derivations stored as truncated jet homomorphisms.

A family (d_0, d_1, ..., d_N) is kept as the images of the generators under
G(a) = sum d_i(a) t^i mod t^(N+1). G is then a homomorphism by construction
and d_i(a) is read off as a coefficient of G(a).
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Any, Iterable, List, Mapping, Optional, Protocol, Sequence, Tuple

from ..arith.lucas import lucas_binom
from ..certificate import Certificate, failed, passed
from ..errors import JetError
from .algebra import Algebra, Element
from .series import TruncatedSeries

logger = logging.getLogger(__name__)


class HSFamily(Protocol):
    """Anything that yields the components d_0..d_N of a Hasse-Schmidt family."""

    algebra: Algebra
    truncation: int
    name: str

    def components(self, a: Any) -> List[Any]: ...

    def component(self, i: int, a: Any) -> Any: ...


@dataclass(frozen=True, eq=False)
class JetHom:
    algebra: Algebra
    truncation: int
    generator_jets: Mapping[str, Sequence[Element]]
    extend_trivially: bool = True
    name: str = 'G'

    def __post_init__(self) -> None:
        if self.truncation < 1:
            raise JetError(f'truncation must be positive, got {self.truncation}')
        names = self.algebra.generators()
        unknown = set(self.generator_jets) - set(names)
        if unknown:
            raise JetError(f'{self.name}: {sorted(unknown)} are not generators of {self.algebra}')

        zero = self.algebra.zero()
        jets = {}
        for name in names:
            g = self.algebra.generator(name)
            if name in self.generator_jets:
                given = [self.algebra.coerce(v) for v in self.generator_jets[name]]
                if not given or given[0] != g:
                    raise JetError(f'{self.name}: the 0-th component of {name} must be {name} itself')
                if len(given) > self.truncation + 1:
                    raise JetError(f'{self.name}: jet of {name} is longer than the truncation {self.truncation}')
            elif self.extend_trivially:
                given = [g]
            else:
                raise JetError(f'{self.name}: no jet given for generator {name}')
            jets[name] = TruncatedSeries.from_list(given, self.truncation, zero)
        object.__setattr__(self, '_series', jets)

    @property
    def series(self) -> Mapping[str, TruncatedSeries]:
        return self._series  # type: ignore[attr-defined]

    def jet(self, a: Any) -> List[Element]:
        return jet_extend(self, a)

    def components(self, a: Any) -> List[Element]:
        return jet_extend(self, a)

    def component(self, i: int, a: Any) -> Element:
        if i < 0 or i > self.truncation:
            raise JetError(f'{self.name}: component {i} is outside 0..{self.truncation}')
        if i == 0:
            return self.algebra.coerce(a)
        return jet_extend(self, a)[i]

    def is_trivial_on(self, name: str) -> bool:
        return self.series[name].is_constant

    def __str__(self) -> str:
        parts = []
        for name in self.algebra.generators():
            series = self.series[name]
            if series.is_constant:
                continue
            terms = [f'({c})*t^{i}' if i else str(c) for i, c in enumerate(series.coefficients) if not c.is_zero]
            parts.append(f'{name} -> {" + ".join(terms)}')
        return f"{self.name} on {self.algebra} mod t^{self.truncation + 1}: {', '.join(parts) or 'identity'}"


def jet_extend(j: JetHom, a: Any) -> List[Element]:
    """
    G(a) = [d_0(a), ..., d_N(a)].

    Generator jets are substituted into a and multiplied out modulo t^(N+1);
    a denominator v is inverted as a truncated series, which needs d_0(v) = v
    to be a unit.

    Raises:
        JetError: the element is not in the algebra, or a denominator cannot be inverted
    """
    return j.algebra.expand(a, j.series, j.truncation).as_list()


def kernel_membership(j: HSFamily, a: Any) -> bool:
    """True iff d_i(a) = 0 for 1 <= i <= N (relative to the truncation)."""
    return all(c.is_zero for c in j.components(a)[1:])


def binomial(n: int, r: int, p: int) -> int:
    return lucas_binom(n, r, p) if p else comb(n, r)


def hs_axiom_check(j: HSFamily, samples: Iterable[Tuple[Any, Any]], name: Optional[str] = None) -> Certificate:
    """
    Certify d_n(ab) = sum_i d_i(a) d_(n-i)(b) for every sampled pair and n <= N,
    and the equivalent series identity G(ab) = G(a)G(b).

    Returns:
        A failure names the first index and pair where the identity breaks
    """
    name = name or f'hasse-schmidt({j.name})'
    algebra = j.algebra
    count = 0
    for a, b in samples:
        a, b = algebra.coerce(a), algebra.coerce(b)
        ja, jb, jab = j.components(a), j.components(b), j.components(a * b)
        for n in range(j.truncation + 1):
            total = algebra.zero()
            for i in range(n + 1):
                total = total + ja[i] * jb[n - i]
            if total != jab[n]:
                return failed(
                    name,
                    f'd_{n}(({a})*({b})) = {jab[n]} but the convolution gives {total}',
                    index=n,
                    pair=(a, b),
                )
        product = TruncatedSeries(tuple(ja)) * TruncatedSeries(tuple(jb))
        if product.as_list() != jab:
            return failed(name, f'G(({a})*({b})) differs from G({a})G({b})', pair=(a, b))
        count += 1
    return passed(name, None, samples=count)


def iterativity_check(
    j: HSFamily,
    samples: Iterable[Any],
    p: Optional[int] = None,
    name: Optional[str] = None,
) -> Certificate:
    """
    Certify d_i(d_j(a)) = C(i+j, i) d_(i+j)(a) for i + j <= N.

    Args:
        j: The family
        samples: Elements to test on
        p: Characteristic for the binomials (defaults to the algebra's)
    """
    name = name or f'iterative({j.name})'
    p = j.algebra.characteristic if p is None else p
    count = 0
    for a in samples:
        a = j.algebra.coerce(a)
        direct = j.components(a)
        for jj in range(1, j.truncation + 1):
            inner = j.components(direct[jj])
            for i in range(1, j.truncation - jj + 1):
                expected = j.algebra.scale(direct[i + jj], binomial(i + jj, i, p))
                if inner[i] != expected:
                    return failed(
                        name,
                        f'd_{i}(d_{jj}({a})) = {inner[i]} but C({i + jj},{i}) d_{i + jj}({a}) = {expected}',
                        indices=(i, jj),
                        sample=a,
                    )
        count += 1
    logger.debug('%s: %d samples iterative', name, count)
    return passed(name, None, samples=count)
