"""
The top nonvanishing index nu(a) = max{m : d_m(a) != 0} and the p-power
reduction of nu along an iterative family.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterable, List, Literal, Optional, Tuple

from ..arith.lucas import base_p_digits, is_power_of, lucas_binom, p_adic_valuation
from ..certificate import Certificate, failed, passed
from ..errors import ChainStallError, TruncationExhaustedError
from ..hasse_schmidt.jet import HSFamily

logger = logging.getLogger(__name__)

Branch = Literal['s1>=1', 's1=0']


def nu(a: Any, j: HSFamily, truncation: Optional[int] = None) -> int:
    """
    Largest m <= N with d_m(a) != 0; 0 for kernel elements, including a = 0.

    Raises:
        TruncationExhaustedError: d_N(a) != 0, so nu may exceed the truncation
    """
    n = j.truncation if truncation is None else min(truncation, j.truncation)
    components = j.components(a)[: n + 1]
    if n >= 1 and not components[n].is_zero:
        raise TruncationExhaustedError(f'd_{n}({a}) != 0: truncation {n} is too small to determine nu')
    for m in range(n, 0, -1):
        if not components[m].is_zero:
            return m
    return 0


@dataclass(frozen=True)
class NuReductionStep:
    index: int
    branch: Branch
    binomial: int
    nu_before: int
    nu_after: int


@dataclass(frozen=True)
class NuReductionChain:
    elements: Tuple[Any, ...]
    steps: Tuple[NuReductionStep, ...]
    initial_nu: int

    @property
    def start(self) -> Any:
        return self.elements[0]

    @property
    def end(self) -> Any:
        return self.elements[-1]

    @property
    def terminal_nu(self) -> int:
        return self.steps[-1].nu_after if self.steps else self.initial_nu

    def __len__(self) -> int:
        return len(self.steps)


def _next_step(m: int, p: int) -> Tuple[int, Branch, int]:
    """
    For nu = m = p^r * s with p not dividing s and s = s0 + p*s1, 0 < s0 < p:
    apply d_(p^r s0) when s1 >= 1, giving nu = p^(r+1) s1, else d_(p^r),
    giving nu = p^r (s0 - 1).

    Returns:
        (index to apply, branch, predicted nu afterwards)
    """
    r = p_adic_valuation(m, p)
    s = m // p ** r
    s0, s1 = s % p, s // p
    if s1 >= 1:
        index = p ** r * s0
        return index, 's1>=1', p ** (r + 1) * s1
    index = p ** r
    return index, 's1=0', p ** r * (s0 - 1)


def nu_reduce(a: Any, j: HSFamily, p: int) -> NuReductionChain:
    """
    Lower nu(a) to a power of p by applying components of an iterative family.

    Each step a' = d_i(a) has nu(a') = nu(a) - i because
    d_(nu-i) d_i (a) = C(nu, i) d_nu(a) with C(nu, i) != 0 mod p.

    Raises:
        ValueError: nu(a) = 0
        ChainStallError: some step does not reach the predicted nu
    """
    m = nu(a, j)
    if m == 0:
        raise ValueError(f'{a} lies in the kernel; nu reduction needs nu >= 1')
    initial = m
    elements = [j.algebra.coerce(a)]
    steps: List[NuReductionStep] = []
    while not is_power_of(m, p):
        index, branch, predicted = _next_step(m, p)
        coefficient = lucas_binom(m, index, p)
        if coefficient == 0:
            raise ChainStallError(f'C({m}, {index}) vanishes mod {p}')
        b = j.component(index, elements[-1])
        observed = nu(b, j)
        if observed != predicted:
            raise ChainStallError(
                f'd_{index} took nu from {m} to {observed}, expected {predicted}; the family is not iterative'
            )
        steps.append(NuReductionStep(index, branch, coefficient, m, observed))
        elements.append(b)
        logger.debug('nu reduction %d -> %d via d_%d (%s)', m, observed, index, branch)
        m = observed
    return NuReductionChain(tuple(elements), tuple(steps), initial)


def nonzero_digit_count(n: int, p: int) -> int:
    return sum(1 for d in base_p_digits(n, p) if d)


def minimal_positive_index(j: HSFamily) -> int:
    """The least i >= 1 with d_i nonzero on some generator (0 if every generator is in the kernel)."""
    best = 0
    for name in j.algebra.generators():
        components = j.components(j.algebra.generator(name))
        for i in range(1, len(components)):
            if not components[i].is_zero:
                best = i if best == 0 else min(best, i)
                break
    return best


def nu_divisibility(j: HSFamily, samples: Iterable[Any], p: int) -> Certificate:
    """
    For an iterative family whose least nonzero component is d_(p^r), certify
    that p^r divides nu(b) for every sample b.
    """
    name = f'nu divisibility({j.name})'
    q = minimal_positive_index(j)
    if q == 0:
        return passed(name, 'every generator lies in the kernel', modulus=1)
    if not is_power_of(q, p):
        return failed(name, f'the least nonzero component d_{q} is not indexed by a power of {p}')
    count = 0
    for b in samples:
        value = nu(b, j)
        if value % q:
            return failed(name, f'nu({b}) = {value} is not divisible by {q}', sample=b)
        count += 1
    return passed(name, f'{q} divides nu on {count} samples', modulus=q)
