"""
Iterative Hasse-Schmidt families in characteristic p, generated by the
components d_1, d_p, d_(p^2), ...

With i = i_0 + i_1 p + ... + i_r p^r in base p,
d_i = d_1^(i_0) d_p^(i_1) ... d_(p^r)^(i_r) / (i_0! i_1! ... i_r!),
and every digit factorial is a unit mod p.
"""

import logging
import threading
from dataclasses import dataclass, field as dc_field
from math import factorial
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from ..arith.field import is_prime
from ..arith.lucas import base_p_digits, is_power_of
from ..errors import JetError, NotPrimeError
from .algebra import Algebra, Element
from .jet import JetHom

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class IterativeHSSpec:
    """
    `component_images[j]` gives d_(p^j) on the generators; unlisted
    generators and components beyond the list map to zero.
    """
    algebra: Algebra
    p: int
    component_images: Sequence[Mapping[str, Element]]
    name: str = 'D'
    _jets: Dict[str, List[Element]] = dc_field(default_factory=dict, init=False, repr=False)
    _partial: Dict[int, JetHom] = dc_field(default_factory=dict, init=False, repr=False)
    _lock: threading.RLock = dc_field(default_factory=threading.RLock, init=False, repr=False)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrimeError(f'{self.p} is not prime')
        if self.algebra.characteristic != self.p:
            raise JetError(f'{self.name}: algebra has characteristic {self.algebra.characteristic}, not {self.p}')
        for images in self.component_images:
            unknown = set(images) - set(self.algebra.generators())
            if unknown:
                raise JetError(f'{self.name}: {sorted(unknown)} are not generators')
        for g in self.algebra.generators():
            self._jets[g] = [self.algebra.generator(g)]

    @property
    def truncation(self) -> int:
        with self._lock:
            return max((len(jet) for jet in self._jets.values()), default=1) - 1

    def _component_on_generator(self, j: int, g: str) -> Element:
        if j < len(self.component_images) and g in self.component_images[j]:
            return self.algebra.coerce(self.component_images[j][g])
        return self.algebra.zero()

    def _partial_jet(self, n: int) -> JetHom:
        """The jet truncated at index n, once every generator jet reaches n."""
        with self._lock:
            if n not in self._partial:
                self._ensure(n)
                jets = {g: values[: n + 1] for g, values in self._jets.items()}
                self._partial[n] = JetHom(self.algebra, n, jets, name=f'{self.name} mod t^{n + 1}')
            return self._partial[n]

    def power_component(self, j: int, a: Any) -> Element:
        """d_(p^j)(a)."""
        n = self.p ** j
        return self._partial_jet(n).component(n, a)

    def _ensure(self, n: int) -> None:
        """Extend every generator jet to index n."""
        with self._lock:
            for i in range(self.truncation + 1, n + 1):
                if is_power_of(i, self.p):
                    j = len(base_p_digits(i, self.p)) - 1
                    for g in self._jets:
                        self._jets[g].append(self._component_on_generator(j, g))
                else:
                    apply = iterative_from_components(self, i)
                    for g in self._jets:
                        self._jets[g].append(apply(self.algebra.generator(g)))
                logger.debug('%s: generator jets extended to index %d', self.name, i)

    def to_jet(self, truncation: int, name: Optional[str] = None) -> JetHom:
        """The full family up to `truncation` as a jet homomorphism."""
        with self._lock:
            self._ensure(truncation)
            jets = {g: values[: truncation + 1] for g, values in self._jets.items()}
        return JetHom(self.algebra, truncation, jets, name=name or self.name)


def iterative_from_components(spec: IterativeHSSpec, i: int) -> Callable[[Any], Element]:
    """
    The map d_i assembled from the components d_(p^j).

    The highest component is applied first; the result is divided by the
    digit factorials in F_p.

    Args:
        spec: The generating components
        i: Index of the wanted map

    Returns:
        A function a -> d_i(a)
    """
    if i < 0:
        raise ValueError('negative index')
    p = spec.p
    digits = base_p_digits(i, p)
    denominator = 1
    for digit in digits:
        denominator = denominator * factorial(digit) % p
    unit = pow(denominator, -1, p)
    algebra = spec.algebra

    def apply(a: Any) -> Element:
        value = algebra.coerce(a)
        for j in reversed(range(len(digits))):
            for _ in range(digits[j]):
                if value.is_zero:
                    return value
                value = spec.power_component(j, value)
        return algebra.scale(value, unit) if unit != 1 else value

    return apply
