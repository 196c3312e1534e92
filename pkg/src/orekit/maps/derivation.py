"""
Derivations of a rational function field, given by the images of the
generators and extended by the Leibniz and quotient rules.
"""

import logging
import threading
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..arith.field import FieldDescriptor
from ..arith.multipoly import MultiPoly
from ..arith.ratfunc import RatFunc
from ..certificate import Certificate, failed, passed
from ..errors import UnmappedGeneratorError

logger = logging.getLogger(__name__)

ImageLike = Union[RatFunc, MultiPoly, int, str]


def as_ratfunc(field: FieldDescriptor, value: ImageLike) -> RatFunc:
    if isinstance(value, RatFunc):
        field.require_same(value.field)
        return value
    if isinstance(value, MultiPoly):
        field.require_same(value.field)
        return RatFunc(value)
    if isinstance(value, str):
        return RatFunc.variable(field, value)
    return RatFunc.constant(field, value)


def images_from_mapping(
    field: FieldDescriptor,
    images: Mapping[str, ImageLike],
    fill_missing: Optional[ImageLike] = None,
) -> Tuple[RatFunc, ...]:
    """
    Order generator images by variable index.

    Args:
        field: The field whose generators are mapped
        images: variable name -> image
        fill_missing: image for unlisted generators; None makes them an error
    """
    for name in images:
        field.index(name)
    result = []
    for name in field.variables:
        if name in images:
            result.append(as_ratfunc(field, images[name]))
        elif fill_missing is not None:
            result.append(as_ratfunc(field, fill_missing))
        else:
            raise UnmappedGeneratorError(f'no image given for generator {name}')
    return tuple(result)


@dataclass(frozen=True, eq=False)
class DerivationSpec:
    """
    A derivation of `field` over its prime field.

    `images[i]` is the image of the i-th variable. In characteristic p the
    derivation vanishes on p-th powers automatically, so it is also linear
    over the subfield of p-th powers.
    """
    field: FieldDescriptor
    images: Tuple[RatFunc, ...]
    name: str = 'd'
    _orbit: Dict[int, Tuple[RatFunc, ...]] = dc_field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: threading.RLock = dc_field(default_factory=threading.RLock, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.images) != self.field.nvars:
            raise UnmappedGeneratorError(
                f'derivation {self.name} needs {self.field.nvars} generator images, got {len(self.images)}'
            )
        for image in self.images:
            self.field.require_same(image.field)
        self._orbit[0] = tuple(RatFunc.variable(self.field, i) for i in range(self.field.nvars))
        self._orbit[1] = self.images

    @classmethod
    def from_images(
        cls,
        field: FieldDescriptor,
        images: Mapping[str, ImageLike],
        name: str = 'd',
        fill_missing: Optional[ImageLike] = None,
    ) -> 'DerivationSpec':
        return cls(field, images_from_mapping(field, images, fill_missing), name)

    @classmethod
    def zero(cls, field: FieldDescriptor, name: str = '0') -> 'DerivationSpec':
        return cls(field, tuple(RatFunc.zero(field) for _ in field.variables), name)

    @property
    def is_zero(self) -> bool:
        return all(image.is_zero for image in self.images)

    def image_of(self, name: str) -> RatFunc:
        return self.images[self.field.index(name)]

    def generator_images(self, n: int = 1) -> Tuple[RatFunc, ...]:
        """Images of the generators under the n-th power, memoized per power."""
        if n < 0:
            raise ValueError('negative power of a derivation')
        with self._lock:
            if n not in self._orbit:
                known = max(k for k in self._orbit if k <= n)
                images = self._orbit[known]
                for k in range(known + 1, n + 1):
                    images = tuple(apply_derivation(self, g) for g in images)
                    self._orbit[k] = images
                logger.debug('%s: generator orbit extended to power %d', self.name, n)
            return self._orbit[n]

    def __call__(self, f: ImageLike) -> RatFunc:
        return apply_derivation(self, as_ratfunc(self.field, f))

    def __str__(self) -> str:
        pairs = ', '.join(f'{v} -> {img}' for v, img in zip(self.field.variables, self.images))
        return f'{self.name} on {self.field}: {pairs}'


def _apply_to_polynomial(d: DerivationSpec, u: MultiPoly) -> RatFunc:
    total = RatFunc.zero(d.field)
    for i in u.variables_used():
        image = d.images[i]
        if image.is_zero:
            continue
        total = total + image * u.partial_derivative(i)
    return total


def apply_derivation(d: DerivationSpec, f: RatFunc) -> RatFunc:
    """
    Apply a derivation to a rational function.

    On a fraction u/v the quotient rule gives (d(u)v - u d(v)) / v^2.

    Args:
        d: The derivation
        f: An element of d.field

    Returns:
        d(f)
    """
    d.field.require_same(f.field)
    if f.is_zero or f.is_constant:
        return RatFunc.zero(d.field)
    u, v = f.numerator, f.denominator
    du = _apply_to_polynomial(d, u)
    if v.is_constant:
        return du
    dv = _apply_to_polynomial(d, v)
    v_frac = RatFunc(v)
    return (du * v_frac - dv * RatFunc(u)) / (v_frac * v_frac)


@dataclass(frozen=True)
class DerivationPower:
    """The n-fold composite of a derivation, applied by repetition."""
    base: DerivationSpec
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError('negative power of a derivation')

    @property
    def field(self) -> FieldDescriptor:
        return self.base.field

    @property
    def name(self) -> str:
        return f'{self.base.name}^{self.n}'

    def generator_images(self) -> Tuple[RatFunc, ...]:
        return self.base.generator_images(self.n)

    def __call__(self, f: ImageLike) -> RatFunc:
        value = as_ratfunc(self.field, f)
        for _ in range(self.n):
            if value.is_zero:
                break
            value = apply_derivation(self.base, value)
        return value

    @property
    def is_derivation(self) -> bool:
        """True for n = 1 and, in characteristic p, for every power of p."""
        p = self.field.characteristic
        if self.n == 1:
            return True
        if not p or self.n == 0:
            return False
        n = self.n
        while n % p == 0:
            n //= p
        return n == 1

    def as_derivation(self, name: Optional[str] = None) -> DerivationSpec:
        """
        The power as a `DerivationSpec` with memoized generator images.

        Raises:
            ValueError: the power is not itself a derivation
        """
        if not self.is_derivation:
            raise ValueError(f'{self.name} is not a derivation')
        return DerivationSpec(self.field, self.generator_images(), name or self.name)


def compose_power(d: DerivationSpec, n: int) -> DerivationPower:
    return DerivationPower(d, n)


GeneratorMap = Union[DerivationSpec, DerivationPower]


def _generator_images(m: GeneratorMap) -> Sequence[RatFunc]:
    return m.generator_images() if isinstance(m, DerivationPower) else m.images


def derivation_equal_on_generators(d1: GeneratorMap, d2: GeneratorMap) -> bool:
    """
    Equality of derivations, defined as agreement on every generator.

    For derivations that vanish on the prime field this is equality of maps.
    """
    d1.field.require_same(d2.field)
    return all(a == b for a, b in zip(_generator_images(d1), _generator_images(d2)))


def first_generator_difference(d1: GeneratorMap, d2: GeneratorMap) -> Optional[Tuple[str, RatFunc, RatFunc]]:
    d1.field.require_same(d2.field)
    for name, a, b in zip(d1.field.variables, _generator_images(d1), _generator_images(d2)):
        if a != b:
            return name, a, b
    return None


def check_leibniz(d: GeneratorMap, pairs: Iterable[Tuple[RatFunc, RatFunc]], name: str = 'leibniz') -> Certificate:
    """Check d(fg) = d(f)g + f d(g) on sample pairs."""
    checked = 0
    for f, g in pairs:
        lhs = d(f * g)
        rhs = d(f) * g + f * d(g)
        if lhs != rhs:
            return failed(name, f'{d.name}(({f})*({g})) = {lhs} but the Leibniz rule gives {rhs}', pair=(f, g))
        checked += 1
    return passed(name, None, samples=checked)


def check_kills_pth_powers(d: GeneratorMap, samples: Iterable[RatFunc], name: str = 'kills p-th powers') -> Certificate:
    p = d.field.characteristic
    if not p:
        raise ValueError('p-th powers need positive characteristic')
    checked: List[RatFunc] = []
    for f in samples:
        value = d(f ** p)
        if not value.is_zero:
            return failed(name, f'{d.name}(({f})^{p}) = {value}', sample=f)
        checked.append(f)
    return passed(name, None, samples=len(checked))
