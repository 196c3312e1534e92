"""
Automorphisms of a rational function field over its prime field, given by
the images of the generators and extended multiplicatively.
"""

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Tuple

from ..arith.field import FieldDescriptor
from ..arith.ratfunc import RatFunc
from ..certificate import Certificate, failed, passed
from .derivation import ImageLike, as_ratfunc, images_from_mapping


@dataclass(frozen=True, eq=False)
class AutomorphismSpec:
    field: FieldDescriptor
    images: Tuple[RatFunc, ...]
    inverse_images: Optional[Tuple[RatFunc, ...]] = None
    name: str = 's'

    def __post_init__(self) -> None:
        if len(self.images) != self.field.nvars:
            raise ValueError(f'automorphism {self.name} needs {self.field.nvars} generator images')
        if self.inverse_images is not None and len(self.inverse_images) != self.field.nvars:
            raise ValueError(f'inverse of {self.name} needs {self.field.nvars} generator images')

    @classmethod
    def from_images(
        cls,
        field: FieldDescriptor,
        images: Mapping[str, ImageLike],
        inverse_images: Optional[Mapping[str, ImageLike]] = None,
        name: str = 's',
    ) -> 'AutomorphismSpec':
        """Unlisted generators are fixed."""
        fixed = {v: RatFunc.variable(field, v) for v in field.variables}
        forward = images_from_mapping(field, {**fixed, **images})
        backward = None
        if inverse_images is not None:
            backward = images_from_mapping(field, {**fixed, **inverse_images})
        return cls(field, forward, backward, name)

    @property
    def is_identity(self) -> bool:
        return all(img == RatFunc.variable(self.field, i) for i, img in enumerate(self.images))

    def inverse(self) -> 'AutomorphismSpec':
        if self.inverse_images is None:
            raise ValueError(f'no inverse images were supplied for {self.name}')
        return AutomorphismSpec(self.field, self.inverse_images, self.images, f'{self.name}^-1')

    def __call__(self, f: ImageLike) -> RatFunc:
        return apply_automorphism(self, as_ratfunc(self.field, f))

    def __str__(self) -> str:
        pairs = ', '.join(f'{v} -> {img}' for v, img in zip(self.field.variables, self.images))
        return f'{self.name} on {self.field}: {pairs}'


def identity_automorphism(field: FieldDescriptor) -> AutomorphismSpec:
    images = tuple(RatFunc.variable(field, i) for i in range(field.nvars))
    return AutomorphismSpec(field, images, images, 'id')


def _substitute(images: Tuple[RatFunc, ...], f: RatFunc) -> RatFunc:
    field = f.field
    mapping = dict(enumerate(images))

    def scalar(c):
        return RatFunc.constant(field, c)

    num = f.numerator.evaluate(mapping, scalar)
    if f.denominator.is_constant:
        return num
    return num / f.denominator.evaluate(mapping, scalar)


def apply_automorphism(s: AutomorphismSpec, f: RatFunc) -> RatFunc:
    s.field.require_same(f.field)
    return _substitute(s.images, f)


def compose_automorphisms(outer: AutomorphismSpec, inner: AutomorphismSpec) -> AutomorphismSpec:
    """outer o inner: x_i -> outer(inner(x_i))."""
    outer.field.require_same(inner.field)
    images = tuple(apply_automorphism(outer, img) for img in inner.images)
    inverse = None
    if outer.inverse_images is not None and inner.inverse_images is not None:
        inverse = tuple(_substitute(inner.inverse_images, img) for img in outer.inverse_images)
    return AutomorphismSpec(outer.field, images, inverse, f'{outer.name}*{inner.name}')


def inverse_check(s: AutomorphismSpec) -> Certificate:
    """Both composites of s with its supplied inverse fix every generator."""
    name = f'inverse of {s.name}'
    if s.inverse_images is None:
        return failed(name, 'no inverse images supplied')
    for i, var in enumerate(s.field.variables):
        x = RatFunc.variable(s.field, i)
        there = _substitute(s.images, s.inverse_images[i])
        back = _substitute(s.inverse_images, s.images[i])
        if there != x:
            return failed(name, f'{s.name}({s.name}^-1({var})) = {there}', generator=var)
        if back != x:
            return failed(name, f'{s.name}^-1({s.name}({var})) = {back}', generator=var)
    return passed(name)


def check_multiplicative(s: AutomorphismSpec, pairs: Iterable[Tuple[RatFunc, RatFunc]]) -> Certificate:
    name = f'{s.name} is a homomorphism'
    count = 0
    for f, g in pairs:
        if s(f * g) != s(f) * s(g):
            return failed(name, f'{s.name}(({f})*({g})) differs from the product of images', pair=(f, g))
        if s(f + g) != s(f) + s(g):
            return failed(name, f'{s.name}(({f})+({g})) differs from the sum of images', pair=(f, g))
        count += 1
    return passed(name, None, samples=count)
