import threading
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from ..arith.field import FieldDescriptor
from ..arith.ratfunc import RatFunc
from ..maps.automorphism import AutomorphismSpec
from ..maps.derivation import DerivationSpec


@dataclass(frozen=True, eq=False)
class OreRingDescriptor:
    """
    The ring K[x; sigma, delta][t1..td].

    Multiplication follows x*r = sigma(r)*x + delta(r) for r in K; the central
    variables commute with everything. A missing sigma means the identity,
    a missing delta the zero derivation. With sigma != id, delta must be a
    sigma-derivation on the generators. Descriptors compare by identity.
    """
    coefficients: FieldDescriptor
    skew_var: str = 'x'
    sigma: Optional[AutomorphismSpec] = None
    delta: Optional[DerivationSpec] = None
    central_vars: Tuple[str, ...] = ()
    name: str = 'A'
    _reduced: Dict[Tuple[str, ...], 'OreRingDescriptor'] = dc_field(
        default_factory=dict, init=False, repr=False, compare=False
    )
    _lock: threading.Lock = dc_field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        central = tuple(self.central_vars)
        object.__setattr__(self, 'central_vars', central)
        names = [*self.coefficients.variables, self.skew_var, *central]
        if len(set(names)) != len(names):
            raise ValueError(f'ring {self.name}: skew, central and coefficient variable names must be distinct: {names}')
        if self.sigma is not None:
            self.coefficients.require_same(self.sigma.field)
        if self.delta is not None:
            self.coefficients.require_same(self.delta.field)
        if not self.is_differential and self.delta is not None and not self.delta.is_zero:
            pair = twisted_leibniz_failure(self.sigma, self.delta)
            if pair is not None:
                a, b = pair
                raise ValueError(
                    f'ring {self.name}: {self.delta.name} is not a {self.sigma.name}-derivation, '
                    f'{self.delta.name}({a}*{b}) != {self.sigma.name}({a})*{self.delta.name}({b}) + {self.delta.name}({a})*{b}'
                )

    @property
    def characteristic(self) -> int:
        return self.coefficients.characteristic

    @property
    def is_differential(self) -> bool:
        """sigma is the identity."""
        return self.sigma is None or self.sigma.is_identity

    @property
    def is_commutative_extension(self) -> bool:
        """sigma = id and delta = 0, so x commutes with K."""
        return self.is_differential and (self.delta is None or self.delta.is_zero)

    @property
    def ncentral(self) -> int:
        return len(self.central_vars)

    def central_index(self, name: str) -> int:
        try:
            return self.central_vars.index(name)
        except ValueError:
            raise KeyError(f'{name!r} is not a central variable of {self.name}') from None

    def generators(self) -> List[Tuple[str, str]]:
        """(kind, name) for every generator: coefficient variables, the skew variable, central variables."""
        return (
            [('coefficient', v) for v in self.coefficients.variables]
            + [('skew', self.skew_var)]
            + [('central', t) for t in self.central_vars]
        )

    def has_name(self, name: str) -> bool:
        return name == self.skew_var or name in self.central_vars or self.coefficients.has_variable(name)

    def without_central(self, names: Sequence[str]) -> 'OreRingDescriptor':
        """The same Ore ring with the listed central variables removed (memoized)."""
        key = tuple(names)
        for name in key:
            self.central_index(name)
        with self._lock:
            if key not in self._reduced:
                kept = tuple(t for t in self.central_vars if t not in key)
                self._reduced[key] = OreRingDescriptor(
                    self.coefficients, self.skew_var, self.sigma, self.delta, kept, self.name
                )
            return self._reduced[key]

    def __str__(self) -> str:
        parts = [str(self.coefficients), self.skew_var]
        if self.sigma is not None and not self.sigma.is_identity:
            parts.append(f'sigma={self.sigma.name}')
        if self.delta is not None and not self.delta.is_zero:
            parts.append(f'delta={self.delta.name}')
        text = f"{self.name} = {parts[0]}[{'; '.join(parts[1:])}]"
        if self.central_vars:
            text += f"[{', '.join(self.central_vars)}]"
        return text


def twisted_leibniz_failure(sigma: AutomorphismSpec, delta: DerivationSpec) -> Optional[Tuple[str, str]]:
    """
    First pair of generators (a, b) with delta(ab) != sigma(a)delta(b) + delta(a)b.

    `delta` extends its generator images by the ordinary Leibniz rule, so a
    nonzero delta passes only when sigma fixes every generator.
    """
    field = delta.field
    generators = [(name, RatFunc.variable(field, name)) for name in field.variables]
    for a_name, a in generators:
        for b_name, b in generators:
            if delta(a * b) != sigma(a) * delta(b) + delta(a) * b:
                return a_name, b_name
    return None
