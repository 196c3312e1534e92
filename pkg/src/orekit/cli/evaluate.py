"""
Execution of parsed statements: definitions build orekit objects, asserts
produce certificates.
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..arith.field import FieldDescriptor
from ..arith.pth_power import PthPowerSubfield
from ..arith.ratfunc import RatFunc, ratfunc_eq
from ..certificate import Certificate, failed, passed
from ..config import default_truncation
from ..counterexample.checks import ansatz_obstruction
from ..errors import OrekitError, ScriptRuntimeError
from ..hasse_schmidt.algebra import FieldAlgebra, OreAlgebra
from ..hasse_schmidt.constructions import canonical_from_derivation, divided_power_jet
from ..hasse_schmidt.jet import JetHom, hs_axiom_check, iterativity_check, kernel_membership
from ..maps.automorphism import AutomorphismSpec
from ..maps.derivation import DerivationSpec, compose_power, derivation_equal_on_generators, first_generator_difference
from ..ore.centrality import is_central
from ..ore.element import OreElement
from ..ore.filtration import filtration_dims
from ..ore.hom import RingHomSpec, hom_apply, hom_check, ring_hom
from ..ore.ring import OreRingDescriptor
from ..slice.decompose import check_slice_condition
from .pretty import assert_to_text
from .statements import (
    AssertStmt,
    AutomorphismDef,
    BinOp,
    DerivationDef,
    ElementDef,
    Expr,
    FieldDef,
    HomDef,
    JetDef,
    Neg,
    Num,
    Pow,
    RingDef,
    Statement,
    Var,
)

logger = logging.getLogger(__name__)

RECOVERABLE = (OrekitError, ValueError, KeyError, ZeroDivisionError, TypeError)


@dataclass(frozen=True)
class FieldEntry:
    descriptor: FieldDescriptor
    polynomial: bool = False


@dataclass(frozen=True)
class ElementEntry:
    ambient: str
    value: Any


class ScriptEnvironment:
    """
    Named objects of a running script. Names are never rebound, so earlier
    objects can be shared with asserts evaluated later or on other threads.
    """

    def __init__(self) -> None:
        self.objects: Dict[str, Any] = {}
        self.ambient_of: Dict[str, str] = {}
        self.failed_names: Dict[str, str] = {}
        self.definition_map: Dict[str, Callable[[Any], Any]] = {
            'field': self._field,
            'derivation': self._derivation,
            'automorphism': self._automorphism,
            'ring': self._ring,
            'element': self._element,
            'hom': self._hom,
            'jet': self._jet,
        }

    # LOOKUP

    def get(self, name: str, kind: type, line: int = 0) -> Any:
        if name in self.failed_names:
            raise ScriptRuntimeError(f'{name!r} is unavailable: {self.failed_names[name]}', line)
        value = self.objects.get(name)
        if not isinstance(value, kind):
            raise ScriptRuntimeError(f'{name!r} is not a {kind.__name__}', line)
        return value

    def _ambient(self, name: str, line: int) -> Any:
        value = self.objects.get(name)
        if name in self.failed_names:
            raise ScriptRuntimeError(f'{name!r} is unavailable: {self.failed_names[name]}', line)
        if not isinstance(value, (FieldEntry, OreRingDescriptor)):
            raise ScriptRuntimeError(f'{name!r} is neither a field nor a ring', line)
        return value

    # EXPRESSIONS

    def evaluate(self, expr: Expr, ambient_name: str, line: int = 0) -> Any:
        """
        Value of `expr` in a field (a RatFunc) or an Ore ring (an OreElement).

        Raises:
            ScriptRuntimeError: unknown name, division by a non-unit, and the like
        """
        ambient = self._ambient(ambient_name, line)
        try:
            return self._evaluate(expr, ambient, line)
        except ScriptRuntimeError:
            raise
        except RECOVERABLE as error:
            raise ScriptRuntimeError(str(error), line) from error

    def _evaluate(self, expr: Expr, ambient: Any, line: int) -> Any:
        if isinstance(expr, Num):
            return self._scalar(ambient, expr.value)
        if isinstance(expr, Var):
            return self._name(ambient, expr.name, line)
        if isinstance(expr, Neg):
            return -self._evaluate(expr.operand, ambient, line)
        if isinstance(expr, Pow):
            base = self._evaluate(expr.base, ambient, line)
            if expr.exponent < 0:
                return self._invert(base, line) ** (-expr.exponent)
            return base ** expr.exponent
        if isinstance(expr, BinOp):
            left = self._evaluate(expr.left, ambient, line)
            right = self._evaluate(expr.right, ambient, line)
            if expr.op == '+':
                return left + right
            if expr.op == '-':
                return left - right
            if expr.op == '*':
                return left * right
            return left * self._invert(right, line)
        raise ScriptRuntimeError(f'cannot evaluate {expr!r}', line)

    @staticmethod
    def _scalar(ambient: Any, value: int) -> Any:
        if isinstance(ambient, FieldEntry):
            return RatFunc.constant(ambient.descriptor, value)
        return OreElement.scalar(ambient, value)

    def _invert(self, value: Any, line: int) -> Any:
        if isinstance(value, RatFunc):
            return value.inverse()
        if not value.is_scalar:
            raise ScriptRuntimeError(f'{value} is not a unit of {value.ring.name}', line)
        return OreElement.scalar(value.ring, value.scalar_value().inverse())

    def _name(self, ambient: Any, name: str, line: int) -> Any:
        if isinstance(ambient, FieldEntry):
            if ambient.descriptor.has_variable(name):
                return RatFunc.variable(ambient.descriptor, name)
        elif ambient.has_name(name):
            return OreElement.generator(ambient, name)
        entry = self.get(name, ElementEntry, line)
        return self._lift(entry.value, ambient, name, line)

    @staticmethod
    def _lift(value: Any, ambient: Any, name: str, line: int) -> Any:
        if isinstance(ambient, FieldEntry):
            if isinstance(value, OreElement):
                if not value.is_scalar:
                    raise ScriptRuntimeError(f'{name} = {value} does not lie in the field', line)
                value = value.scalar_value()
            if value.field != ambient.descriptor:
                raise ScriptRuntimeError(f'{name} lives over another field', line)
            return value
        if isinstance(value, RatFunc):
            return OreElement.scalar(ambient, value)
        if value.ring is not ambient:
            raise ScriptRuntimeError(f'{name} lies in {value.ring.name}, not in {ambient.name}', line)
        return value

    # DEFINITIONS

    def define(self, statement: Statement) -> Any:
        """
        Build and bind the object of a definition.

        Raises:
            ScriptRuntimeError: the object cannot be built; the name is then
                marked unavailable for later statements
        """
        try:
            value = self.definition_map[statement.kind](statement)
        except ScriptRuntimeError as error:
            self.failed_names[statement.name] = error.message
            raise
        except RECOVERABLE as error:
            self.failed_names[statement.name] = str(error)
            raise ScriptRuntimeError(str(error), statement.line) from error
        self.objects[statement.name] = value
        logger.debug('line %d: defined %s', statement.line, statement.name)
        return value

    def _field(self, s: FieldDef) -> FieldEntry:
        characteristic = 0 if s.prime == 'Q' else int(s.prime[1:])
        return FieldEntry(FieldDescriptor(characteristic, s.variables), s.polynomial)

    def _images(self, images, ambient: str, line: int) -> Dict[str, Any]:
        return {g: self.evaluate(e, ambient, line) for g, e in images}

    def _derivation(self, s: DerivationDef) -> DerivationSpec:
        if s.base is not None:
            base = self.get(s.base, DerivationSpec, s.line)
            self.ambient_of[s.name] = self.ambient_of[s.base]
            return compose_power(base, s.power).as_derivation(s.name)
        field = self.get(s.field, FieldEntry, s.line)
        self.ambient_of[s.name] = s.field
        return DerivationSpec.from_images(field.descriptor, self._images(s.images, s.field, s.line), s.name, fill_missing=0)

    def _automorphism(self, s: AutomorphismDef) -> AutomorphismSpec:
        field = self.get(s.field, FieldEntry, s.line)
        self.ambient_of[s.name] = s.field
        return AutomorphismSpec.from_images(field.descriptor, self._images(s.images, s.field, s.line), name=s.name)

    def _ring(self, s: RingDef) -> OreRingDescriptor:
        field = self.get(s.field, FieldEntry, s.line)
        sigma = self.get(s.sigma, AutomorphismSpec, s.line) if s.sigma else None
        delta = self.get(s.delta, DerivationSpec, s.line) if s.delta else None
        return OreRingDescriptor(field.descriptor, s.skew, sigma, delta, s.central, s.name)

    def _element(self, s: ElementDef) -> ElementEntry:
        return ElementEntry(s.ambient, self.evaluate(s.expr, s.ambient, s.line))

    def _hom(self, s: HomDef) -> RingHomSpec:
        source = self.get(s.source, OreRingDescriptor, s.line)
        target = self.get(s.target, OreRingDescriptor, s.line)
        images = self._images(s.images, s.target, s.line)
        var_images = {g: v for g, v in images.items() if g == source.skew_var or g in source.central_vars}
        coeff_images = {g: v for g, v in images.items() if g not in var_images}
        return ring_hom(source, target, var_images, coeff_images, s.name)

    def _jet(self, s: JetDef) -> JetHom:
        if s.construction == 'divided_power':
            source = self._ambient(s.source, s.line)
            if isinstance(source, FieldEntry):
                algebra: Any = FieldAlgebra(source.descriptor, source.polynomial)
            else:
                algebra = OreAlgebra(source)
            self.ambient_of[s.name] = s.source
            return divided_power_jet(algebra, list(s.variables), s.truncation, s.name)
        d = self.get(s.source, DerivationSpec, s.line)
        field_name = self.ambient_of[s.source]
        field = self.get(field_name, FieldEntry, s.line)
        p = d.field.characteristic
        # n! must stay invertible in characteristic p
        truncation = s.truncation or (p - 1 if p else default_truncation(0))
        self.ambient_of[s.name] = field_name
        return canonical_from_derivation(d, truncation, field.polynomial, s.name)

    # ASSERTS

    def check(self, statement: AssertStmt) -> Certificate:
        """
        Evaluate an assert. Runtime errors become failed certificates.
        """
        name = assert_to_text(statement)[len('assert '):]
        try:
            certificate = PREDICATE_MAP[statement.predicate](self, statement, name)
        except RECOVERABLE as error:
            message = error.message if isinstance(error, ScriptRuntimeError) else str(error)
            certificate = failed(name, f'line {statement.line}: {message}')
        except Exception as error:
            logger.exception('line %d: unexpected error in %s', statement.line, name)
            certificate = failed(name, f'line {statement.line}: {type(error).__name__}: {error}')
        if certificate.name != name:
            certificate = replace(certificate, name=name)
        return certificate

    def named(self, name: str, line: int) -> Any:
        if name in self.failed_names:
            raise ScriptRuntimeError(f'{name!r} is unavailable: {self.failed_names[name]}', line)
        value = self.objects.get(name)
        if value is None:
            raise ScriptRuntimeError(f'{name!r} is not defined', line)
        return value


def _named_args(env: ScriptEnvironment, statement: AssertStmt) -> List[Any]:
    values: List[Any] = []
    for arg in statement.args:
        expr = arg.expr
        if arg.ambient is not None:
            values.append(env.evaluate(expr, arg.ambient, statement.line))
        elif isinstance(expr, Num):
            values.append(expr.value)
        else:
            value = env.named(expr.name, statement.line)  # type: ignore[union-attr]
            values.append(value.value if isinstance(value, ElementEntry) else value)
    return values


def _central(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    (a,) = _named_args(env, s)
    if isinstance(a, RatFunc):
        return passed(name, 'field elements commute')
    return is_central(a, label=name)


def _equal(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    a, b = _named_args(env, s)
    if a == b:
        return passed(name)
    return failed(name, f'{a} != {b}')


def _unequal(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    a, b = _named_args(env, s)
    same = ratfunc_eq(a, b) if isinstance(a, RatFunc) and isinstance(b, RatFunc) else a == b
    if same:
        return failed(name, f'both sides equal {a}')
    return passed(name, f'{a} != {b}')


def _hom(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    (h,) = _named_args(env, s)
    return hom_check(h)


def _maps(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    h, a, b = _named_args(env, s)
    if not isinstance(h, RingHomSpec):
        raise ScriptRuntimeError(f'{h} is not a homomorphism', s.line)
    if isinstance(a, RatFunc):
        a = OreElement.scalar(h.source, a)
    if isinstance(b, RatFunc):
        b = OreElement.scalar(h.target, b)
    image = hom_apply(h, a)
    if image == b:
        return passed(name)
    return failed(name, f'{h.name}({a}) = {image}')


def _periodic(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    d, m, n = _named_args(env, s)
    lhs, rhs = compose_power(d, m), compose_power(d, n)
    if derivation_equal_on_generators(lhs, rhs):
        return passed(name)
    var, a, b = first_generator_difference(lhs, rhs)
    return failed(name, f'{d.name}^{m}({var}) = {a} but {d.name}^{n}({var}) = {b}')


def _obstruction(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    d, d_prime = _named_args(env, s)
    return ansatz_obstruction(d, d_prime, name)


def _generator_samples(j: JetHom) -> List[Any]:
    algebra = j.algebra
    generators = [algebra.generator(g) for g in algebra.generators()]
    return generators + [a * b for i, a in enumerate(generators) for b in generators[i:]]


def _hs_axioms(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    (j,) = _named_args(env, s)
    algebra = j.algebra
    generators = [algebra.generator(g) for g in algebra.generators()]
    pairs: List[Tuple[Any, Any]] = [(a, b) for a in generators for b in generators]
    return hs_axiom_check(j, pairs, name)


def _iterative(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    (j,) = _named_args(env, s)
    return iterativity_check(j, _generator_samples(j), name=name)


def _kernel(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    a, j = _named_args(env, s)
    if kernel_membership(j, a):
        return passed(name)
    components = j.components(a)
    first = next(i for i in range(1, len(components)) if not components[i].is_zero)
    return failed(name, f'd_{first}({a}) = {components[first]}')


def _slice(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    a, j = _named_args(env, s)
    return check_slice_condition(a, j)


def _filtration(env: ScriptEnvironment, s: AssertStmt, name: str) -> Certificate:
    ring, *expected = _named_args(env, s)
    dims = filtration_dims(ring, PthPowerSubfield(ring.coefficients), len(expected) - 1)
    if dims == expected:
        return passed(name, f'dims = {dims}')
    return failed(name, f'dims = {dims}, expected {expected}')


PREDICATE_MAP: Dict[str, Callable[[ScriptEnvironment, AssertStmt, str], Certificate]] = {
    'central': _central,
    'equal': _equal,
    'unequal': _unequal,
    'hom': _hom,
    'maps': _maps,
    'periodic': _periodic,
    'obstruction': _obstruction,
    'hs_axioms': _hs_axioms,
    'iterative': _iterative,
    'kernel': _kernel,
    'slice': _slice,
    'filtration': _filtration,
}


def execute(env: ScriptEnvironment, statement: Statement) -> Optional[Certificate]:
    """Run one statement: definitions return None, asserts their certificate."""
    if isinstance(statement, AssertStmt):
        return env.check(statement)
    env.define(statement)
    return None
