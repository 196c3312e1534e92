"""
Syntax tree of orekit scripts.

Every statement remembers its 1-based line so that runtime failures can
point back into the script.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional, Tuple, Union

from .statement_kinds import PredicateKinds, StatementKinds


# EXPRESSIONS

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: 'Expr'


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: 'Expr'
    right: 'Expr'


@dataclass(frozen=True)
class Pow:
    base: 'Expr'
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]


@dataclass(frozen=True)
class Arg:
    """A predicate argument: an expression, optionally with its ambient ring or field."""
    expr: Expr
    ambient: Optional[str] = None


# STATEMENTS

@dataclass(frozen=True)
class FieldDef:
    name: str
    prime: str
    variables: Tuple[str, ...]
    polynomial: bool = False
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'field'


@dataclass(frozen=True)
class DerivationDef:
    """Either images on a field, or a power `base^power` of an earlier derivation."""
    name: str
    field: Optional[str] = None
    images: Tuple[Tuple[str, Expr], ...] = ()
    base: Optional[str] = None
    power: int = 1
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'derivation'


@dataclass(frozen=True)
class AutomorphismDef:
    name: str
    field: str
    images: Tuple[Tuple[str, Expr], ...] = ()
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'automorphism'


@dataclass(frozen=True)
class RingDef:
    name: str
    field: str
    skew: str
    sigma: Optional[str] = None
    delta: Optional[str] = None
    central: Tuple[str, ...] = ()
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'ring'


@dataclass(frozen=True)
class ElementDef:
    name: str
    expr: Expr
    ambient: str
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'element'


@dataclass(frozen=True)
class HomDef:
    name: str
    source: str
    target: str
    images: Tuple[Tuple[str, Expr], ...] = ()
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'hom'


@dataclass(frozen=True)
class JetDef:
    """`divided_power(ALGEBRA; vars)` or `canonical(DERIVATION)`, with an optional truncation."""
    name: str
    construction: str
    source: str
    variables: Tuple[str, ...] = ()
    truncation: Optional[int] = None
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'jet'


@dataclass(frozen=True)
class AssertStmt:
    predicate: PredicateKinds
    args: Tuple[Arg, ...]
    line: int = dc_field(default=0, compare=False)
    kind: StatementKinds = 'assert'


Statement = Union[FieldDef, DerivationDef, AutomorphismDef, RingDef, ElementDef, HomDef, JetDef, AssertStmt]


@dataclass(frozen=True)
class Script:
    statements: Tuple[Statement, ...] = ()

    def __len__(self) -> int:
        return len(self.statements)

    def asserts(self) -> Tuple[AssertStmt, ...]:
        return tuple(s for s in self.statements if isinstance(s, AssertStmt))
