"""
Print scripts back as text. Parsing the output gives the same statements,
so `parse -> pretty -> parse` is a fixed point.
"""

from typing import Callable, Dict, Text, Tuple

from .statements import (
    Arg,
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
    Script,
    Statement,
    Var,
)

PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2}


def format_expr(expr: Expr, context: int = 0) -> str:
    """
    Args:
        expr: The expression
        context: Binding strength of the surrounding operator; the result
            is parenthesized when it binds more loosely
    """
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Neg):
        text = f'-{format_expr(expr.operand, 2)}'
        return f'({text})' if context > 0 else text
    if isinstance(expr, Pow):
        return f'{format_expr(expr.base, 3)}^{expr.exponent}'
    if isinstance(expr, BinOp):
        level = PRECEDENCE[expr.op]
        left = format_expr(expr.left, level)
        # left-associative: a right operand of equal strength needs parentheses
        right = format_expr(expr.right, level + 1)
        text = f'{left} {expr.op} {right}'
        return f'({text})' if level < context else text
    raise TypeError(f'not an expression: {expr!r}')


def _images(images: Tuple[Tuple[str, Expr], ...]) -> str:
    return ', '.join(f'{g} -> {format_expr(e)}' for g, e in images)


def field_to_text(s: FieldDef) -> Text:
    constructor = 'poly' if s.polynomial else 'ratfunc'
    inner = f"{s.prime}; {', '.join(s.variables)}" if s.variables else s.prime
    return f'field {s.name} = {constructor}({inner})'


def derivation_to_text(s: DerivationDef) -> Text:
    if s.base is not None:
        return f'derivation {s.name} = {s.base}^{s.power}'
    return f'derivation {s.name} on {s.field}: {_images(s.images)}'.rstrip()


def automorphism_to_text(s: AutomorphismDef) -> Text:
    return f'automorphism {s.name} on {s.field}: {_images(s.images)}'.rstrip()


def ring_to_text(s: RingDef) -> Text:
    options = [f'{k}={v}' for k, v in (('sigma', s.sigma), ('delta', s.delta)) if v]
    skew = f"{s.skew}; {', '.join(options)}" if options else s.skew
    text = f'ring {s.name} = {s.field}[{skew}]'
    if s.central:
        text += f"[{', '.join(s.central)}]"
    return text


def element_to_text(s: ElementDef) -> Text:
    return f'element {s.name} = {format_expr(s.expr)} in {s.ambient}'


def hom_to_text(s: HomDef) -> Text:
    return f'hom {s.name}: {s.source} -> {s.target}: {_images(s.images)}'.rstrip()


def jet_to_text(s: JetDef) -> Text:
    if s.construction == 'divided_power':
        text = f"jet {s.name} = divided_power({s.source}; {', '.join(s.variables)})"
    else:
        text = f'jet {s.name} = {s.construction}({s.source})'
    if s.truncation is not None:
        text += f' truncation {s.truncation}'
    return text


def format_arg(arg: Arg) -> str:
    text = format_expr(arg.expr)
    return f'{text} in {arg.ambient}' if arg.ambient else text


def assert_to_text(s: AssertStmt) -> Text:
    return f"assert {s.predicate}({', '.join(format_arg(a) for a in s.args)})"


FORMATTER_MAP: Dict[str, Callable[..., Text]] = {
    'field': field_to_text,
    'derivation': derivation_to_text,
    'automorphism': automorphism_to_text,
    'ring': ring_to_text,
    'element': element_to_text,
    'hom': hom_to_text,
    'jet': jet_to_text,
    'assert': assert_to_text,
}


def statement_to_text(statement: Statement) -> Text:
    return FORMATTER_MAP[statement.kind](statement)


def script_to_text(script: Script) -> Text:
    """One statement per line; comments and blank lines are not kept."""
    return ''.join(statement_to_text(s) + '\n' for s in script.statements)
