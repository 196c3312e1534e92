"""
Line-oriented parser for orekit scripts.

One statement per line; `#` starts a comment. Statements:

    field K = ratfunc(F2; x1, x2, x3)        # or poly(...), prime field Q or F<p>
    derivation d on K: x1 -> x2, x2 -> x3    # unlisted generators map to 0
    derivation e = d^2
    automorphism s on K: x1 -> x2, x2 -> x1  # unlisted generators are fixed
    ring A = K[x; delta=d][t]                # options sigma=..., delta=...; central vars optional
    element z = x^4 - x in A
    hom Phi: A -> B: x -> x'^2 + t', t -> x'^4 - x' + t'^2
    jet D = divided_power(A; t) truncation 8
    jet E = canonical(d) truncation 1
    assert central(z)
"""

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from ..errors import DuplicateNameError, ScriptSyntaxError, UndefinedNameError
from .lexer import Token, strip_comment, tokenize_line
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

RESERVED = frozenset({'in', 'on', 'truncation'})

JET_CONSTRUCTIONS = ('divided_power', 'canonical')

# argument kinds per predicate; a trailing '*' repeats the last kind
PREDICATE_SIGNATURES: Dict[str, Tuple[str, ...]] = {
    'central': ('expr',),
    'equal': ('expr', 'expr'),
    'unequal': ('expr', 'expr'),
    'hom': ('hom',),
    'maps': ('hom', 'expr', 'expr'),
    'periodic': ('derivation', 'int', 'int'),
    'obstruction': ('derivation', 'derivation'),
    'hs_axioms': ('jet',),
    'iterative': ('jet',),
    'kernel': ('expr', 'jet'),
    'slice': ('expr', 'jet'),
    'filtration': ('ring', 'int', 'int*'),
}


@dataclass(frozen=True)
class Symbol:
    kind: str
    generators: FrozenSet[str] = frozenset()
    ambient: Optional[str] = None


def is_prime_field_label(label: str) -> bool:
    return label == 'Q' or (label.startswith('F') and label[1:].isdigit())


class _Cursor:
    def __init__(self, tokens: List[Token]) -> None:
        self.tokens = tokens
        self.position = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.position + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        token = self.peek()
        if token.kind != 'end':
            self.position += 1
        return token

    def error(self, message: str, token: Optional[Token] = None) -> ScriptSyntaxError:
        token = token or self.peek()
        return ScriptSyntaxError(message, token.line, token.column)

    def expect_op(self, text: str) -> Token:
        token = self.peek()
        if not token.is_op(text):
            found = token.text or 'end of line'
            raise self.error(f'expected {text!r}, found {found!r}')
        return self.next()

    def accept_op(self, text: str) -> bool:
        if self.peek().is_op(text):
            self.next()
            return True
        return False

    def expect_name(self, what: str = 'a name') -> Token:
        token = self.peek()
        if token.kind != 'name':
            raise self.error(f'expected {what}, found {token.text or "end of line"!r}')
        return self.next()

    def expect_keyword(self, word: str) -> Token:
        token = self.peek()
        if not token.is_name(word):
            raise self.error(f'expected {word!r}, found {token.text or "end of line"!r}')
        return self.next()

    def expect_int(self) -> int:
        token = self.peek()
        if token.kind != 'int':
            raise self.error(f'expected an integer, found {token.text or "end of line"!r}')
        self.next()
        return int(token.text)

    def expect_end(self) -> None:
        token = self.peek()
        if token.kind != 'end':
            raise self.error(f'unexpected {token.text!r}')


class ScriptParser:
    """
    Parses a script statement by statement, keeping a symbol table so that
    names are checked where they are used.
    """

    def __init__(self) -> None:
        self.symbols: Dict[str, Symbol] = {}
        self.statement_map: Dict[str, Callable[[_Cursor, int], Statement]] = {
            'field': self._field,
            'derivation': self._derivation,
            'automorphism': self._automorphism,
            'ring': self._ring,
            'element': self._element,
            'hom': self._hom,
            'jet': self._jet,
            'assert': self._assert,
        }

    # ENTRY POINTS

    def parse(self, text: str) -> Script:
        statements: List[Statement] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = strip_comment(raw)
            if not line.strip():
                continue
            statements.append(self.parse_line(line, number))
        return Script(tuple(statements))

    def parse_line(self, line: str, number: int = 1) -> Statement:
        cursor = _Cursor(tokenize_line(line, number))
        keyword = cursor.peek()
        if keyword.kind != 'name' or keyword.text not in self.statement_map:
            raise cursor.error(f'unknown statement {keyword.text!r}', keyword)
        cursor.next()
        statement = self.statement_map[keyword.text](cursor, number)
        cursor.expect_end()
        return statement

    # SYMBOLS

    def _define(self, token: Token, symbol: Symbol) -> str:
        name = token.text
        if name in RESERVED:
            raise ScriptSyntaxError(f'{name!r} is a reserved word', token.line, token.column)
        if name in self.symbols:
            raise DuplicateNameError(f'{name!r} is already defined as a {self.symbols[name].kind}', token.line, token.column)
        self.symbols[name] = symbol
        return name

    def _lookup(self, token: Token, *kinds: str) -> Symbol:
        symbol = self.symbols.get(token.text)
        if symbol is None:
            raise UndefinedNameError(f'{token.text!r} is not defined', token.line, token.column)
        if kinds and symbol.kind not in kinds:
            raise ScriptSyntaxError(
                f"{token.text!r} is a {symbol.kind}, expected {' or '.join(kinds)}", token.line, token.column
            )
        return symbol

    def _check_names(self, names: List[Token], ambient: Optional[str]) -> None:
        generators = self.symbols[ambient].generators if ambient else frozenset()
        for token in names:
            if token.text in generators:
                continue
            symbol = self.symbols.get(token.text)
            if symbol is None:
                where = f' in {ambient}' if ambient else ''
                raise UndefinedNameError(f'{token.text!r} is not defined{where}', token.line, token.column)
            if symbol.kind != 'element':
                raise ScriptSyntaxError(f'{token.text!r} is a {symbol.kind}, not an element', token.line, token.column)

    # EXPRESSIONS

    def _expression(self, cursor: _Cursor) -> Tuple[Expr, List[Token]]:
        names: List[Token] = []
        return self._sum(cursor, names), names

    def _sum(self, cursor: _Cursor, names: List[Token]) -> Expr:
        if cursor.accept_op('-'):
            left: Expr = Neg(self._product(cursor, names))
        else:
            cursor.accept_op('+')
            left = self._product(cursor, names)
        while cursor.peek().is_op('+') or cursor.peek().is_op('-'):
            op = cursor.next().text
            left = BinOp(op, left, self._product(cursor, names))
        return left

    def _product(self, cursor: _Cursor, names: List[Token]) -> Expr:
        left = self._power(cursor, names)
        while cursor.peek().is_op('*') or cursor.peek().is_op('/'):
            op = cursor.next().text
            left = BinOp(op, left, self._power(cursor, names))
        return left

    def _power(self, cursor: _Cursor, names: List[Token]) -> Expr:
        base = self._atom(cursor, names)
        while cursor.accept_op('^'):
            negative = cursor.accept_op('-')
            exponent = cursor.expect_int()
            base = Pow(base, -exponent if negative else exponent)
        return base

    def _atom(self, cursor: _Cursor, names: List[Token]) -> Expr:
        token = cursor.peek()
        if token.kind == 'int':
            cursor.next()
            return Num(int(token.text))
        if token.kind == 'name' and token.text not in RESERVED:
            cursor.next()
            names.append(token)
            return Var(token.text)
        if cursor.accept_op('('):
            inner = self._sum(cursor, names)
            cursor.expect_op(')')
            return inner
        if cursor.peek().is_op('-'):
            raise cursor.error('a sign must start a sum or sit inside parentheses')
        raise cursor.error(f'expected an expression, found {token.text or "end of line"!r}')

    def _images(self, cursor: _Cursor, generators: FrozenSet[str], ambient: str) -> Tuple[Tuple[str, Expr], ...]:
        """`g -> expr, g -> expr, ...` up to the end of the line."""
        images: List[Tuple[str, Expr]] = []
        seen = set()
        if cursor.peek().kind == 'end':
            return ()
        while True:
            token = cursor.expect_name('a generator')
            if token.text not in generators:
                raise UndefinedNameError(f'{token.text!r} is not a generator here', token.line, token.column)
            if token.text in seen:
                raise DuplicateNameError(f'{token.text!r} is mapped twice', token.line, token.column)
            seen.add(token.text)
            cursor.expect_op('->')
            expr, names = self._expression(cursor)
            self._check_names(names, ambient)
            images.append((token.text, expr))
            if not cursor.accept_op(','):
                return tuple(images)

    def _name_list(self, cursor: _Cursor, closing: str) -> Tuple[str, ...]:
        names: List[str] = []
        seen = set()
        if cursor.peek().is_op(closing):
            return ()
        while True:
            token = cursor.expect_name('a variable name')
            if token.text in seen:
                raise DuplicateNameError(f'variable {token.text!r} is listed twice', token.line, token.column)
            seen.add(token.text)
            names.append(token.text)
            if not cursor.accept_op(','):
                return tuple(names)

    # STATEMENTS

    def _field(self, cursor: _Cursor, line: int) -> FieldDef:
        name_token = cursor.expect_name('a field name')
        cursor.expect_op('=')
        constructor = cursor.expect_name("'ratfunc' or 'poly'")
        if constructor.text not in ('ratfunc', 'poly'):
            raise cursor.error(f"expected 'ratfunc' or 'poly', found {constructor.text!r}", constructor)
        cursor.expect_op('(')
        prime = cursor.expect_name('a prime field (Q or F<p>)')
        if not is_prime_field_label(prime.text):
            raise cursor.error(f'{prime.text!r} is not a prime field label', prime)
        variables: Tuple[str, ...] = ()
        if cursor.accept_op(';'):
            variables = self._name_list(cursor, ')')
        cursor.expect_op(')')
        name = self._define(name_token, Symbol('field', frozenset(variables)))
        return FieldDef(name, prime.text, variables, constructor.text == 'poly', line)

    def _derivation(self, cursor: _Cursor, line: int) -> DerivationDef:
        name_token = cursor.expect_name('a derivation name')
        if cursor.accept_op('='):
            base_token = cursor.expect_name('a derivation')
            base = self._lookup(base_token, 'derivation')
            cursor.expect_op('^')
            power = cursor.expect_int()
            name = self._define(name_token, Symbol('derivation', ambient=base.ambient))
            return DerivationDef(name, base=base_token.text, power=power, line=line)
        cursor.expect_keyword('on')
        field_token = cursor.expect_name('a field')
        field = self._lookup(field_token, 'field')
        cursor.expect_op(':')
        images = self._images(cursor, field.generators, field_token.text)
        name = self._define(name_token, Symbol('derivation', ambient=field_token.text))
        return DerivationDef(name, field_token.text, images, line=line)

    def _automorphism(self, cursor: _Cursor, line: int) -> AutomorphismDef:
        name_token = cursor.expect_name('an automorphism name')
        cursor.expect_keyword('on')
        field_token = cursor.expect_name('a field')
        field = self._lookup(field_token, 'field')
        cursor.expect_op(':')
        images = self._images(cursor, field.generators, field_token.text)
        name = self._define(name_token, Symbol('automorphism', ambient=field_token.text))
        return AutomorphismDef(name, field_token.text, images, line)

    def _ring(self, cursor: _Cursor, line: int) -> RingDef:
        name_token = cursor.expect_name('a ring name')
        cursor.expect_op('=')
        field_token = cursor.expect_name('a field')
        field = self._lookup(field_token, 'field')
        cursor.expect_op('[')
        skew = cursor.expect_name('the skew variable')
        options: Dict[str, str] = {}
        if cursor.accept_op(';'):
            while True:
                key = cursor.expect_name("'sigma' or 'delta'")
                if key.text not in ('sigma', 'delta'):
                    raise cursor.error(f"expected 'sigma' or 'delta', found {key.text!r}", key)
                if key.text in options:
                    raise DuplicateNameError(f'{key.text} is given twice', key.line, key.column)
                cursor.expect_op('=')
                value = cursor.expect_name('a map name')
                self._lookup(value, 'automorphism' if key.text == 'sigma' else 'derivation')
                options[key.text] = value.text
                if not cursor.accept_op(','):
                    break
        cursor.expect_op(']')
        central: Tuple[str, ...] = ()
        if cursor.accept_op('['):
            central = self._name_list(cursor, ']')
            cursor.expect_op(']')
        generators = field.generators | {skew.text} | set(central)
        if len(generators) != len(field.generators) + 1 + len(central):
            raise DuplicateNameError('ring generator names must be distinct', skew.line, skew.column)
        name = self._define(name_token, Symbol('ring', frozenset(generators), ambient=field_token.text))
        return RingDef(name, field_token.text, skew.text, options.get('sigma'), options.get('delta'), central, line)

    def _element(self, cursor: _Cursor, line: int) -> ElementDef:
        name_token = cursor.expect_name('an element name')
        cursor.expect_op('=')
        expr, names = self._expression(cursor)
        cursor.expect_keyword('in')
        ambient_token = cursor.expect_name('a ring or field')
        self._lookup(ambient_token, 'ring', 'field')
        self._check_names(names, ambient_token.text)
        name = self._define(name_token, Symbol('element', ambient=ambient_token.text))
        return ElementDef(name, expr, ambient_token.text, line)

    def _hom(self, cursor: _Cursor, line: int) -> HomDef:
        name_token = cursor.expect_name('a homomorphism name')
        cursor.expect_op(':')
        source_token = cursor.expect_name('the source ring')
        source = self._lookup(source_token, 'ring')
        cursor.expect_op('->')
        target_token = cursor.expect_name('the target ring')
        self._lookup(target_token, 'ring')
        cursor.expect_op(':')
        images = self._images(cursor, source.generators, target_token.text)
        name = self._define(name_token, Symbol('hom', ambient=source_token.text))
        return HomDef(name, source_token.text, target_token.text, images, line)

    def _jet(self, cursor: _Cursor, line: int) -> JetDef:
        name_token = cursor.expect_name('a jet name')
        cursor.expect_op('=')
        construction = cursor.expect_name('a jet construction')
        if construction.text not in JET_CONSTRUCTIONS:
            raise cursor.error(f'unknown jet construction {construction.text!r}', construction)
        cursor.expect_op('(')
        source_token = cursor.expect_name('a ring, field or derivation')
        variables: Tuple[str, ...] = ()
        if construction.text == 'divided_power':
            source = self._lookup(source_token, 'ring', 'field')
            cursor.expect_op(';')
            variables = self._name_list(cursor, ')')
            if not variables:
                raise cursor.error('divided_power needs at least one variable')
            for v in variables:
                if v not in source.generators:
                    raise UndefinedNameError(f'{v!r} is not a generator of {source_token.text}', source_token.line, source_token.column)
            ambient = source_token.text
        else:
            source = self._lookup(source_token, 'derivation')
            ambient = source.ambient
        cursor.expect_op(')')
        truncation = None
        if cursor.peek().is_name('truncation'):
            cursor.next()
            truncation = cursor.expect_int()
            if truncation < 1:
                raise cursor.error('truncation must be positive')
        name = self._define(name_token, Symbol('jet', ambient=ambient))
        return JetDef(name, construction.text, source_token.text, variables, truncation, line)

    def _assert(self, cursor: _Cursor, line: int) -> AssertStmt:
        predicate = cursor.expect_name('a predicate')
        if predicate.text not in PREDICATE_SIGNATURES:
            raise cursor.error(f'unknown predicate {predicate.text!r}', predicate)
        signature = PREDICATE_SIGNATURES[predicate.text]
        cursor.expect_op('(')
        raw: List[Tuple[Expr, List[Token], Optional[str], Token]] = []
        while True:
            start = cursor.peek()
            expr, names = self._expression(cursor)
            ambient = None
            if cursor.peek().is_name('in'):
                cursor.next()
                ambient_token = cursor.expect_name('a ring or field')
                self._lookup(ambient_token, 'ring', 'field')
                ambient = ambient_token.text
            raw.append((expr, names, ambient, start))
            if not cursor.accept_op(','):
                break
        cursor.expect_op(')')
        kinds = self._expand_signature(signature, len(raw), cursor, predicate)
        args = self._typed_args(raw, kinds)
        return AssertStmt(predicate.text, tuple(args), line)  # type: ignore[arg-type]

    def _expand_signature(self, signature: Tuple[str, ...], count: int, cursor: _Cursor, predicate: Token) -> List[str]:
        if signature[-1].endswith('*'):
            fixed = list(signature[:-1])
            if count < len(fixed):
                raise cursor.error(f'{predicate.text} takes at least {len(fixed)} arguments, got {count}', predicate)
            return fixed + [signature[-1][:-1]] * (count - len(fixed))
        if count != len(signature):
            raise cursor.error(f'{predicate.text} takes {len(signature)} arguments, got {count}', predicate)
        return list(signature)

    def _typed_args(self, raw, kinds: List[str]) -> List[Arg]:
        jet_ambients = [
            self.symbols[e.name].ambient
            for (e, _, _, _), kind in zip(raw, kinds)
            if kind == 'jet' and isinstance(e, Var) and e.name in self.symbols
        ]
        explicit = [a for (_, _, a, _), kind in zip(raw, kinds) if kind == 'expr' and a]
        default = explicit[-1] if explicit else (jet_ambients[0] if jet_ambients else None)

        args: List[Arg] = []
        for (expr, names, ambient, start), kind in zip(raw, kinds):
            if kind == 'int':
                if not isinstance(expr, Num) or ambient:
                    raise ScriptSyntaxError('expected an integer', start.line, start.column)
                args.append(Arg(expr))
            elif kind == 'expr':
                if ambient is None and not (isinstance(expr, Var) and self._is_element(expr.name)):
                    ambient = default
                    if ambient is None:
                        raise ScriptSyntaxError("expression needs 'in RING' or 'in FIELD'", start.line, start.column)
                self._check_names(names, ambient)
                args.append(Arg(expr, ambient))
            else:
                if not isinstance(expr, Var) or ambient:
                    raise ScriptSyntaxError(f'expected the name of a {kind}', start.line, start.column)
                self._lookup(names[0], kind)
                args.append(Arg(expr))
        return args

    def _is_element(self, name: str) -> bool:
        symbol = self.symbols.get(name)
        return symbol is not None and symbol.kind == 'element'


def parse_script(text: str) -> Script:
    """
    Parse a whole script.

    Raises:
        ScriptSyntaxError: malformed line or unknown statement, with line and column
        UndefinedNameError: a name used before its definition
        DuplicateNameError: a name defined twice
    """
    return ScriptParser().parse(text)
