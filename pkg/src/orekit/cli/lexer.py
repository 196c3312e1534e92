import re
from dataclasses import dataclass
from typing import List, Literal

from ..errors import ScriptSyntaxError

TokenKind = Literal['name', 'int', 'arrow', 'op', 'end']

# names may carry primes: x', t'
TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>[ \t]+)
    |(?P<name>[A-Za-z_][A-Za-z0-9_]*'*)
    |(?P<int>[0-9]+)
    |(?P<arrow>->)
    |(?P<op>[-+*/^(),;:=\[\]])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int

    def is_op(self, text: str) -> bool:
        return self.kind in ('op', 'arrow') and self.text == text

    def is_name(self, text: str) -> bool:
        return self.kind == 'name' and self.text == text


def strip_comment(line: str) -> str:
    index = line.find('#')
    return line if index < 0 else line[:index]


def tokenize_line(text: str, line: int) -> List[Token]:
    """
    Split one statement line into tokens; the list always ends with an 'end' token.

    Raises:
        ScriptSyntaxError: a character no token can start with
    """
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ScriptSyntaxError(f'unexpected character {text[position]!r}', line, position + 1)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), line, position + 1))  # type: ignore[arg-type]
        position = match.end()
    tokens.append(Token('end', '', line, len(text) + 1))
    return tokens
