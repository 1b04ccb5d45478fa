"""Recursive descent parser for knot expressions

expr := "U" | "T(" int "," int ")" | "C(" int "," int ";" expr ")"
"""
import re
from typing import List, NamedTuple

from lspace_knots.exceptions import ParseError
from lspace_knots.knots import Cable, KnotExpr, Torus, Unknot, validate

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<symbol>[UTC(),;]))")


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].isspace():
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", offset)
        group = "int" if match.group("int") is not None else "symbol"
        kind = "int" if group == "int" else match.group("symbol")
        tokens.append(Token(kind, match.group(group), match.start(group)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self._tokens = tokenize(text)
        self._index = 0

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _expect(self, kind: str) -> Token:
        token = self._peek()
        if token.kind != kind:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise ParseError(f"expected {kind!r}, found {found}", token.position)
        self._index += 1
        return token

    def _int(self) -> int:
        return int(self._expect("int").text)

    def parse(self) -> KnotExpr:
        expr = self._expr()
        self._expect("end")
        return expr

    def _expr(self) -> KnotExpr:
        token = self._peek()
        if token.kind == "U":
            self._index += 1
            return Unknot()
        if token.kind == "T":
            self._index += 1
            self._expect("(")
            p = self._int()
            self._expect(",")
            q = self._int()
            self._expect(")")
            return Torus(p=p, q=q)
        if token.kind == "C":
            self._index += 1
            self._expect("(")
            p = self._int()
            self._expect(",")
            q = self._int()
            self._expect(";")
            companion = self._expr()
            self._expect(")")
            return Cable(p=p, q=q, companion=companion)
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError(f"expected 'U', 'T' or 'C', found {found}", token.position)


def parse_expression(text: str) -> KnotExpr:
    """parse and validate a knot expression, eg. "C(2,19;C(2,7;T(2,3)))"

    :raises ParseError: text is not in the grammar
    :raises InvalidParameters: a node breaks its parameter rules
    """
    return validate(_Parser(text).parse())
