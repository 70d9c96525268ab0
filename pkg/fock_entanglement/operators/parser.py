import re
from typing import List, NamedTuple

from fock_entanglement.errors import ExpressionSyntaxError
from fock_entanglement.operators.expression import (
    Annihilate,
    Create,
    OperatorExpr,
    Power,
    Product,
    Scalar,
    Sum,
    number_operator_expr,
)

_NUMBER = r"(?:\d+(?:\.\d+)?|\.\d+)(?:[eE][+-]?\d+)?"

TOKEN_PATTERNS = [
    ("COMPLEX", rf"\(\s*[+-]?{_NUMBER}\s*,\s*[+-]?{_NUMBER}\s*\)"),
    ("DOTDOT", r"\.\."),
    ("NUMBER", _NUMBER),
    ("NAME", r"[A-Za-z]+"),
    ("OP", r"[-+*^(),]"),
    ("SPACE", r"\s+"),
]
TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_PATTERNS))


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_REGEX.match(text, position)
        if not match:
            raise ExpressionSyntaxError(
                f"Unexpected character {text[position]!r}", _byte_offset(text, position)
            )
        kind = match.lastgroup
        if kind != "SPACE":
            tokens.append(Token(kind, match.group(), _byte_offset(text, position)))
        position = match.end()
    tokens.append(Token("END", "", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, position: int) -> int:
    return len(text[:position].encode("utf-8"))


class _Parser:
    """
    Recursive descent over the grammar

        expr   := term (('+' | '-') term)*
        term   := unary ('*' unary)*
        unary  := ('-' | '+') unary | power
        power  := atom ('^' INT)?
        atom   := NUMBER | COMPLEX | 'ad' '(' INT ')' | 'a' '(' INT ')'
                | 'N' '(' INT ('..' INT)? ')' | '(' expr ')'
    """

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or "end of input"
            raise ExpressionSyntaxError(f"Expected {text!r}, found {found!r}", self.current.offset)
        return self.advance()

    def parse(self) -> OperatorExpr:
        expr = self.expression()
        if self.current.kind != "END":
            raise ExpressionSyntaxError(
                f"Unexpected token {self.current.text!r}", self.current.offset
            )
        return expr

    def expression(self) -> OperatorExpr:
        terms = [self.term()]
        while self.current.text in ("+", "-"):
            sign = self.advance().text
            term = self.term()
            terms.append(term if sign == "+" else _negate(term))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> OperatorExpr:
        factors = [self.unary()]
        while self.current.text == "*":
            self.advance()
            factors.append(self.unary())
        if len(factors) == 1:
            return factors[0]
        flat = []
        for factor in factors:
            flat.extend(factor.factors if isinstance(factor, Product) else (factor,))
        return Product(tuple(flat))

    def unary(self) -> OperatorExpr:
        if self.current.text == "-":
            self.advance()
            return _negate(self.unary())
        if self.current.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> OperatorExpr:
        base = self.atom()
        if self.current.text == "^":
            self.advance()
            exponent = self.integer()
            return Power(base, exponent)
        return base

    def integer(self) -> int:
        token = self.current
        if token.kind != "NUMBER" or not token.text.isdigit():
            raise ExpressionSyntaxError(
                f"Expected a non-negative integer, found {token.text or 'end of input'!r}",
                token.offset,
            )
        self.advance()
        return int(token.text)

    def mode(self) -> int:
        token = self.current
        if token.text == "-":
            raise ExpressionSyntaxError("Mode index must be positive", token.offset)
        value = self.integer()
        if value < 1:
            raise ExpressionSyntaxError("Mode index must be positive", token.offset)
        return value

    def atom(self) -> OperatorExpr:
        token = self.current
        if token.kind == "NUMBER":
            self.advance()
            return Scalar(float(token.text))
        if token.kind == "COMPLEX":
            self.advance()
            real, imag = token.text.strip("()").split(",")
            return Scalar(complex(float(real), float(imag)))
        if token.kind == "NAME":
            return self.ladder()
        if token.text == "(":
            self.advance()
            expr = self.expression()
            self.expect(")")
            return expr
        found = token.text or "end of input"
        raise ExpressionSyntaxError(f"Unexpected token {found!r}", token.offset)

    def ladder(self) -> OperatorExpr:
        name = self.advance()
        if name.text not in ("ad", "a", "N"):
            raise ExpressionSyntaxError(f"Unknown operator {name.text!r}", name.offset)
        self.expect("(")
        first = self.mode()
        if name.text == "N":
            last = first
            if self.current.kind == "DOTDOT":
                self.advance()
                last = self.mode()
            if last < first:
                raise ExpressionSyntaxError(f"Empty mode range {first}..{last}", name.offset)
            self.expect(")")
            return number_operator_expr(range(first, last + 1))
        self.expect(")")
        return Create(first) if name.text == "ad" else Annihilate(first)


def _negate(expr: OperatorExpr) -> OperatorExpr:
    if isinstance(expr, Scalar):
        return Scalar(-expr.value)
    if isinstance(expr, Product):
        return Product((Scalar(-1.0),) + expr.factors)
    return Product((Scalar(-1.0), expr))


def parse(text: str) -> OperatorExpr:
    """
    Parse an operator expression, e.g. "0.5*ad(1)*a(1)*(3 - ad(1)*a(1))"
    :param text: expression in the ASCII grammar (ad = creation, a = annihilation,
    N(i..j) = number operator over modes i..j, (re,im) = complex literal)
    :return: the expression tree
    """
    return _Parser(text).parse()
