import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from src.domain.entities.polynomial import Polynomial, VariableContext
from src.domain.exceptions.domain_exceptions import PolynomialParseException

_TOKEN = re.compile(
    r'\s*(?:'
    r'(?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)'
    r'|(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
    r'|(?P<op>[-+*^/()])'
    r'|(?P<bad>\S)'
    r')'
)


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


class PolynomialParserService:
    """Servicio para parsear polinomios en la gramática ASCII de la herramienta

    expr    := ['-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := base ('^' natural)?
    base    := racional | variable | '(' expr ')'
    racional:= entero ('/' entero-positivo)?
    """

    @staticmethod
    def parse(text: str, ctx: VariableContext) -> Polynomial:
        """Parsea el texto y devuelve la forma canónica dispersa"""
        return _Parser(PolynomialParserService._tokenize(text), ctx, len(text)).parse()

    @staticmethod
    def _tokenize(text: str) -> List[_Token]:
        tokens = []
        position = 0
        while position < len(text):
            match = _TOKEN.match(text, position)
            if match is None:
                # solo quedaban espacios
                break
            kind = match.lastgroup
            value = match.group(kind)
            start = match.start(kind)
            if kind == 'bad':
                raise PolynomialParseException(f"Carácter inesperado '{value}'", start)
            if kind == 'number' and not value.isdigit():
                raise PolynomialParseException(f"Literal no racional '{value}'", start)
            tokens.append(_Token(kind, value, start))
            position = match.end()
        return tokens


class _Parser:
    """Descenso recursivo sobre la lista de tokens"""

    def __init__(self, tokens: List[_Token], ctx: VariableContext, length: int):
        self.tokens = tokens
        self.ctx = ctx
        self.length = length
        self.index = 0

    def parse(self) -> Polynomial:
        result = self._expr()
        token = self._peek()
        if token is not None:
            raise PolynomialParseException(f"Token inesperado '{token.text}'", token.position)
        return result

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _peek_op(self, *ops: str) -> bool:
        token = self._peek()
        return token is not None and token.kind == 'op' and token.text in ops

    def _next(self, expected: str) -> _Token:
        token = self._peek()
        if token is None:
            raise PolynomialParseException(f"Fin inesperado, se esperaba {expected}", self.length)
        self.index += 1
        return token

    def _expr(self) -> Polynomial:
        negate = False
        if self._peek_op('-'):
            self.index += 1
            negate = True
        value = self._term()
        if negate:
            value = -value
        while self._peek_op('+', '-'):
            op = self._next('operador').text
            rhs = self._term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def _term(self) -> Polynomial:
        value = self._factor()
        while self._peek_op('*'):
            self.index += 1
            value = value * self._factor()
        return value

    def _factor(self) -> Polynomial:
        base = self._base()
        if self._peek_op('^'):
            self.index += 1
            token = self._next('un exponente natural')
            if token.kind != 'number':
                raise PolynomialParseException(
                    f"Se esperaba un exponente natural, se encontró '{token.text}'", token.position
                )
            if self._peek_op('/'):
                raise PolynomialParseException("El exponente debe ser natural", self._peek().position)
            base = base ** int(token.text)
        return base

    def _base(self) -> Polynomial:
        token = self._next('un término')
        n = self.ctx.n
        if token.kind == 'number':
            value = Fraction(int(token.text))
            if self._peek_op('/'):
                self.index += 1
                denominator = self._next('un denominador')
                if denominator.kind != 'number' or int(denominator.text) == 0:
                    raise PolynomialParseException(
                        f"Literal no racional: denominador '{denominator.text}'", denominator.position
                    )
                value = value / int(denominator.text)
            return Polynomial.constant(n, value)
        if token.kind == 'name':
            index = self.ctx.index_of(token.text)
            if index is None:
                raise PolynomialParseException(f"Variable desconocida '{token.text}'", token.position)
            return Polynomial.variable(index, n)
        if token.kind == 'op' and token.text == '(':
            inner = self._expr()
            closing = self._next("')'")
            if not (closing.kind == 'op' and closing.text == ')'):
                raise PolynomialParseException(
                    f"Se esperaba ')', se encontró '{closing.text}'", closing.position
                )
            return inner
        raise PolynomialParseException(f"Token inesperado '{token.text}'", token.position)
