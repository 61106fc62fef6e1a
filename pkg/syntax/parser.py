"""
Рекурсивный спуск для текстового синтаксиса термов.

    term    := summand { "+" summand }
    summand := NAT | "W" [ "^" atom [ "*" atom ] ] | "w^" atom
             | fexpr "(" term ")" | "phi(" term "," term ")" | "(" term ")"
    fexpr   := ("S" | "E") { "^" atom | "[" term { "," term } "]" }
    atom    := summand

Термы канонического слоя собираются как сырые термы и приводятся normalize;
всё, что содержит E, phi, вложенные итерации или сдвиги, становится расширенным выражением.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple, Union

from ordinals import ZERO, OrdTerm, normalize
from ordinals.normalize import RAW_TYPES, RAdd, RCollapse, RNat, ROmega, ROmegaPow, RSuc, RWPow, RawTerm
from prover.expressions import (
    E_SYM, SUC_SYM, Apply, Canon, ExtSum, ExtTerm, FunExpr, Iterate, Shift, VeblenApp,
)

_TOKEN_RE = re.compile(r'\s*(?:(?P<nat>\d+)|(?P<name>[A-Za-z_]+)|(?P<op>[\^*+(),\[\]]))')

# глубже этого разбор и нормализация упираются в предел рекурсии Python
MAX_NESTING = 100


class ParseError(ValueError):
    """
    Ошибка разбора с позицией.

    Attributes:
        line, column: позиция (с единицы)
        expected: ожидавшиеся лексемы
    """

    def __init__(self, message: str, line: int, column: int, expected: Sequence[str] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        detail = f"; ожидалось: {', '.join(self.expected)}" if self.expected else ''
        super().__init__(f"{line}:{column}: {message}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos, line, line_start = 0, 1, 0
    while True:
        while pos < len(text) and text[pos].isspace():
            if text[pos] == '\n':
                line, line_start = line + 1, pos + 1
            pos += 1
        if pos >= len(text):
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"Недопустимый символ {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        value = match.group(kind)
        column = match.start(kind) - line_start + 1
        if kind == 'name' and value not in ('W', 'w', 'S', 'E', 'phi'):
            raise ParseError(f"Неизвестное имя {value!r}", line, column, ('W', 'w', 'S', 'E', 'phi'))
        tokens.append(Token(kind, value, line, column))
        pos = match.end()
    tokens.append(Token('end', '', line, pos - line_start + 1))
    return tokens


Node = Union[RawTerm, ExtTerm]
Postfix = Tuple[str, object]


def _is_raw(node) -> bool:
    return isinstance(node, RAW_TYPES)


class Parser:
    """Разбор одного терма; parse() возвращает канонический терм или расширенное выражение"""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _error(self, message: str, expected: Sequence[str] = (), token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column, expected)

    def _expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or 'конец ввода'
            raise self._error(f"Неожиданная лексема {found!r}", (repr(text),))
        return self._advance()

    def parse(self) -> Union[OrdTerm, ExtTerm]:
        node = self._term()
        if self.current.kind != 'end':
            raise self._error(f"Лишний ввод после терма: {self.current.text!r}", ("'+'", 'конец ввода'))
        if _is_raw(node):
            return normalize(node)
        return node

    def _term(self) -> Node:
        operands = [self._summand()]
        while self.current.text == '+':
            self._advance()
            operands.append(self._summand())
        if len(operands) == 1:
            return operands[0]
        if all(_is_raw(op) for op in operands):
            return reduce(RAdd, operands)
        return ExtSum(tuple(self._lift(op) for op in operands))

    def _summand(self) -> Node:
        if self.depth >= MAX_NESTING:
            raise self._error(f"Слишком глубокая вложенность (больше {MAX_NESTING})")
        self.depth += 1
        try:
            return self._operand()
        finally:
            self.depth -= 1

    def _operand(self) -> Node:
        token = self.current
        if token.kind == 'nat':
            self._advance()
            return RNat(int(token.text))
        if token.text == '(':
            self._advance()
            node = self._term()
            self._expect(')')
            return node
        if token.text == 'W':
            self._advance()
            return self._omega_power()
        if token.text == 'w':
            self._advance()
            self._expect('^')
            exponent = self._summand()
            if _is_raw(exponent):
                return RWPow(exponent)
            # ω^α = φ(0, α)
            return self._build(lambda: VeblenApp(Canon(ZERO), exponent), token)
        if token.text == 'phi':
            self._advance()
            self._expect('(')
            a = self._term()
            self._expect(',')
            b = self._term()
            self._expect(')')
            return self._build(lambda: VeblenApp(self._lift(a), self._lift(b)), token)
        if token.text in ('S', 'E'):
            return self._application()
        found = token.text or 'конец ввода'
        raise self._error(f"Ожидался терм, найдено {found!r}", ('NAT', 'W', 'w^', 'S', 'E', 'phi', "'('"))

    def _omega_power(self) -> Node:
        if self.current.text != '^':
            return ROmega()
        self._advance()
        exponent = self._canonical(self._summand())
        coefficient: Node = RNat(1)
        if self.current.text == '*':
            self._advance()
            coefficient = self._canonical(self._summand())
        return ROmegaPow(exponent, coefficient)

    def _application(self) -> Node:
        head = self._advance()
        postfix: List[Postfix] = []
        while self.current.text in ('^', '['):
            if self._advance().text == '^':
                postfix.append(('^', self._canonical(self._summand())))
            else:
                members = [self._canonical(self._term())]
                while self.current.text == ',':
                    self._advance()
                    members.append(self._canonical(self._term()))
                self._expect(']')
                postfix.append(('[', members))
        self._expect('(')
        arg = self._term()
        self._expect(')')
        if head.text == 'S' and _is_raw(arg):
            if not postfix:
                return RSuc(arg)
            if len(postfix) == 1 and postfix[0][0] == '^':
                return RCollapse(postfix[0][1], arg)
        fn = self._build(lambda: self._fun_expr(head.text, postfix), head)
        return self._build(lambda: Apply(fn, self._lift(arg)), head)

    def _fun_expr(self, head: str, postfix: Sequence[Postfix]) -> FunExpr:
        fn: FunExpr = SUC_SYM if head == 'S' else E_SYM
        for op, value in postfix:
            if op == '^':
                fn = Iterate(fn, normalize(value))
            else:
                fn = Shift(fn, tuple(normalize(k) for k in value))
        return fn

    def _canonical(self, node: Node) -> RawTerm:
        if not _is_raw(node):
            raise self._error("Здесь допустим только терм канонического слоя", ('NAT', 'W', 'w^', 'S'))
        return node

    def _lift(self, node: Node) -> ExtTerm:
        return Canon(normalize(node)) if _is_raw(node) else node

    def _build(self, make, token: Token):
        """Конструктор с побочными условиями; нарушение становится ошибкой разбора"""
        try:
            return make()
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), token.line, token.column) from None


def parse(text: str) -> Union[OrdTerm, ExtTerm]:
    """
    Разбор текстового терма.

    Raises:
        ParseError: синтаксическая ошибка (с позицией и ожидаемыми лексемами)
        MalformedTerm: терм канонического слоя нарушает побочное условие грамматики
    """
    try:
        return Parser(text).parse()
    except RecursionError:
        raise ParseError("Терм слишком глубокий для разбора", 1, 1) from None


def parse_canonical(text: str) -> OrdTerm:
    """Разбор терма, который обязан лежать в каноническом слое"""
    result = parse(text)
    if isinstance(result, (Apply, VeblenApp, ExtSum)):
        raise ParseError("Ожидался терм канонического слоя, получено расширенное выражение", 1, 1,
                         ('S', 'w^', 'W', 'NAT'))
    return result
