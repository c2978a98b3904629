"""
算子表达式解析器

递归下降，文法：
    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := 'U' | 'V' | scalar | '(' expr ')'
    scalar := 有理数字面量，可带后缀 i（如 3/2、1/3i、i）

复数系数需加括号书写：(3/2+1/3i)*U。
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Union

from core.combinat import GaussRational
from core.errors import ParseError


# ==================== AST ====================

@dataclass(frozen=True)
class Generator:
    name: str  # 'U' | 'V'


@dataclass(frozen=True)
class Scalar:
    value: GaussRational


@dataclass(frozen=True)
class Sum:
    left: 'OperatorExpr'
    right: 'OperatorExpr'


@dataclass(frozen=True)
class Product:
    left: 'OperatorExpr'
    right: 'OperatorExpr'


@dataclass(frozen=True)
class Power:
    base: 'OperatorExpr'
    exponent: int


OperatorExpr = Union[Generator, Scalar, Sum, Product, Power]

U = Generator("U")
V = Generator("V")


# ==================== 词法 ====================

@dataclass(frozen=True)
class Token:
    type: str   # GEN | NUM | PLUS | MINUS | MUL | POW | LPAREN | RPAREN | EOF
    value: object
    offset: int


_SINGLE = {'+': 'PLUS', '-': 'MINUS', '*': 'MUL', '^': 'POW', '(': 'LPAREN', ')': 'RPAREN'}


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    data = text.encode("utf-8")
    pos = 0
    while pos < len(data):
        ch = chr(data[pos])
        if ch.isspace():
            pos += 1
        elif ch in "UV":
            tokens.append(Token('GEN', ch, pos))
            pos += 1
        elif ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, pos))
            pos += 1
        elif ch.isdigit() or ch == 'i':
            start = pos
            literal = ""
            while pos < len(data) and chr(data[pos]).isdigit():
                literal += chr(data[pos])
                pos += 1
            if literal and pos < len(data) and chr(data[pos]) == '/':
                pos += 1
                den = ""
                while pos < len(data) and chr(data[pos]).isdigit():
                    den += chr(data[pos])
                    pos += 1
                if not den:
                    raise ParseError("分数缺少分母", pos)
                if int(den) == 0:
                    raise ParseError("分母为零", start)
                literal += "/" + den
            imaginary = pos < len(data) and chr(data[pos]) == 'i'
            if imaginary:
                pos += 1
            tokens.append(Token('NUM', GaussRational.parse((literal or "") + ("i" if imaginary else "")), start))
        else:
            raise ParseError(f"无法识别的字符 {ch!r}", pos)
    tokens.append(Token('EOF', None, len(data)))
    return tokens


# ==================== 语法 ====================

class Parser:
    """递归下降解析器"""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0
        self.current_token = tokens[0]

    def eat(self, token_type: str) -> Token:
        tok = self.current_token
        if tok.type != token_type:
            raise ParseError(f"期望 {token_type}，得到 {tok.type}", tok.offset)
        self.pos += 1
        self.current_token = self.tokens[self.pos]
        return tok

    def atom(self) -> OperatorExpr:
        tok = self.current_token
        if tok.type == 'GEN':
            self.eat('GEN')
            return Generator(tok.value)
        if tok.type == 'NUM':
            self.eat('NUM')
            return Scalar(tok.value)
        if tok.type == 'LPAREN':
            self.eat('LPAREN')
            node = self.expr()
            self.eat('RPAREN')
            return node
        raise ParseError(f"意外的记号 {tok.type}", tok.offset)

    def factor(self) -> OperatorExpr:
        node = self.atom()
        if self.current_token.type == 'POW':
            self.eat('POW')
            tok = self.current_token
            if tok.type != 'NUM' or not tok.value.is_real or tok.value.re.denominator != 1:
                raise ParseError("指数必须是非负整数", tok.offset)
            self.eat('NUM')
            node = Power(node, int(tok.value.re))
        return node

    def term(self) -> OperatorExpr:
        node = self.factor()
        while self.current_token.type == 'MUL':
            self.eat('MUL')
            node = Product(node, self.factor())
        return node

    def expr(self) -> OperatorExpr:
        if self.current_token.type == 'MINUS':
            self.eat('MINUS')
            node = Product(Scalar(-GaussRational.one()), self.term())
        else:
            node = self.term()
        while self.current_token.type in ('PLUS', 'MINUS'):
            op = self.current_token.type
            self.eat(op)
            right = self.term()
            if op == 'MINUS':
                right = Product(Scalar(-GaussRational.one()), right)
            node = Sum(node, right)
        return node

    def parse(self) -> OperatorExpr:
        node = self.expr()
        if self.current_token.type != 'EOF':
            raise ParseError(f"多余的记号 {self.current_token.type}", self.current_token.offset)
        return node


def parse_operator(text: str) -> OperatorExpr:
    """解析算子表达式，出错时抛出带字节偏移的 ParseError"""
    tokens = tokenize(text)
    if tokens[0].type == 'EOF':
        raise ParseError("空表达式", 0)
    return Parser(tokens).parse()


def to_text(node: OperatorExpr) -> str:
    """AST 的规范文本形式"""
    if isinstance(node, Generator):
        return node.name
    if isinstance(node, Scalar):
        return f"({node.value})"
    if isinstance(node, Sum):
        return f"({to_text(node.left)}+{to_text(node.right)})"
    if isinstance(node, Product):
        return f"{to_text(node.left)}*{to_text(node.right)}"
    return f"({to_text(node.base)})^{node.exponent}"
