"""Tokenizer and recursive-descent parser for the calculator language.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := integer | atom | call | "(" expr ")" | "-" factor
    atom   := TAG "[" intlist? "]"          TAG in {H, Imm, M, F, DImm}
    call   := NAME "(" arglist ")"          NAME in {Fperp, B, chi, Mperp}

Columns in error messages are 1-based.
"""

import re
from dataclasses import dataclass

TAGS = ("H", "Imm", "M", "F", "DImm")
CALLS = {"Fperp": 2, "B": 2, "chi": 1, "Mperp": 2}


class ParseError(Exception):
    def __init__(self, message, column):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


@dataclass(frozen=True)
class BasisAtom:
    tag: str
    parts: tuple


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class ApplyOp:
    name: str
    args: tuple


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP or EOF
    text: str
    column: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(Token("INT", m.group(1), col))
        elif m.group(2):
            tokens.append(Token("NAME", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*()[],":
                raise ParseError(f"unexpected character {ch!r}", col)
            tokens.append(Token("OP", ch, col))
        pos = m.end()
    tokens.append(Token("EOF", "", len(text) + 1))
    return tokens


class Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, text):
        return self.tok.kind == "OP" and self.tok.text == text

    def expect(self, text):
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.column)
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "EOF":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.column)
        return node

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.at("*"):
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        t = self.tok
        if t.kind == "INT":
            self.advance()
            return IntLiteral(int(t.text))
        if t.kind == "OP" and t.text == "-":
            self.advance()
            return Neg(self.factor())
        if t.kind == "OP" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "NAME":
            if t.text in TAGS:
                return self.atom()
            if t.text in CALLS:
                return self.call()
            raise ParseError(f"unknown name {t.text!r}", t.column)
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.column)

    def atom(self):
        tag = self.advance().text
        self.expect("[")
        parts = []
        if not self.at("]"):
            parts.append(self.positive_int())
            while self.at(","):
                self.advance()
                parts.append(self.positive_int())
        self.expect("]")
        return BasisAtom(tag, tuple(parts))

    def positive_int(self):
        t = self.tok
        if t.kind != "INT":
            found = t.text or "end of input"
            raise ParseError(f"expected a positive integer, found {found!r}", t.column)
        self.advance()
        if int(t.text) < 1:
            raise ParseError("composition parts must be positive", t.column)
        return int(t.text)

    def signed_int(self):
        t = self.tok
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "INT":
            found = self.tok.text or "end of input"
            raise ParseError(f"expected an integer, found {found!r}", self.tok.column)
        return IntLiteral(sign * int(self.advance().text)), t

    def call(self):
        name_tok = self.advance()
        name = name_tok.text
        self.expect("(")
        args = []
        if name == "B":
            args.append(self.signed_int()[0])
        elif name == "Fperp":
            lit, t = self.signed_int()
            if lit.value < 0:
                raise ParseError("Fperp degree must be non-negative", t.column)
            args.append(lit)
        elif not self.at(")"):
            args.append(self.expr())
        while self.at(","):
            self.advance()
            args.append(self.expr())
        self.expect(")")
        if len(args) != CALLS[name]:
            raise ParseError(
                f"{name} takes {CALLS[name]} argument(s), got {len(args)}", name_tok.column
            )
        return ApplyOp(name, tuple(args))


def parse(text):
    return Parser(text).parse()
