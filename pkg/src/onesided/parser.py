"""Expression language for elements of S_1 and S_2.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | INT '/' INT | x1 | y1 | x2 | y2 | x | y | theta
            | E(i,j) | E1(i,j) | E2(i,j) | EE(a,b;c,d) | '(' expr ')'

``x``, ``y`` and ``E`` are the first-factor generators, so the text of an
S_1 element (as printed by the library) parses back to its image in S_2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .algebra import Element1, Element2, matrix_unit2, matrix_unit_factor, theta
from .errors import ParseError
from .scalars import K

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^(),;]))")

VARIABLES = {"x1": (1, "x"), "y1": (1, "y"), "x2": (2, "x"), "y2": (2, "y"),
             "x": (1, "x"), "y": (1, "y")}
UNITS = {"E": 1, "E1": 1, "E2": 2}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("unexpected character %r" % text[start], start)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", n))
    return out


# AST

_PREC = {"+": 1, "-": 1, "*": 2, "neg": 3, "^": 4, "atom": 5}


class Node:
    prec = 5

    def pretty(self) -> str:
        raise NotImplementedError

    def evaluate(self) -> Element2:
        raise NotImplementedError

    def __str__(self):
        return self.pretty()


def _wrap(node: Node, prec: int) -> str:
    s = node.pretty()
    return "(%s)" % s if node.prec < prec else s


@dataclass(frozen=True)
class Num(Node):
    value: Fraction

    def pretty(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)

    def evaluate(self):
        return Element2.scalar(K(self.value))


@dataclass(frozen=True)
class Var(Node):
    name: str

    def pretty(self):
        return self.name

    def evaluate(self):
        return Element2.gen(self.name if self.name[-1].isdigit() else self.name + "1")


@dataclass(frozen=True)
class MatrixUnit(Node):
    name: str
    indices: Tuple[int, ...]

    def pretty(self):
        if self.name == "EE":
            return "EE(%d,%d;%d,%d)" % self.indices
        return "%s(%d,%d)" % ((self.name,) + self.indices)

    def evaluate(self):
        if self.name == "EE":
            a, b, c, d = self.indices
            return matrix_unit2((a, b), (c, d))
        return matrix_unit_factor(UNITS[self.name], *self.indices)


@dataclass(frozen=True)
class Theta(Node):
    def pretty(self):
        return "theta"

    def evaluate(self):
        return theta()


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node

    @property
    def prec(self):
        return _PREC[self.op]

    def pretty(self):
        p = self.prec
        # left-associative: the right operand needs strictly higher precedence
        return "%s %s %s" % (_wrap(self.left, p), self.op, _wrap(self.right, p + 1)) \
            if self.op != "*" else "%s*%s" % (_wrap(self.left, p), _wrap(self.right, p + 1))

    def evaluate(self):
        a, b = self.left.evaluate(), self.right.evaluate()
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        return a * b


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    prec = 3

    def pretty(self):
        return "-" + _wrap(self.operand, 3)

    def evaluate(self):
        return -self.operand.evaluate()


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int
    prec = 4

    def pretty(self):
        return "%s^%d" % (_wrap(self.base, 5), self.exponent)

    def evaluate(self):
        return self.base.evaluate() ** self.exponent


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.tok
        if t.text != text:
            found = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError("expected %r but found %s" % (text, found), t.pos)
        return self.take()

    def integer(self) -> int:
        t = self.tok
        if t.kind != "num" or "/" in t.text:
            raise ParseError("expected a nonnegative integer", t.pos)
        self.take()
        return int(t.text)

    def parse(self) -> Node:
        if self.tok.kind == "end":
            raise ParseError("empty expression", self.tok.pos)
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError("unexpected %r" % self.tok.text, self.tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "op":
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.tok.text == "*":
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.tok.text == "-" and self.tok.kind == "op":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        if self.tok.text == "^":
            self.take()
            if self.tok.text == "-":
                raise ParseError("exponents must be nonnegative integers", self.tok.pos)
            node = Pow(node, self.integer())
        return node

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.take()
            if "/" in t.text and int(t.text.split("/")[1]) == 0:
                raise ParseError("zero denominator", t.pos)
            return Num(Fraction(t.text))
        if t.kind == "name":
            self.take()
            if t.text in VARIABLES:
                return Var(t.text)
            if t.text == "theta":
                return Theta()
            if t.text in UNITS:
                self.expect("(")
                i = self.integer()
                self.expect(",")
                j = self.integer()
                self.expect(")")
                return MatrixUnit(t.text, (i, j))
            if t.text == "EE":
                self.expect("(")
                a = self.integer()
                self.expect(",")
                b = self.integer()
                self.expect(";")
                c = self.integer()
                self.expect(",")
                d = self.integer()
                self.expect(")")
                return MatrixUnit("EE", (a, b, c, d))
            raise ParseError("unknown name %r" % t.text, t.pos)
        if t.text == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError("unexpected %r" % t.text, t.pos)


def parse(text: str) -> Node:
    return _Parser(text).parse()


def parse_element(text: str) -> Element2:
    return parse(text).evaluate()


def factors_in(node: Node) -> set:
    """Tensor factors mentioned syntactically (theta and EE mention both)."""
    if isinstance(node, Var):
        return {VARIABLES[node.name][0]}
    if isinstance(node, MatrixUnit):
        return {1, 2} if node.name == "EE" else {UNITS[node.name]}
    if isinstance(node, Theta):
        return {1, 2}
    if isinstance(node, BinOp):
        return factors_in(node.left) | factors_in(node.right)
    if isinstance(node, Neg):
        return factors_in(node.operand)
    if isinstance(node, Pow):
        return factors_in(node.base)
    return set()


def parse_scalar(text: str):
    t = text.strip()
    m = re.fullmatch(r"(-?)(\d+)(?:/(\d+))?", t)
    if not m:
        raise ParseError("expected a scalar, got %r" % text, 0)
    if m.group(3) is not None and int(m.group(3)) == 0:
        raise ParseError("zero denominator", 0)
    v = Fraction(int(m.group(2)), int(m.group(3) or 1))
    return K(-v if m.group(1) else v)


def parse_element1(text: str, factor: int) -> Element1:
    """Parse text naming only the given factor's variables into S_1."""
    node = parse(text)
    if factors_in(node) - {factor}:
        raise ParseError("expected an element of factor %d only" % factor, 0)
    return node.evaluate().restrict(factor)


def parse_letter(line: str):
    from .units import BlockF2, Elementary, MuU, MuUprime, ThetaPow

    parts = line.split(None, 4)
    head = parts[0] if parts else ""
    try:
        if head == "E" and len(parts) == 5:
            i, r, c = int(parts[1]), int(parts[2]), int(parts[3])
            return Elementary(i, r, c, parse_element1(parts[4], 3 - i))
        if head == "MU" and len(parts) == 3:
            return MuU(int(parts[1]), parse_scalar(parts[2]))
        if head == "MUP" and len(parts) == 2:
            return MuUprime(parse_scalar(parts[1]))
        if head == "THETA" and len(parts) == 2:
            return ThetaPow(int(parts[1]))
        if head == "F2" and len(parts) >= 2:
            return BlockF2(parse_element(line.split(None, 1)[1]))
    except ValueError as exc:
        raise ParseError("bad letter %r: %s" % (line.strip(), exc), 0) from None
    raise ParseError("bad letter %r" % line.strip(), 0)


def parse_auto_letter(line: str):
    from .automorphisms import Inner, Swap, Torus

    parts = line.split()
    if parts == ["S"]:
        return Swap()
    if parts and parts[0] == "T" and len(parts) == 3:
        return Torus(parse_scalar(parts[1]), parse_scalar(parts[2]))
    if parts and parts[0] == "W" and len(parts) >= 2:
        return Inner.of(parse_element(line.split(None, 1)[1]))
    raise ParseError("bad automorphism letter %r" % line.strip(), 0)
