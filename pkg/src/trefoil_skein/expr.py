"""Text syntax for skein, quantum-torus and module elements.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | primary
    primary:= atom | INT | '(' expr ')'
    atom   := NAME '(' int ',' int ')'        T, JW, e
            | 'S' '(' int ')'
            | ('l' | 'm' | 'x' | 't') ['^' int]
            | 'y'

``*`` keeps the written order (``l*m`` and ``m*l`` differ).  ``/`` only
divides by scalars (expressions in ``t`` alone).  Atoms come in three
families — skein (``T``, ``JW``), torus (``e``, ``l``, ``m``) and module
(``x``, ``y``, ``S``) — and one expression may not mix two of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactcoeff import LaurentT, RatFuncT, as_ratfunc, simplify_coeff
from .quantum_torus import QTorusPoly, e_monomial, qt_mul
from .torus_skein import TorusSkein, jw_to_t, mul
from .trefoil_module import ModuleElt, commutative_product

FAMILY_OF_ATOM = {
    "T": "skein", "JW": "skein",
    "e": "torus", "l": "torus", "m": "torus",
    "x": "module", "y": "module", "S": "module",
    "t": "scalar",
}
FAMILY_TYPES = {"skein": TorusSkein, "torus": QTorusPoly, "module": ModuleElt}


class ParseError(ValueError):
    """Lexical or syntax error at ``line:column``."""

    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col = line, col


class ExprTypeError(TypeError):
    """An expression mixes atom families or uses an operation outside its family."""


# ---------------------------------------------------------------------------
# lexer


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    line: int
    col: int


_OPS = set("+-*/^(),")


def tokenize(src: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            out.append(Token("INT", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(Token("NAME", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _OPS:
            out.append(Token("OP", ch, line, col))
            i, col = i + 1, col + 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(Token("END", "", line, col))
    return out


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Num:
    value: int
    pos: tuple


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple
    power: Optional[int]
    pos: tuple


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: tuple


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: tuple


Expr = Union[Num, Atom, Neg, BinOp]


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "END" else repr(tok.text)
        raise ParseError(f"{msg}, found {found}", tok.line, tok.col)

    def expect_op(self, ch: str) -> Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.text != ch:
            self.fail(f"expected {ch!r}")
        return self.next()

    def signed_int(self) -> int:
        sign = 1
        if self.peek().kind == "OP" and self.peek().text in "+-":
            sign = -1 if self.next().text == "-" else 1
        tok = self.peek()
        if tok.kind != "INT":
            self.fail("expected an integer")
        return sign * int(self.next().text)

    def parse(self) -> Expr:
        if self.peek().kind == "END":
            self.fail("empty expression")
        e = self.expr()
        if self.peek().kind != "END":
            self.fail("unexpected token")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            tok = self.next()
            left = BinOp(tok.text, left, self.term(), (tok.line, tok.col))
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.peek().kind == "OP" and self.peek().text in "*/":
            tok = self.next()
            left = BinOp(tok.text, left, self.factor(), (tok.line, tok.col))
        return left

    def factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.next()
            return Neg(self.factor(), (tok.line, tok.col))
        return self.primary()

    def primary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return Num(int(tok.text), (tok.line, tok.col))
        if tok.kind == "OP" and tok.text == "(":
            self.next()
            e = self.expr()
            self.expect_op(")")
            return e
        if tok.kind == "NAME":
            return self.atom()
        self.fail("expected a term")

    def atom(self) -> Atom:
        tok = self.next()
        name, pos = tok.text, (tok.line, tok.col)
        if name in ("T", "JW", "e"):
            self.expect_op("(")
            p = self.signed_int()
            self.expect_op(",")
            q = self.signed_int()
            self.expect_op(")")
            return Atom(name, (p, q), None, pos)
        if name == "S":
            self.expect_op("(")
            n = self.signed_int()
            self.expect_op(")")
            return Atom(name, (n,), None, pos)
        if name in ("l", "m", "x", "t"):
            power = None
            if self.peek().kind == "OP" and self.peek().text == "^":
                self.next()
                power = self.signed_int()
            return Atom(name, (), power, pos)
        if name == "y":
            return Atom(name, (), None, pos)
        raise ParseError(f"unknown atom {name!r}", tok.line, tok.col)


def parse(src: str) -> Expr:
    """Parse text into an expression tree; raises ``ParseError`` with ``line:col``."""
    return _Parser(src).parse()


# ---------------------------------------------------------------------------
# lowering


def _family(v) -> str:
    if isinstance(v, TorusSkein):
        return "skein"
    if isinstance(v, QTorusPoly):
        return "torus"
    if isinstance(v, ModuleElt):
        return "module"
    return "scalar"


def _promote(v, family: str):
    if _family(v) == family:
        return v
    if family == "skein":
        return TorusSkein.scalar(v)
    if family == "torus":
        return QTorusPoly.scalar(v)
    if family == "module":
        return ModuleElt.term(0, v)
    raise ValueError(family)


def _unify(a, b, pos):
    fa, fb = _family(a), _family(b)
    if fa == fb:
        return a, b
    if fa == "scalar":
        return _promote(a, fb), b
    if fb == "scalar":
        return a, _promote(b, fa)
    raise ExprTypeError(f"{pos[0]}:{pos[1]}: cannot combine a {fa} element with a {fb} element")


def _atom_value(a: Atom):
    if a.name == "T":
        return TorusSkein.curve(*a.args)
    if a.name == "JW":
        return jw_to_t(*a.args)
    if a.name == "e":
        return e_monomial(*a.args)
    if a.name == "S":
        return ModuleElt.term(a.args[0])
    if a.name == "y":
        return ModuleElt.y()
    k = 1 if a.power is None else a.power
    if a.name == "t":
        return LaurentT.mono(k)
    if a.name == "l":
        return QTorusPoly.mono(k, 0)
    if a.name == "m":
        return QTorusPoly.mono(0, k)
    if a.name == "x":
        if k < 0:
            raise ExprTypeError(f"{a.pos[0]}:{a.pos[1]}: x has no negative powers")
        out = ModuleElt.unit()
        for _ in range(k):
            out = out.x_times()
        return out
    raise ExprTypeError(f"unknown atom {a.name}")


def _times(a, b, pos):
    fa, fb = _family(a), _family(b)
    if fa == "scalar":
        return b * a if fb == "scalar" else b.scale(a)
    if fb == "scalar":
        return a.scale(b)
    a, b = _unify(a, b, pos)
    if fa == "skein":
        return mul(a, b)
    if fa == "torus":
        return qt_mul(a, b)
    if a.sy and b.sy:
        raise ExprTypeError(f"{pos[0]}:{pos[1]}: y*y is not a module element")
    return commutative_product(a, b, ModuleElt())


def _eval(e: Expr):
    if isinstance(e, Num):
        return LaurentT.const(e.value)
    if isinstance(e, Atom):
        return _atom_value(e)
    if isinstance(e, Neg):
        v = _eval(e.arg)
        return -v
    left, right = _eval(e.left), _eval(e.right)
    if e.op in "+-":
        left, right = _unify(left, right, e.pos)
        return left + right if e.op == "+" else left - right
    if e.op == "*":
        return _times(left, right, e.pos)
    # division by a scalar
    if _family(right) != "scalar":
        raise ExprTypeError(f"{e.pos[0]}:{e.pos[1]}: can only divide by an expression in t")
    if not right:
        raise ExprTypeError(f"{e.pos[0]}:{e.pos[1]}: division by zero")
    inv = right ** -1 if isinstance(right, LaurentT) and right.is_monomial() else as_ratfunc(right).inverse()
    inv = simplify_coeff(inv)
    return inv * left if _family(left) == "scalar" else left.scale(inv)


def families(e: Expr) -> set:
    """Atom families used by ``e`` (``scalar`` excluded)."""
    if isinstance(e, Atom):
        f = FAMILY_OF_ATOM[e.name]
        return set() if f == "scalar" else {f}
    if isinstance(e, Neg):
        return families(e.arg)
    if isinstance(e, BinOp):
        return families(e.left) | families(e.right)
    return set()


def lower(e: Expr, expect: Optional[str] = None):
    """Evaluate to a ``TorusSkein``, ``QTorusPoly`` or ``ModuleElt``.

    A pure scalar is promoted to ``expect`` (default: skein).  Raises
    ``ExprTypeError`` naming both families when atoms are mixed, or when the
    result is not of the expected family.
    """
    fams = sorted(families(e))
    if len(fams) > 1:
        raise ExprTypeError(f"expression mixes {fams[0]} atoms with {fams[1]} atoms")
    v = _eval(e)
    fam = _family(v)
    if fam == "scalar":
        return _promote(v, expect or "skein")
    if expect is not None and fam != expect:
        raise ExprTypeError(f"expected a {expect} expression, got a {fam} expression")
    return v


def parse_value(src: str, expect: Optional[str] = None):
    return lower(parse(src), expect)


def format_value(v, mode: str = "text") -> str:
    """Render a value as re-parseable text or as JSON."""
    if mode == "json":
        return json.dumps(v.to_json(), sort_keys=False)
    if mode != "text":
        raise ValueError(f"unknown format {mode!r}")
    return str(v)


def value_from_json(obj):
    """Inverse of the JSON schemas of the three element families."""
    kind = obj.get("type") if isinstance(obj, dict) else None
    if kind == "torus_skein":
        return TorusSkein.from_json(obj)
    if kind == "qtorus":
        return QTorusPoly.from_json(obj)
    if kind == "module_elt":
        return ModuleElt.from_json(obj)
    raise ValueError(f"unknown element type {kind!r}")
