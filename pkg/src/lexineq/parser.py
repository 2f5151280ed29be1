"""Recursive-descent parser for inequality expressions.

Grammar::

    inequality := expr ('>=' | '<=') expr
    expr       := term (('+' | '-') term)*
    term       := factor (('*' | '/') factor)*
    factor     := primary ('^' INT)?
    primary    := NUMBER | NUMBER 'i' | 'i' | 'Z' | '(' expr ')' | '-' primary

The single free variable is Z (case-insensitive); ``i`` is the
imaginary unit.  Complex literals may be written ``a``, ``bi`` or
``(a+bi)``; the parenthesized form (optionally with a leading minus on
either part) is folded into a single literal node, so printing a parsed
tree and re-parsing it reproduces the tree exactly.  A ``<=`` input is
normalized to ``>=`` by swapping the sides.  Two inequalities joined by
``&&`` form a system; :func:`parse_input` accepts both shapes.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from typing import Union

from .errors import MultipleVariablesError, NonIntegerExponentError, ParseError
from .lexorder import complex_div

__all__ = [
    "Lit",
    "Var",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Pow",
    "Expr",
    "SourceExpr",
    "parse",
    "parse_input",
    "parse_complex",
    "to_text",
    "source_to_text",
    "eval_expr",
    "has_var",
]


def _clean_component(x: float) -> float:
    # normalize -0.0 so printed literals re-parse to the same node
    return x + 0.0


@dataclass(frozen=True)
class Lit:
    value: complex

    def __post_init__(self):
        v = complex(_clean_component(self.value.real), _clean_component(self.value.imag))
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError(f"literal must be finite, got {v!r}")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True)
class Sub:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True)
class Mul:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True)
class Div:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int

    def __post_init__(self):
        if not isinstance(self.exponent, int) or self.exponent < 1:
            raise ValueError("exponent must be a positive integer")


Expr = Union[Lit, Var, Neg, Add, Sub, Mul, Div, Pow]


@dataclass(frozen=True)
class SourceExpr:
    """A parsed inequality; ``relation`` is always '>=' after
    normalization (a '<=' input swaps the sides)."""

    text: str
    lhs: Expr
    rhs: Expr
    relation: str


_TOKEN_RE = _re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_]\w*)"
    r"|(?P<rel>>=|<=)"
    r"|(?P<and>&&)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # num | ident | rel | and | op | end
    text: str
    pos: int   # character index into the source


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", _byte_offset(text, bad_at))
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> _Token:
        return self.tokens[self.i]

    def _next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _error(self, message: str, tok: _Token | None = None, cls=ParseError):
        tok = tok or self._peek()
        raise cls(message, _byte_offset(self.text, tok.pos))

    def _expect_op(self, op: str):
        tok = self._next()
        if tok.kind != "op" or tok.text != op:
            self._error(f"expected {op!r}, found {tok.text or 'end of input'!r}", tok)

    def parse_inequality(self) -> SourceExpr:
        lhs = self.parse_expr()
        tok = self._next()
        if tok.kind != "rel":
            self._error(f"expected '>=' or '<=', found {tok.text or 'end of input'!r}", tok)
        rhs = self.parse_expr()
        if tok.text == "<=":
            lhs, rhs = rhs, lhs
        return SourceExpr(text=self.text, lhs=lhs, rhs=rhs, relation=">=")

    def parse_expr(self) -> Expr:
        acc = self.parse_term()
        while True:
            tok = self._peek()
            if tok.kind == "op" and tok.text in "+-":
                self._next()
                term = self.parse_term()
                fused = _fuse_literal(acc, tok.text, term)
                if fused is not None:
                    acc = fused
                elif tok.text == "+":
                    acc = Add(acc, term)
                else:
                    acc = Sub(acc, term)
            else:
                return acc

    def parse_term(self) -> Expr:
        acc = self.parse_factor()
        while True:
            tok = self._peek()
            if tok.kind == "op" and tok.text in "*/":
                self._next()
                rhs = self.parse_factor()
                acc = Mul(acc, rhs) if tok.text == "*" else Div(acc, rhs)
            else:
                return acc

    def parse_factor(self) -> Expr:
        base = self.parse_primary()
        tok = self._peek()
        if tok.kind == "op" and tok.text == "^":
            self._next()
            exp = self._next()
            if exp.kind != "num" or not exp.text.isdigit() or int(exp.text) < 1:
                self._error("exponent must be a positive integer literal", exp,
                            cls=NonIntegerExponentError)
            return Pow(base, int(exp.text))
        return base

    def parse_primary(self) -> Expr:
        tok = self._next()
        if tok.kind == "num":
            value = float(tok.text)
            if not math.isfinite(value):
                self._error("numeric literal overflows to infinity", tok)
            nxt = self._peek()
            if nxt.kind == "ident" and nxt.text in ("i", "I"):
                self._next()
                return Lit(complex(0.0, value))
            return Lit(complex(value, 0.0))
        if tok.kind == "ident":
            name = tok.text
            if name in ("i", "I"):
                return Lit(1j)
            if name.lower() == "z":
                return Var()
            self._error(f"unsupported variable {name!r}; the only variable is Z", tok,
                        cls=MultipleVariablesError)
        if tok.kind == "op" and tok.text == "(":
            inner = self.parse_expr()
            self._expect_op(")")
            # parenthesized sign-adjusted literal, e.g. "(-3)" or "(-2i)"
            if isinstance(inner, Neg) and isinstance(inner.operand, Lit):
                return Lit(-inner.operand.value)
            return inner
        if tok.kind == "op" and tok.text == "-":
            return Neg(self.parse_primary())
        self._error(f"expected a value, found {tok.text or 'end of input'!r}", tok)


def _fuse_literal(acc: Expr, op: str, term: Expr) -> Lit | None:
    """Fold the complex-literal syntax ``a + bi`` / ``a - bi``.

    Applies only when the accumulated left side is a real literal
    (possibly negated) and the incoming term is a purely imaginary
    literal, mirroring the ``(a+bi)`` literal grammar.  Real + real is
    left alone: that is arithmetic, not literal syntax.
    """
    if not (isinstance(term, Lit) and term.value.real == 0.0 and term.value.imag != 0.0):
        return None
    if isinstance(acc, Lit) and acc.value.imag == 0.0:
        real = acc.value.real
    elif isinstance(acc, Neg) and isinstance(acc.operand, Lit) and acc.operand.value.imag == 0.0:
        real = -acc.operand.value.real
    else:
        return None
    imag = term.value.imag if op == "+" else -term.value.imag
    return Lit(complex(real, imag))


def parse(text: str) -> SourceExpr:
    """Parse a single inequality."""
    parser = _Parser(text)
    result = parser.parse_inequality()
    tail = parser._peek()
    if tail.kind != "end":
        if tail.kind == "and":
            parser._error("'&&' joins two inequalities; use parse_input for systems", tail)
        parser._error(f"unexpected trailing input {tail.text!r}", tail)
    return result


def parse_input(text: str) -> tuple[SourceExpr, ...]:
    """Parse one inequality, or two joined by '&&'."""
    parser = _Parser(text)
    first = parser.parse_inequality()
    tok = parser._peek()
    if tok.kind == "end":
        return (first,)
    if tok.kind != "and":
        parser._error(f"unexpected trailing input {tok.text!r}", tok)
    parser._next()
    second = parser.parse_inequality()
    tail = parser._peek()
    if tail.kind != "end":
        parser._error("at most two inequalities may be joined by '&&'", tail)
    return (first, second)


def parse_complex(text: str) -> complex:
    """Parse a constant expression such as ``1+2i`` or ``-0.5i``."""
    parser = _Parser(text)
    node = parser.parse_expr()
    tail = parser._peek()
    if tail.kind != "end":
        parser._error(f"unexpected trailing input {tail.text!r}", tail)
    if has_var(node):
        raise ParseError("expected a constant, found the variable Z", _byte_offset(text, 0))
    return eval_expr(node, 0j)


def has_var(node: Expr) -> bool:
    if isinstance(node, Var):
        return True
    if isinstance(node, (Lit,)):
        return False
    if isinstance(node, Neg):
        return has_var(node.operand)
    if isinstance(node, Pow):
        return has_var(node.base)
    return has_var(node.lhs) or has_var(node.rhs)


def eval_expr(node: Expr, z: complex) -> complex:
    """Evaluate an expression tree at a point.

    Division by an exact zero raises ZeroDivisionError (a pole of the
    expression).
    """
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, Var):
        return z
    if isinstance(node, Neg):
        return -eval_expr(node.operand, z)
    if isinstance(node, Add):
        return eval_expr(node.lhs, z) + eval_expr(node.rhs, z)
    if isinstance(node, Sub):
        return eval_expr(node.lhs, z) - eval_expr(node.rhs, z)
    if isinstance(node, Mul):
        return eval_expr(node.lhs, z) * eval_expr(node.rhs, z)
    if isinstance(node, Div):
        return complex_div(eval_expr(node.lhs, z), eval_expr(node.rhs, z))
    if isinstance(node, Pow):
        base = eval_expr(node.base, z)
        acc = base
        for _ in range(node.exponent - 1):
            acc = acc * base
        return acc
    raise TypeError(f"not an expression node: {node!r}")


def _lit_text(v: complex) -> str:
    re_, im = v.real, v.imag
    if im == 0.0:
        return repr(re_) if re_ >= 0.0 else f"({re_!r})"
    if re_ == 0.0:
        return f"{im!r}i" if im > 0.0 else f"({im!r}i)"
    sign = "+" if im > 0.0 else "-"
    return f"({re_!r}{sign}{abs(im)!r}i)"


def _primary_text(node: Expr) -> str:
    if isinstance(node, Var):
        return "Z"
    if isinstance(node, Lit):
        return _lit_text(node.value)
    if isinstance(node, Neg):
        return "-" + _primary_text(node.operand)
    return "(" + to_text(node) + ")"


def to_text(node: Expr) -> str:
    """Print an expression so that re-parsing reproduces the tree."""
    if isinstance(node, Lit):
        return _lit_text(node.value)
    if isinstance(node, Var):
        return "Z"
    if isinstance(node, Neg):
        return "-" + _primary_text(node.operand)
    if isinstance(node, Add):
        return f"({to_text(node.lhs)} + {to_text(node.rhs)})"
    if isinstance(node, Sub):
        return f"({to_text(node.lhs)} - {to_text(node.rhs)})"
    if isinstance(node, Mul):
        return f"({to_text(node.lhs)} * {to_text(node.rhs)})"
    if isinstance(node, Div):
        return f"({to_text(node.lhs)} / {to_text(node.rhs)})"
    if isinstance(node, Pow):
        return f"{_primary_text(node.base)}^{node.exponent}"
    raise TypeError(f"not an expression node: {node!r}")


def source_to_text(src: SourceExpr) -> str:
    return f"{to_text(src.lhs)} {src.relation} {to_text(src.rhs)}"
