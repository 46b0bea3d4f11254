"""A small expression language for scalar functions of ``u``.

Grammar (EBNF)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | power
    power  := atom ("^" factor)?
    atom   := NUMBER | "u" | FN "(" expr ")" | "(" expr ")"

``^`` is right associative (``2^3^2 == 512``) and a leading minus applies to
the whole power: ``-u^2`` means ``-(u^2)``.  There is no implicit
multiplication (``2u`` is an error).  FN is one of sin, cos, sinh, cosh, tanh,
exp, ln, sqrt, abs.
"""
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import jet as J
from .errors import DomainError, ParseError

FUNCTIONS = ("sin", "cos", "sinh", "cosh", "tanh", "exp", "ln", "sqrt", "abs")
VARIABLE = "u"


# -- tokens -----------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER IDENT PLUS MINUS STAR SLASH CARET LPAREN RPAREN COMMA SEMI EOF
    text: str
    offset: int
    value: float = 0.0

    def describe(self):
        if self.kind == "EOF":
            return "end of input"
        return f"{self.text!r}"


_PUNCT = {"+": "PLUS", "-": "MINUS", "*": "STAR", "/": "SLASH", "^": "CARET",
          "(": "LPAREN", ")": "RPAREN", ",": "COMMA", ";": "SEMI"}
_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def tokenize(src):
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, i))
            i += 1
            continue
        m = _NUMBER.match(src, i)
        if m:
            tokens.append(Token("NUMBER", m.group(), i, float(m.group())))
            i = m.end()
            continue
        m = _IDENT.match(src, i)
        if m:
            tokens.append(Token("IDENT", m.group(), i))
            i = m.end()
            continue
        raise ParseError(i, "a number, identifier or operator", repr(ch), src)
    tokens.append(Token("EOF", "", n))
    return tokens


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Var:
    name: str = VARIABLE


@dataclass(frozen=True)
class Unary:
    op: str  # only "neg"
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    fn: str
    arg: "Expr"


Expr = Union[Number, Var, Unary, Binary, Call]


# -- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, tokens, source):
        self.tokens = tokens
        self.pos = 0
        self.source = source

    @property
    def tok(self):
        return self.tokens[self.pos]

    def fail(self, expected, tok=None):
        tok = tok or self.tok
        raise ParseError(tok.offset, expected, tok.describe(), self.source)

    def take(self, kind, expected):
        if self.tok.kind != kind:
            self.fail(expected)
        t = self.tok
        self.pos += 1
        return t

    def parse(self):
        e = self.expr()
        if self.tok.kind != "EOF":
            self.fail("an operator or end of input")
        return e

    def expr(self):
        left = self.term()
        while self.tok.kind in ("PLUS", "MINUS"):
            op = self.tok.text
            self.pos += 1
            left = Binary(op, left, self.term())
        return left

    def term(self):
        left = self.factor()
        while self.tok.kind in ("STAR", "SLASH"):
            op = self.tok.text
            self.pos += 1
            left = Binary(op, left, self.factor())
        return left

    def factor(self):
        if self.tok.kind == "MINUS":
            self.pos += 1
            return Unary("neg", self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "CARET":
            self.pos += 1
            return Binary("^", base, self.factor())
        return base

    def atom(self):
        t = self.tok
        if t.kind == "NUMBER":
            self.pos += 1
            return Number(t.value)
        if t.kind == "LPAREN":
            self.pos += 1
            e = self.expr()
            self.take("RPAREN", "')'")
            return e
        if t.kind == "IDENT":
            if t.text == VARIABLE:
                self.pos += 1
                return Var()
            if t.text not in FUNCTIONS:
                self.fail(f"'{VARIABLE}' or one of {', '.join(FUNCTIONS)}")
            self.pos += 1
            self.take("LPAREN", f"'(' after {t.text}")
            if self.tok.kind == "RPAREN":
                self.fail(f"exactly one argument to {t.text}")
            arg = self.expr()
            if self.tok.kind == "COMMA":
                self.fail(f"exactly one argument to {t.text}")
            self.take("RPAREN", "')'")
            return Call(t.text, arg)
        self.fail("a number, 'u', a function call or '('")


def parse(src_or_tokens, source=None):
    """Parse a string (or a token list from :func:`tokenize`) into an AST."""
    if isinstance(src_or_tokens, str):
        source = src_or_tokens
        tokens = tokenize(src_or_tokens)
    else:
        tokens = list(src_or_tokens)
    return _Parser(tokens, source).parse()


def to_source(e):
    """Render an AST back to (fully parenthesised) source text."""
    if isinstance(e, Number):
        return repr(float(e.value))
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Unary):
        return f"(-{to_source(e.operand)})"
    if isinstance(e, Binary):
        return f"({to_source(e.left)} {e.op} {to_source(e.right)})"
    if isinstance(e, Call):
        return f"{e.fn}({to_source(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")


# -- evaluation -------------------------------------------------------------

_JET_FUNCS = {
    "sin": J.sin, "cos": J.cos, "sinh": J.sinh, "cosh": J.cosh,
    "tanh": J.tanh, "exp": J.exp, "ln": J.log, "sqrt": J.sqrt, "abs": J.absolute,
}


def _float_pow(x, p):
    p = np.asarray(p, dtype=float)
    if np.all(p == np.round(p)):
        with np.errstate(divide="raise"):
            try:
                return np.power(x, p)
            except FloatingPointError:
                raise DomainError("zero raised to a negative power") from None
    if np.any(np.asarray(x) <= 0):
        raise DomainError(f"non-integer power of non-positive base {x}")
    return np.power(x, p)


def _float_call(fn, x):
    if fn in ("ln", "sqrt"):
        bad = np.asarray(x) <= 0 if fn == "ln" else np.asarray(x) < 0
        if np.any(bad):
            raise DomainError(f"{fn} of out-of-domain value {x}")
        return np.log(x) if fn == "ln" else np.sqrt(x)
    return {"sin": np.sin, "cos": np.cos, "sinh": np.sinh, "cosh": np.cosh,
            "tanh": np.tanh, "exp": np.exp, "abs": np.abs}[fn](x)


def _eval(e, u, is_jet):
    try:
        if isinstance(e, Number):
            return e.value
        if isinstance(e, Var):
            return u
        if isinstance(e, Unary):
            return -_eval(e.operand, u, is_jet)
        if isinstance(e, Call):
            x = _eval(e.arg, u, is_jet)
            if is_jet and isinstance(x, J.Jet):
                return _JET_FUNCS[e.fn](x)
            return _float_call(e.fn, x)  # constants stay plain floats
        left = _eval(e.left, u, is_jet)
        right = _eval(e.right, u, is_jet)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        if e.op == "/":
            if not is_jet:
                if np.any(np.asarray(right) == 0):
                    raise DomainError("division by zero")
                return np.divide(left, right)
            if not isinstance(left, J.Jet) and not isinstance(right, J.Jet):
                if right == 0:
                    raise DomainError("division by zero")
                return left / right
            return left / right
        if e.op == "^":
            if is_jet:
                if not isinstance(left, J.Jet):
                    if not isinstance(right, J.Jet):
                        return _float_pow(left, right)
                    left = J.Jet.constant(left, u.order)
                return J.power(left, right)
            return _float_pow(left, right)
        raise TypeError(f"unknown operator {e.op!r}")
    except DomainError as err:
        if err.path is None:
            err.path = to_source(e)
        raise


def eval_jet(e, u0, order=J.DEFAULT_ORDER):
    """Jet of the expression at ``u0`` (scalar or array of points)."""
    if order == 0:
        u = J.Jet(np.asarray(u0, dtype=float)[None])  # value only
    else:
        u = J.Jet.variable(u0, order)
    r = _eval(e, u, True)
    if not isinstance(r, J.Jet):
        r = J.Jet.constant(np.broadcast_to(r, np.shape(u0)), order)
    return r


def eval_float(e, u):
    """Plain floating-point value; ``u`` may be an array."""
    r = _eval(e, np.asarray(u, dtype=float) if np.ndim(u) else float(u), False)
    return np.broadcast_to(r, np.shape(u)).astype(float) if np.ndim(u) else float(r)


class Expression:
    """A parsed expression together with its source text."""

    __slots__ = ("source", "ast")

    def __init__(self, source):
        self.source = source
        self.ast = parse(source)

    def __call__(self, u):
        return eval_float(self.ast, u)

    def jet(self, u0, order=J.DEFAULT_ORDER):
        return eval_jet(self.ast, u0, order)

    def __repr__(self):
        return f"Expression({self.source!r})"

    def __eq__(self, other):
        return isinstance(other, Expression) and self.ast == other.ast

    def __hash__(self):
        return hash(self.ast)


def compile_expr(src):
    if isinstance(src, Expression):
        return src
    return Expression(src)
