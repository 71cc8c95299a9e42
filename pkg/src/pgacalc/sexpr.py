"""Tokenizer, AST and parser for the calculator's S-expression language.

Grammar::

    expr    := RATIONAL | SYMBOL | "(" head expr* ")"
    RATIONAL:= -?[0-9]+(/[0-9]+)?
    SYMBOL  := [A-Za-z][A-Za-z0-9?!-]*

``;`` starts a comment running to the end of the line.  Literal forms
(``point``, ``line``, ``mv``, ``versor``, ``ideal-point``) take rational
literals only; every other head must be in the operator table, whose arity
and argument categories are checked here, before evaluation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .scalar import format_rational, parse_rational


class ExprError(Exception):
    """Lexing, parsing or evaluation error, with an optional source position."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(message + where)


@dataclass(frozen=True)
class Token:
    kind: str  # "(" | ")" | "rational" | "symbol"
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>;[^\n]*)
  | (?P<paren>[()])
  | (?P<rational>-?\d+(?:/\d+)?)
  | (?P<symbol>[A-Za-z][A-Za-z0-9?!\-]*)
    """,
    re.VERBOSE,
)
_SYMBOL_CHAR = re.compile(r"[A-Za-z0-9?!/\-]")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ExprError(f"illegal character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "rational" and m.end() < len(text) and _SYMBOL_CHAR.match(text, m.end()):
            bad = m.end()
            raise ExprError(f"illegal character {text[bad]!r} after number", line, bad - line_start + 1)
        if kind == "paren":
            tokens.append(Token(chunk, chunk, line, col))
        elif kind in ("rational", "symbol"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    return tokens


# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class PointLit:
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class IdealPointLit:
    dx: Fraction
    dy: Fraction


@dataclass(frozen=True)
class LineLit:
    a: Fraction
    b: Fraction
    c: Fraction


@dataclass(frozen=True)
class MvLit:
    coeffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class VersorLit:
    coeffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple["Expr", ...]
    line: int = 0
    col: int = 0


Expr = Union[Literal, BoolLit, PointLit, IdealPointLit, LineLit, MvLit, VersorLit, Call]

LITERAL_FORMS = {
    "point": (2, lambda v: PointLit(*v)),
    "ideal-point": (2, lambda v: IdealPointLit(*v)),
    "line": (3, lambda v: LineLit(*v)),
    "mv": (8, lambda v: MvLit(tuple(v))),
    "versor": (8, lambda v: VersorLit(tuple(v))),
}


def unparse(e: Expr) -> str:
    """Source text for an expression (canonical spacing)."""
    r = format_rational
    if isinstance(e, Literal):
        return r(e.value)
    if isinstance(e, BoolLit):
        return "true" if e.value else "false"
    if isinstance(e, PointLit):
        return f"(point {r(e.x)} {r(e.y)})"
    if isinstance(e, IdealPointLit):
        return f"(ideal-point {r(e.dx)} {r(e.dy)})"
    if isinstance(e, LineLit):
        return f"(line {r(e.a)} {r(e.b)} {r(e.c)})"
    if isinstance(e, MvLit):
        return "(mv " + " ".join(map(r, e.coeffs)) + ")"
    if isinstance(e, VersorLit):
        return "(versor " + " ".join(map(r, e.coeffs)) + ")"
    return "(" + " ".join([e.op, *map(unparse, e.args)]) + ")"


# --- parser ---------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token], operators):
        self.tokens = tokens
        self.pos = 0
        self.operators = operators

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            raise ExprError("unexpected end of input (unbalanced parentheses?)",
                            last.line if last else 1, last.col if last else 1)
        self.pos += 1
        return tok

    def expr(self) -> Expr:
        tok = self.next()
        if tok.kind == "rational":
            try:
                return Literal(parse_rational(tok.text))
            except ZeroDivisionError as exc:
                raise ExprError(str(exc), tok.line, tok.col) from None
        if tok.kind == "symbol":
            if tok.text in ("true", "false"):
                return BoolLit(tok.text == "true")
            raise ExprError(f"unexpected symbol {tok.text!r} outside operator position", tok.line, tok.col)
        if tok.kind == ")":
            raise ExprError("unexpected ')'", tok.line, tok.col)
        return self.form(tok)

    def form(self, open_tok: Token) -> Expr:
        head = self.next()
        if head.kind != "symbol":
            raise ExprError("expected an operator name after '('", head.line, head.col)
        args: list[Expr] = []
        arg_tokens: list[Token] = []
        while True:
            tok = self.peek()
            if tok is None:
                raise ExprError("unbalanced parentheses: missing ')'", open_tok.line, open_tok.col)
            if tok.kind == ")":
                self.pos += 1
                break
            arg_tokens.append(tok)
            args.append(self.expr())
        name = head.text
        if name in LITERAL_FORMS:
            arity, build = LITERAL_FORMS[name]
            if len(args) != arity:
                raise ExprError(f"'{name}' takes {arity} rational literals, got {len(args)}", head.line, head.col)
            for a, t in zip(args, arg_tokens):
                if not isinstance(a, Literal):
                    raise ExprError(f"'{name}' arguments must be rational literals", t.line, t.col)
            return build([a.value for a in args])
        op = self.operators.get(name)
        if op is None:
            raise ExprError(f"unknown operator {name!r}", head.line, head.col)
        if len(args) != len(op.params):
            raise ExprError(f"'{name}' expects {len(op.params)} argument(s), got {len(args)}", head.line, head.col)
        call = Call(name, tuple(args), head.line, head.col)
        for i, (a, t, allowed) in enumerate(zip(args, arg_tokens, op.params), start=1):
            got = static_kind(a, self.operators)
            if got not in allowed:
                raise ExprError(
                    f"argument {i} of '{name}' must be {' or '.join(sorted(allowed))}, "
                    f"got {got} in {unparse(a)}", t.line, t.col)
        return call


def static_kind(e: Expr, operators) -> str:
    """The value kind an expression produces, known without evaluating it."""
    if isinstance(e, Literal):
        return "rational"
    if isinstance(e, BoolLit):
        return "boolean"
    if isinstance(e, (PointLit, IdealPointLit)):
        return "point"
    if isinstance(e, LineLit):
        return "line"
    if isinstance(e, MvLit):
        return "multivector"
    if isinstance(e, VersorLit):
        return "versor"
    op = operators[e.op]
    return op.result([static_kind(a, operators) for a in e.args])


def parse(source: str | list[Token], operators=None) -> Expr:
    """Parse exactly one expression."""
    if operators is None:
        from .evaluate import OPERATORS as operators
    tokens = tokenize(source) if isinstance(source, str) else source
    if not tokens:
        raise ExprError("empty input", 1, 1)
    p = _Parser(tokens, operators)
    e = p.expr()
    extra = p.peek()
    if extra is not None:
        raise ExprError(f"unexpected trailing input {extra.text!r}", extra.line, extra.col)
    return e
