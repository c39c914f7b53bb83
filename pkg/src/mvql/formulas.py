"""Many-valued propositional formulas over named atoms.

Grammar (tightest first; binary operators are left-associative):

    ~    negation
    &    bounded-difference conjunction     /\\   minimum conjunction
    |    bounded-sum disjunction            \\/   maximum disjunction
    ^    crisp exclusive OR (same level as | and \\/)

plus parentheses, the constants ``F`` (false) and ``V`` (true), and atoms
``[A-Za-z_][A-Za-z0-9_]*`` (``F`` and ``V`` are reserved).  ``&`` and
``/\\`` may be mixed freely in one formula; they are distinct operators.

``parse`` / ``format`` round-trip: ``parse(format(f))`` is structurally
equal to ``f``, and ``format`` emits minimal parentheses.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple

from . import logic
from .errors import NonCrispOperand, ParseError, UnboundAtom, ValidationError
from .logic import TruthValue

__all__ = [
    "Formula",
    "Atom",
    "ConstTrue",
    "ConstFalse",
    "Neg",
    "LukConj",
    "LukDisj",
    "MinConj",
    "MaxDisj",
    "Xor",
    "Span",
    "parse",
    "format",
    "evaluate",
    "atoms",
    "parse_truth_literal",
    "load_assignment",
]

ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Span(NamedTuple):
    """1-based source range of a subtree: [start, end) in line/column terms."""

    line: int
    column: int
    end_line: int
    end_column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}-{self.end_line}:{self.end_column}"


@dataclass(frozen=True)
class Formula:
    """Base class for AST nodes; spans never participate in equality."""


@dataclass(frozen=True)
class Atom(Formula):
    name: str
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ConstTrue(Formula):
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ConstFalse(Formula):
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Neg(Formula):
    child: Formula
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class LukConj(Formula):
    left: Formula
    right: Formula
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class LukDisj(Formula):
    left: Formula
    right: Formula
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class MinConj(Formula):
    left: Formula
    right: Formula
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class MaxDisj(Formula):
    left: Formula
    right: Formula
    span: Span | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Xor(Formula):
    left: Formula
    right: Formula
    span: Span | None = field(default=None, compare=False, repr=False)


_DISJ_OPS = {"|": LukDisj, "\\/": MaxDisj, "^": Xor}
_CONJ_OPS = {"&": LukConj, "/\\": MinConj}
_TOKEN_OF = {LukConj: "&", MinConj: "/\\", LukDisj: "|", MaxDisj: "\\/", Xor: "^"}
_PRECEDENCE = {LukDisj: 1, MaxDisj: 1, Xor: 1, LukConj: 2, MinConj: 2}


class _Token(NamedTuple):
    kind: str  # "op", "name", "end"
    text: str
    line: int
    column: int
    end_line: int
    end_column: int


_LEXEME_RE = re.compile(r"[ \t\r\n]+|/\\|\\/|[~&|^()]|[A-Za-z_][A-Za-z0-9_]*")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line, column = 1, 1

    def advance(lexeme: str):
        nonlocal line, column
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            column = len(lexeme) - lexeme.rfind("\n")
        else:
            column += len(lexeme)

    while pos < len(text):
        match = _LEXEME_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column, text[pos])
        lexeme = match.group()
        start_line, start_column = line, column
        advance(lexeme)
        pos = match.end()
        if lexeme[0] in " \t\r\n":
            continue
        kind = "name" if lexeme[0].isalpha() or lexeme[0] == "_" else "op"
        tokens.append(_Token(kind, lexeme, start_line, start_column, line, column))
    tokens.append(_Token("end", "end of input", line, column, line, column))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def pop(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def fail(self, message: str) -> ParseError:
        token = self.peek()
        return ParseError(f"{message}, got {token.text!r}" if token.kind != "end"
                          else f"{message}, got end of input",
                          token.line, token.column, token.text)

    def parse_disjunction(self) -> Formula:
        node = self.parse_conjunction()
        while self.peek().kind == "op" and self.peek().text in _DISJ_OPS:
            op = self.pop()
            right = self.parse_conjunction()
            node = _DISJ_OPS[op.text](node, right, span=_merge(node.span, right.span))
        return node

    def parse_conjunction(self) -> Formula:
        node = self.parse_factor()
        while self.peek().kind == "op" and self.peek().text in _CONJ_OPS:
            op = self.pop()
            right = self.parse_factor()
            node = _CONJ_OPS[op.text](node, right, span=_merge(node.span, right.span))
        return node

    def parse_factor(self) -> Formula:
        token = self.peek()
        if token.kind == "op" and token.text == "~":
            self.pop()
            child = self.parse_factor()
            return Neg(child, span=_merge(_span_of(token), child.span))
        if token.kind == "op" and token.text == "(":
            self.pop()
            node = self.parse_disjunction()
            closing = self.peek()
            if closing.kind != "op" or closing.text != ")":
                raise self.fail("expected ')'")
            self.pop()
            return node
        if token.kind == "name":
            self.pop()
            span = _span_of(token)
            if token.text == "F":
                return ConstFalse(span=span)
            if token.text == "V":
                return ConstTrue(span=span)
            return Atom(token.text, span=span)
        raise self.fail("expected an atom, constant, '~' or '('")


def _span_of(token: _Token) -> Span:
    return Span(token.line, token.column, token.end_line, token.end_column)


def _merge(a: Span | None, b: Span | None) -> Span | None:
    if a is None or b is None:
        return a or b
    return Span(a.line, a.column, b.end_line, b.end_column)


def parse(text: str) -> Formula:
    """Parse formula text into an AST; raises :class:`ParseError` with the
    1-based line/column of the offending token on malformed input."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_disjunction()
    if parser.peek().kind != "end":
        raise parser.fail("unexpected trailing input")
    return node


def format(f: Formula) -> str:
    """Canonical text with minimal parentheses; inverse of :func:`parse`."""
    return _format(f, 0, False)


def _format(f: Formula, parent_prec: int, right_side: bool) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, ConstTrue):
        return "V"
    if isinstance(f, ConstFalse):
        return "F"
    if isinstance(f, Neg):
        return "~" + _format(f.child, 3, False)
    prec = _PRECEDENCE[type(f)]
    text = f"{_format(f.left, prec, False)} {_TOKEN_OF[type(f)]} {_format(f.right, prec, True)}"
    if prec < parent_prec or (prec == parent_prec and right_side):
        return f"({text})"
    return text


def atoms(f: Formula) -> frozenset[str]:
    """Names of all atoms occurring in the formula."""
    found: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            found.add(node.name)
        elif isinstance(node, Neg):
            stack.append(node.child)
        elif isinstance(node, (LukConj, LukDisj, MinConj, MaxDisj, Xor)):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


_BINARY_EVAL = {
    LukConj: logic.luk_conj,
    LukDisj: logic.luk_disj,
    MinConj: logic.min_conj,
    MaxDisj: logic.max_disj,
}


def evaluate(f: Formula, assignment: Mapping[str, object]) -> TruthValue:
    """Exact recursive evaluation under an atom-to-truth-value assignment.

    Unbound atoms raise :class:`UnboundAtom`; a non-crisp operand under
    ``^`` raises :class:`NonCrispOperand` tagged with the subtree's source
    span when the formula came from :func:`parse`.
    """
    if isinstance(f, Atom):
        try:
            value = assignment[f.name]
        except KeyError:
            raise UnboundAtom(f.name) from None
        return value if isinstance(value, TruthValue) else TruthValue(value)
    if isinstance(f, ConstTrue):
        return logic.TRUE
    if isinstance(f, ConstFalse):
        return logic.FALSE
    if isinstance(f, Neg):
        return logic.luk_neg(evaluate(f.child, assignment))
    left = evaluate(f.left, assignment)
    right = evaluate(f.right, assignment)
    if isinstance(f, Xor):
        try:
            return logic.xor_crisp(left, right)
        except NonCrispOperand as exc:
            raise NonCrispOperand(exc.value, span=f.span, context=format(f)) from None
    return _BINARY_EVAL[type(f)](left, right)


_RATIONAL_RE = re.compile(r"(\d+)/([1-9]\d*)\Z")
_DECIMAL_RE = re.compile(r"(\d+)(?:\.(\d{1,9}))?\Z")


def parse_truth_literal(literal) -> TruthValue:
    """Exact truth-value literal: ``"n/d"``, a decimal with at most nine
    fractional digits, or an integer 0/1."""
    if isinstance(literal, bool):
        return logic.TRUE if literal else logic.FALSE
    if isinstance(literal, int):
        return TruthValue(literal)
    if isinstance(literal, float):
        raise ValidationError(
            f"truth value {literal!r} must be written as a string to stay exact"
        )
    if isinstance(literal, str):
        text = literal.strip()
        if _RATIONAL_RE.match(text) or _DECIMAL_RE.match(text):
            return TruthValue(Fraction(text))
    raise ValidationError(
        f"bad truth literal {literal!r}: expected 'n/d' or a decimal with <= 9 fractional digits"
    )


def load_assignment(path: str) -> dict[str, TruthValue]:
    """Read an assignment file ``{"atoms": {"p": "1/2", "q": "0.25"}}``."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read assignment file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"assignment file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("atoms"), dict):
        raise ValidationError("assignment file must hold {\"atoms\": {...}}")
    out = {}
    for name, literal in data["atoms"].items():
        if not ATOM_RE.match(name) or name in ("F", "V"):
            raise ValidationError(f"bad atom name {name!r} in assignment file")
        out[name] = parse_truth_literal(literal)
    return out
