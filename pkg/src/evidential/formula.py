"""Formula AST, parser, and pretty-printer.

Concrete syntax::

    atom     ::= [A-Za-z_][A-Za-z0-9_]*
    operators:   ~ (not)   & (and)   | (or)   -> (implies)   => (entails)
    precedence:  ~  >  &  >  |  >  ->  >  =>
    & and | are left-associative; -> and => are right-associative;
    parentheses override.  Unicode aliases accepted on input:
    ``¬ ∧ ∨ → ⇒``.

Two placement modes govern the entailment connective ``=>``:

* ``strict`` (default): ``=>`` may only be the outermost connective, and
  its operands must be entailment-free.
* ``extended``: ``=>`` may nest; it then denotes the constant-valued
  formula whose interpretation everywhere is its own truth set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FormulaSyntaxError, NestedEntailmentError

__all__ = [
    "Formula",
    "Atom",
    "Not",
    "And",
    "Or",
    "Implies",
    "Entails",
    "STRICT",
    "EXTENDED",
    "parse",
    "format_formula",
]

STRICT = "strict"
EXTENDED = "extended"


class Formula:
    """Base class for formula AST nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    """Material implication; an abbreviation for ``~left | right``."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Entails(Formula):
    """Meaning entailment: true where left's interpretation is contained in right's."""

    left: Formula
    right: Formula


def check_mode(mode: str) -> None:
    if mode not in (STRICT, EXTENDED):
        raise ValueError(f"mode must be {STRICT!r} or {EXTENDED!r}, got {mode!r}")


def contains_entailment(f: Formula) -> bool:
    if isinstance(f, Atom):
        return False
    if isinstance(f, Not):
        return contains_entailment(f.operand)
    if isinstance(f, Entails):
        return True
    return contains_entailment(f.left) or contains_entailment(f.right)


def check_strict_placement(f: Formula) -> None:
    """Reject entailment anywhere except as the single outermost connective."""
    operands = (f.left, f.right) if isinstance(f, Entails) else (f,)
    for operand in operands:
        if contains_entailment(operand):
            raise NestedEntailmentError(
                "entailment (=>) may only be the outermost connective in strict mode"
            )


_TOKEN = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<atom>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<entails>=>|⇒)
    | (?P<implies>->|→)
    | (?P<not>~|¬)
    | (?P<and>&|∧)
    | (?P<or>\||∨)
    | (?P<lparen>\()
    | (?P<rparen>\))
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos + 1))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    """Recursive descent over the operator precedence ladder."""

    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str) -> tuple[str, str, int]:
        token = self.peek()
        if token[0] != kind:
            raise FormulaSyntaxError(
                f"expected {kind}, found {token[1]!r}" if token[0] != "end"
                else f"unexpected end of input (expected {kind})",
                token[2],
            )
        return self.advance()

    def parse_entails(self) -> Formula:
        left = self.parse_implies()
        if self.peek()[0] == "entails":
            self.advance()
            return Entails(left, self.parse_entails())
        return left

    def parse_implies(self) -> Formula:
        left = self.parse_or()
        if self.peek()[0] == "implies":
            self.advance()
            return Implies(left, self.parse_implies())
        return left

    def parse_or(self) -> Formula:
        f = self.parse_and()
        while self.peek()[0] == "or":
            self.advance()
            f = Or(f, self.parse_and())
        return f

    def parse_and(self) -> Formula:
        f = self.parse_unary()
        while self.peek()[0] == "and":
            self.advance()
            f = And(f, self.parse_unary())
        return f

    def parse_unary(self) -> Formula:
        kind, text, position = self.peek()
        if kind == "not":
            self.advance()
            return Not(self.parse_unary())
        if kind == "atom":
            self.advance()
            return Atom(text)
        if kind == "lparen":
            self.advance()
            f = self.parse_entails()
            self.expect("rparen")
            return f
        if kind == "end":
            raise FormulaSyntaxError("unexpected end of input", position)
        raise FormulaSyntaxError(f"unexpected {text!r}", position)


def parse(text: str, mode: str = STRICT) -> Formula:
    """Parse formula text into an AST.

    Raises :class:`FormulaSyntaxError` on malformed input and
    :class:`NestedEntailmentError` when strict mode finds a nested ``=>``.
    """
    check_mode(mode)
    parser = _Parser(_tokenize(text))
    f = parser.parse_entails()
    trailing = parser.peek()
    if trailing[0] != "end":
        raise FormulaSyntaxError(f"unexpected {trailing[1]!r} after formula", trailing[2])
    if mode == STRICT:
        check_strict_placement(f)
    return f


# Binding strength, loosest first; used to decide where parentheses are needed.
_LEVEL = {Entails: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6}
_SYMBOL = {Entails: "=>", Implies: "->", Or: "|", And: "&"}
_RIGHT_ASSOCIATIVE = (Entails, Implies)


def format_formula(f: Formula) -> str:
    """Emit minimally parenthesized text that reparses to an identical AST."""
    return _format(f, 0, False)


def _format(f: Formula, parent_level: int, is_weak_side: bool) -> str:
    level = _LEVEL[type(f)]
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "~" + _format(f.operand, level, False)
    symbol = _SYMBOL[type(f)]
    if isinstance(f, _RIGHT_ASSOCIATIVE):
        text = f"{_format(f.left, level, True)} {symbol} {_format(f.right, level, False)}"
    else:
        text = f"{_format(f.left, level, False)} {symbol} {_format(f.right, level, True)}"
    if level < parent_level or (level == parent_level and is_weak_side):
        return "(" + text + ")"
    return text
