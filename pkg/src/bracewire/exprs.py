"""Expression language for wire and fraction terms, plus word literals.

Grammar (whitespace-insensitive)::

    expr    :=  term ('*' term)*           star, left-assoc, low precedence
    term    :=  factor ('o' factor)*       circle, left-assoc, binds tighter
    factor  :=  'e' | IDENT | '(' expr ')'
              | 'inv' '(' expr ')'         star inverse
              | 'cinv' '(' expr ')'        circle inverse (fractions only)
              | 'frac' '(' expr ',' expr ')'

An expression containing ``frac`` or ``cinv`` anywhere is a fraction
expression; its leaves must all be ``frac(wire, wire)`` terms.  ``cinv`` on a
plain wire expression is rejected with a dedicated error, since circle
inverses only exist in the brace of fractions.

Word literals use their own syntax: bracketed ``o``-joined monomials with an
optional ``^-1``, joined by dots, e.g. ``[x o y].[z]^-1.[y o z]``; ``e`` is
the empty word.

>>> parse("x o y * z")
Star(left=Circ(left=Gen(name='x'), right=Gen(name='y')), right=Gen(name='z'))
>>> print(eval_canonical(parse("inv(x) * (x o y) * inv(y)")))
2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .brace_fractions import Fraction, FractionBrace
from .canonical_wire import BracePoly
from .word_model import CMono, Word, circ_l

__all__ = [
    "Expr",
    "Identity",
    "Gen",
    "Star",
    "StarInv",
    "Circ",
    "Frac",
    "CircInv",
    "ParseError",
    "WireCircleInverseError",
    "parse",
    "render",
    "category",
    "as_wire",
    "as_fraction",
    "eval_canonical",
    "eval_word",
    "eval_fraction",
    "parse_word",
    "parse_mono",
]


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Star:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class StarInv:
    arg: "Expr"


@dataclass(frozen=True)
class Circ:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Frac:
    num: "Expr"
    den: "Expr"


@dataclass(frozen=True)
class CircInv:
    arg: "Expr"


Expr = Union[Identity, Gen, Star, StarInv, Circ, Frac, CircInv]


class ParseError(ValueError):
    """Syntax or category error, carrying a byte offset and expectations."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = expected
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)


class WireCircleInverseError(ParseError):
    """cinv applied outside fraction context."""

    def __init__(self, offset: int):
        super().__init__(
            "no circle inverses in a wire; use fractions", offset, ("frac",)
        )


_KEYWORDS = frozenset({"e", "o", "inv", "cinv", "frac"})


@dataclass(frozen=True)
class _Token:
    kind: str  # 'ident', 'e', 'o', 'inv', 'cinv', 'frac', '*', '(', ')', ',', 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in _KEYWORDS else "ident"
            tokens.append(_Token(kind, word, i))
            i = j
            continue
        if ch in "*(),":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
                tok.pos,
                (kind,),
            )
        return self.advance()

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek().kind == "*":
            self.advance()
            node = Star(node, self.parse_term())
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.peek().kind == "o":
            self.advance()
            node = Circ(node, self.parse_factor())
        return node

    def parse_factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "e":
            self.advance()
            return Identity()
        if tok.kind == "ident":
            self.advance()
            return Gen(tok.text)
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind in ("inv", "cinv"):
            self.advance()
            self.expect("(")
            node = self.parse_expr()
            self.expect(")")
            return StarInv(node) if tok.kind == "inv" else CircInv(node)
        if tok.kind == "frac":
            self.advance()
            self.expect("(")
            num = self.parse_expr()
            self.expect(",")
            den = self.parse_expr()
            self.expect(")")
            return Frac(num, den)
        raise ParseError(
            f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
            tok.pos,
            ("e", "identifier", "(", "inv", "cinv", "frac"),
        )


def parse(text: str) -> Expr:
    """Parse an expression; the result may be a wire or a fraction tree."""
    parser = _Parser(text)
    node = parser.parse_expr()
    end = parser.peek()
    if end.kind != "end":
        raise ParseError(f"unexpected {end.text!r}", end.pos, ("end of input",))
    return node


def _contains_fraction(node: Expr) -> bool:
    if isinstance(node, (Frac, CircInv)):
        return True
    if isinstance(node, (Star, Circ)):
        return _contains_fraction(node.left) or _contains_fraction(node.right)
    if isinstance(node, StarInv):
        return _contains_fraction(node.arg)
    return False


def as_wire(node: Expr) -> Expr:
    """Validate a pure wire expression (no frac/cinv nodes)."""
    if isinstance(node, (Identity, Gen)):
        return node
    if isinstance(node, (Star, Circ)):
        as_wire(node.left)
        as_wire(node.right)
        return node
    if isinstance(node, StarInv):
        as_wire(node.arg)
        return node
    if isinstance(node, CircInv):
        raise WireCircleInverseError(0)
    if isinstance(node, Frac):
        raise ParseError("fraction term used where a wire expression is required", 0)
    raise TypeError(f"not an expression node: {node!r}")


def as_fraction(node: Expr) -> Expr:
    """Validate a fraction expression: every leaf is frac(wire, wire)."""
    if isinstance(node, Frac):
        as_wire(node.num)
        as_wire(node.den)
        return node
    if isinstance(node, (Star, Circ)):
        as_fraction(node.left)
        as_fraction(node.right)
        return node
    if isinstance(node, (StarInv, CircInv)):
        as_fraction(node.arg)
        return node
    if isinstance(node, (Identity, Gen)):
        raise ParseError(
            "bare wire term in fraction context; wrap it as frac(term, e)", 0
        )
    raise TypeError(f"not an expression node: {node!r}")


def category(node: Expr) -> str:
    """Classify and validate: returns 'wire' or 'fraction'."""
    if _contains_fraction(node):
        as_fraction(node)
        return "fraction"
    as_wire(node)
    return "wire"


def render(node: Expr) -> str:
    """Canonical text, minimal parentheses; parse(render(x)) == x."""

    def go(n: Expr, context: int) -> str:
        if isinstance(n, Identity):
            return "e"
        if isinstance(n, Gen):
            return n.name
        if isinstance(n, StarInv):
            return f"inv({go(n.arg, 0)})"
        if isinstance(n, CircInv):
            return f"cinv({go(n.arg, 0)})"
        if isinstance(n, Frac):
            return f"frac({go(n.num, 0)}, {go(n.den, 0)})"
        if isinstance(n, Star):
            text = f"{go(n.left, 1)} * {go(n.right, 2)}"
            return f"({text})" if context > 1 else text
        if isinstance(n, Circ):
            text = f"{go(n.left, 2)} o {go(n.right, 3)}"
            return f"({text})" if context > 2 else text
        raise TypeError(f"not an expression node: {n!r}")

    return go(node, 0)


def eval_canonical(node: Expr) -> BracePoly:
    """Evaluate a wire expression in the canonical polynomial model."""
    if isinstance(node, Identity):
        return BracePoly.identity()
    if isinstance(node, Gen):
        return BracePoly.generator(node.name)
    if isinstance(node, Star):
        return eval_canonical(node.left).star(eval_canonical(node.right))
    if isinstance(node, StarInv):
        return eval_canonical(node.arg).star_inv()
    if isinstance(node, Circ):
        return eval_canonical(node.left).circ(eval_canonical(node.right))
    if isinstance(node, CircInv):
        raise WireCircleInverseError(0)
    raise TypeError(f"cannot evaluate {node!r} in the wire model")


def eval_word(node: Expr) -> Word:
    """Evaluate a wire expression in the word model (the oracle path)."""
    if isinstance(node, Identity):
        return Word.empty()
    if isinstance(node, Gen):
        return Word.of(CMono.generator(node.name))
    if isinstance(node, Star):
        return eval_word(node.left) * eval_word(node.right)
    if isinstance(node, StarInv):
        return eval_word(node.arg).inverse()
    if isinstance(node, Circ):
        return circ_l(eval_word(node.left), eval_word(node.right))
    raise TypeError(f"cannot evaluate {node!r} in the word model")


def eval_fraction(node: Expr, brace: FractionBrace) -> Fraction:
    """Evaluate a fraction expression over the canonical-wire instance."""
    if isinstance(node, Frac):
        return Fraction(eval_canonical(node.num), eval_canonical(node.den))
    if isinstance(node, Star):
        return brace.star(eval_fraction(node.left, brace), eval_fraction(node.right, brace))
    if isinstance(node, StarInv):
        return brace.star_inv(eval_fraction(node.arg, brace))
    if isinstance(node, Circ):
        return brace.circ(eval_fraction(node.left, brace), eval_fraction(node.right, brace))
    if isinstance(node, CircInv):
        return brace.circ_inv(eval_fraction(node.arg, brace))
    raise TypeError(f"cannot evaluate {node!r} in the fraction model")


def _mono_tokens(text: str, start: int, base: int) -> CMono:
    # split on the standalone separator token `o` only, not on the letter
    names = []
    for part in re.split(r"\bo\b", text):
        name = part.strip()
        if not name:
            raise ParseError("empty generator in monomial", base + start)
        names.append(name)
    degrees: dict[str, int] = {}
    for name in names:
        degrees[name] = degrees.get(name, 0) + 1
    return CMono(degrees)


def parse_mono(text: str) -> CMono:
    """Parse an ``o``-joined monomial like ``x o y``; brackets optional."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        raise ParseError("empty monomial", 0)
    try:
        return _mono_tokens(body, 0, 0)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from exc


def parse_word(text: str) -> Word:
    """Parse a word literal like ``[x o y].[z]^-1`` (``e`` = empty word)."""
    stripped = text.strip()
    if stripped == "e" or not stripped:
        return Word.empty()
    letters = []
    i, n = 0, len(text)
    first = True
    while True:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            if first:
                break
            raise ParseError("trailing dot in word literal", i)
        if text[i] != "[":
            raise ParseError(f"unexpected character {text[i]!r}", i, ("[",))
        close = text.find("]", i)
        if close < 0:
            raise ParseError("unterminated monomial bracket", i, ("]",))
        try:
            mono = _mono_tokens(text[i + 1 : close], 0, i + 1)
        except ValueError as exc:
            raise ParseError(str(exc), i + 1) from exc
        i = close + 1
        sign = 1
        while i < n and text[i].isspace():
            i += 1
        if text[i : i + 3] == "^-1":
            sign = -1
            i += 3
        letters.append((mono, sign))
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        if text[i] != ".":
            raise ParseError(f"unexpected character {text[i]!r}", i, (".",))
        i += 1
        first = False
    return Word(letters)
