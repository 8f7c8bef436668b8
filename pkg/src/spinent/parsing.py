"""Recursive-descent parser for Dirac-notation state expressions.

Accepted input, whitespace-insensitive::

    state  = [sign] term { ("+" | "-") term }
    term   = [ coeff [ "*" ] ] ket
    ket    = "|" digit { digit } ">"
    coeff  = factor { ("*" | "/") factor }
    factor = [sign] ( number | "sqrt(" coeff ")" | "i" | "(" coeff { ("+"|"-") coeff } ")" )

``number`` covers integers and decimal/exponent literals so that the
output of :func:`spinent.state.render` reads back. Examples::

    1/2|00> + sqrt(3)/2|11>
    1/sqrt(2)|01> - 1/sqrt(2)|10>
    (1 + i)/2 |0> + 1/sqrt(2)*|1>
"""

from __future__ import annotations

import math
import re
from typing import NamedTuple

import numpy as np

from .errors import StateParseError
from .state import ZERO_THRESHOLD, PureState

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ket>\|[0-9]*>?)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<sqrt>sqrt)
  | (?P<imag>i)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(expr: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(expr):
        m = _TOKEN_RE.match(expr, pos)
        if m is None:
            raise StateParseError(f"unexpected character {expr[pos]!r}", pos)
        kind = m.lastgroup
        text = m.group()
        if kind == "ket":
            if len(text) < 3 or not text.endswith(">"):
                raise StateParseError("malformed ket, expected |digits>", pos)
        if kind != "ws":
            tokens.append(Token(kind, text, pos))
        pos = m.end()
    tokens.append(Token("end", "", len(expr)))
    return tokens


class _Parser:
    def __init__(self, expr: str):
        self.tokens = tokenize(expr)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, offset=1) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def expect_op(self, op):
        if not self.at_op(op):
            raise StateParseError(f"expected {op!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        self.advance()

    def parse_state(self) -> list[tuple[complex, str, int]]:
        terms = []
        sign = 1
        if self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        terms.append(self.parse_term(sign))
        while self.at_op("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
            terms.append(self.parse_term(sign))
        if self.tok.kind != "end":
            raise StateParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return terms

    def parse_term(self, sign: int) -> tuple[complex, str, int]:
        coef: complex = 1.0
        if self.tok.kind != "ket":
            if self.tok.kind == "end":
                raise StateParseError("expected a term", self.tok.pos)
            coef = self.parse_coeff()
            if self.at_op("*"):
                self.advance()
        if self.tok.kind != "ket":
            raise StateParseError("expected a ket |...>", self.tok.pos)
        ket = self.advance()
        return sign * coef, ket.text[1:-1], ket.pos

    def parse_coeff(self) -> complex:
        value = self.parse_factor()
        while self.at_op("*", "/"):
            # a trailing '*' directly before the ket belongs to the term
            if self.tok.text == "*" and self.peek().kind == "ket":
                break
            op = self.advance()
            rhs = self.parse_factor()
            if op.text == "*":
                value = value * rhs
            else:
                if abs(rhs) == 0:
                    raise StateParseError("division by zero", op.pos)
                value = value / rhs
        return value

    def parse_factor(self) -> complex:
        tok = self.tok
        if self.at_op("+", "-"):
            self.advance()
            v = self.parse_factor()
            return -v if tok.text == "-" else v
        if tok.kind == "number":
            self.advance()
            return float(tok.text)
        if tok.kind == "imag":
            self.advance()
            return 1j
        if tok.kind == "sqrt":
            self.advance()
            self.expect_op("(")
            arg = self.parse_coeff()
            self.expect_op(")")
            if abs(complex(arg).imag) > 0 or complex(arg).real < 0:
                raise StateParseError("sqrt argument must be a non-negative real", tok.pos)
            return math.sqrt(complex(arg).real)
        if self.at_op("("):
            self.advance()
            v = self.parse_coeff()
            while self.at_op("+", "-"):
                op = self.advance()
                rhs = self.parse_coeff()
                v = v + rhs if op.text == "+" else v - rhs
            self.expect_op(")")
            return v
        found = tok.text or "end of input"
        raise StateParseError(f"expected a coefficient, found {found!r}", tok.pos)


def parse_terms(expr: str) -> list[tuple[complex, str, int]]:
    """Parse ``expr`` into ``(coefficient, ket_digits, position)`` triples."""
    return _Parser(expr).parse_state()


def parse_state(expr: str, dim: int | None = None) -> PureState:
    """Parse a Dirac-notation expression into a normalized :class:`PureState`.

    Parameters
    ----------
    expr : str
        Sum of kets with optional coefficients, e.g. ``"1/2|00> + sqrt(3)/2|11>"``.
    dim : int, optional
        Local dimension of every site. When omitted it is inferred as
        ``max digit + 1`` (at least 2).

    Raises
    ------
    StateParseError
        Syntax errors (with position), kets of different lengths, a digit
        ``>= dim``, or terms that cancel to the zero vector.
    """
    terms = parse_terms(expr)
    n = len(terms[0][1])
    for _, digits, pos in terms:
        if len(digits) != n:
            raise StateParseError(
                f"ket |{digits}> has {len(digits)} sites, expected {n}", pos
            )
    max_digit = max(int(c) for _, digits, _ in terms for c in digits)
    if dim is None:
        dim = max(2, max_digit + 1)
    elif dim < 2:
        raise StateParseError(f"dim must be >= 2, got {dim}")
    for _, digits, pos in terms:
        if any(int(c) >= dim for c in digits):
            raise StateParseError(f"ket |{digits}> has a digit >= dim {dim}", pos)

    dims = (dim,) * n
    amps = np.zeros(dim**n, dtype=complex)
    for coef, digits, _ in terms:
        amps[np.ravel_multi_index(tuple(int(c) for c in digits), dims)] += coef
    if np.linalg.norm(amps) <= ZERO_THRESHOLD:
        raise StateParseError("terms cancel to the zero vector")
    return PureState(amps, dims)
