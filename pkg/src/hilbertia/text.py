"""Canonical text form of polynomials and a recursive-descent parser.

Grammar (whitespace is insignificant)::

    expr     := ['+' | '-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | var ['^' nat] | '(' expr ')' ['^' nat]
    rational := int ['/' posint]

Multiplication is always explicit.  A single declared variable parses to a
UniPoly, two to a BiPoly (first name is X, second is Y), more to a MultiPoly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import PolySyntaxError
from .poly import BiPoly, MultiPoly, UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _format_terms(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    parts = []
    for idx, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if idx == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _mono(names: Sequence[str], exps: Sequence[int]) -> str:
    bits = []
    for name, e in zip(names, exps):
        if e == 1:
            bits.append(name)
        elif e > 1:
            bits.append(f"{name}^{e}")
    return "*".join(bits)


def format_poly(p, variables: Sequence[str] | None = None) -> str:
    """Canonical text: descending in the main variable, unit coefficients elided."""
    if isinstance(p, UniPoly):
        names = variables or ("X",)
        terms = [(c, _mono(names, (i,))) for i, c in reversed(list(enumerate(p.coeffs))) if c]
    elif isinstance(p, BiPoly):
        names = variables or ("X", "Y")
        items = sorted(p.terms().items(), key=lambda t: (t[0][1], t[0][0]), reverse=True)
        terms = [(c, _mono(names, ij)) for ij, c in items]
    elif isinstance(p, MultiPoly):
        names = variables or tuple(f"X{i}" for i in range(1, p.nvars + 1))
        terms = [(c, _mono(names, e)) for e, c in p.terms.items()]
    elif isinstance(p, (int, Fraction)):
        return str(Fraction(p))
    else:
        raise TypeError(f"cannot format {type(p).__name__}")
    return _format_terms(terms)


def format_factor(p, variables: Sequence[str] | None = None) -> str:
    """Wrap in parentheses unless p is a single variable power."""
    s = format_poly(p, variables)
    return s if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*(\^\d+)?", s) else f"({s})"


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.names = list(variables)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.k = len(self.names)
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text) and not text[pos:].isspace():
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            start = m.start(m.lastindex) if m.lastindex else m.end()
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), start))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), start))
            elif m.group(3) is not None:
                ch = m.group(3)
                if ch not in "+-*/^()":
                    raise PolySyntaxError(f"unexpected character {ch!r}", start)
                self.tokens.append(("op", ch, start))
            pos = m.end()
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def offset(self) -> int:
        tok = self.peek()
        return tok[2] if tok else len(self.text.rstrip())

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise PolySyntaxError(f"expected {want!r}", self.offset())
        self.pos += 1
        return tok

    def at_op(self, chars: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] in chars

    def parse(self) -> MultiPoly:
        if not self.tokens:
            raise PolySyntaxError("empty expression", 0)
        out = self.expr()
        if self.peek() is not None:
            raise PolySyntaxError(f"unexpected {self.peek()[1]!r}", self.offset())
        return out

    def expr(self) -> MultiPoly:
        negate = False
        if self.at_op("+-"):
            negate = self.take("op")[1] == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while self.at_op("+-"):
            op = self.take("op")[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while self.at_op("*"):
            self.take("op", "*")
            acc = acc * self.factor()
        return acc

    def factor(self) -> MultiPoly:
        tok = self.peek()
        if tok is None:
            raise PolySyntaxError("unexpected end of input", self.offset())
        kind, value, start = tok
        if kind == "int":
            self.pos += 1
            num = Fraction(int(value))
            if self.at_op("/"):
                self.take("op", "/")
                den_tok = self.take("int")
                den = int(den_tok[1])
                if den == 0:
                    raise PolySyntaxError("zero denominator", den_tok[2])
                num = num / den
            return MultiPoly.constant(num, self.k)
        if kind == "name":
            self.pos += 1
            if value not in self.index:
                raise PolySyntaxError(f"undeclared variable {value!r}", start)
            power = self.exponent()
            exps = [0] * self.k
            exps[self.index[value]] = power
            return MultiPoly(self.k, {tuple(exps): 1})
        if kind == "op" and value == "(":
            self.pos += 1
            inner = self.expr()
            self.take("op", ")")
            return inner ** self.exponent()
        raise PolySyntaxError(f"unexpected {value!r}", start)

    def exponent(self) -> int:
        if not self.at_op("^"):
            return 1
        self.take("op", "^")
        tok = self.peek()
        if tok is None or tok[0] != "int":
            raise PolySyntaxError("expected natural number", self.offset())
        self.pos += 1
        return int(tok[1])


def parse_multi(text: str, variables: Sequence[str]) -> MultiPoly:
    return _Parser(text, variables).parse()


def parse_poly(text: str, variables: Sequence[str]):
    """Parse text over the declared variables into the matching type."""
    f = parse_multi(text, variables)
    if len(variables) == 1:
        return f.to_unipoly()
    if len(variables) == 2:
        return BiPoly.from_multi(f)
    return f


def infer_variables(text: str) -> tuple[str, ...]:
    """Guess a variable declaration from the names used in text."""
    names = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text))
    if names <= {"X", "Y"}:
        return ("X", "Y") if "Y" in names else ("X",)
    indexed = [n for n in names if re.fullmatch(r"X\d+", n)]
    if len(indexed) == len(names):
        top = max(int(n[1:]) for n in indexed)
        return tuple(f"X{i}" for i in range(1, top + 1))
    return tuple(sorted(names))


def read_poly_file(path: str | Path, variables: Sequence[str]) -> list:
    """One polynomial per line; '#' starts a comment, blank lines skipped."""
    out = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_poly(line, variables))
    return out
