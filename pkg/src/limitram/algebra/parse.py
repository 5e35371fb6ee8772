"""Recursive-descent parser for polynomial input.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')'

``**`` is accepted as a synonym for ``^``.
"""

import re
from fractions import Fraction

from ..errors import NonHomogeneousError, ParseError
from .forms import BinaryForm, TernaryForm

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()−]))")


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[stripped]!r}", stripped, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            op = {"−": "-", "**": "^"}.get(op, op)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Polynomials are dicts from exponent tuples to Fractions."""

    def __init__(self, text, names):
        self.text = text
        self.names = list(names)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.error(f"expected {op!r}", tok)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        poly = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return poly

    def expr(self):
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = self.take()[1]
            rhs = self.term()
            acc = _add(acc, rhs if sign == "+" else _scale(rhs, -1))
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = _mul(acc, self.unary())
        return acc

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return inner if tok[1] == "+" else _scale(inner, -1)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal", tok)
            out = {(0,) * len(self.names): Fraction(1)}
            for _ in range(tok[1]):
                out = _mul(out, base)
            return out
        return base

    def atom(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "int":
            num = Fraction(value)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "int":
                    self.error("expected integer denominator", den)
                if den[1] == 0:
                    self.error("zero denominator", den)
                num = Fraction(value, den[1])
            return {(0,) * len(self.names): num}
        if kind == "name":
            if value not in self.names:
                self.error(f"unknown variable {value!r}", tok)
            exps = [0] * len(self.names)
            exps[self.names.index(value)] = 1
            return {tuple(exps): Fraction(1)}
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        self.error("expected a number, variable or '('", tok)


def _add(p, q):
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + c
        if out[k] == 0:
            del out[k]
    return out


def _scale(p, c):
    return {k: v * c for k, v in p.items()}


def _mul(p, q):
    out = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def parse_polynomial(text, names):
    """Parse ``text`` into ``{exponent tuple: Fraction}`` over ``names``."""
    return _Parser(text, names).parse()


def parse_form(text, variables, jet_variable=None, degree=None):
    """Parse a homogeneous polynomial into a ``BinaryForm`` or ``TernaryForm``.

    ``variables`` has two names (binary form) or three (ternary form).  A
    ``jet_variable`` (typically ``"t"``) may appear in ternary input as a
    coefficient variable and is ignored for homogeneity.  ``degree`` tags the
    zero polynomial and is enforced otherwise.
    """
    variables = list(variables)
    if len(variables) not in (2, 3):
        raise ValueError("forms are binary or ternary")
    names = variables + ([jet_variable] if jet_variable else [])
    poly = {k: c for k, c in parse_polynomial(text, names).items() if c}
    nvar = len(variables)
    degrees = {sum(k[:nvar]) for k in poly}
    if len(degrees) > 1:
        raise NonHomogeneousError(f"{text!r} is not homogeneous (degrees {sorted(degrees)})",
                                  None, text)
    if degrees:
        (found,) = degrees
        if degree is not None and found != degree:
            raise NonHomogeneousError(f"{text!r} has degree {found}, expected {degree}",
                                      None, text)
        degree = found
    elif degree is None:
        degree = 0
    if nvar == 2:
        coeffs = [Fraction(0)] * (degree + 1)
        for (a, _), c in poly.items():
            coeffs[a] += c
        return BinaryForm(coeffs, degree)
    terms = {}
    for k, c in poly.items():
        tpow = k[3] if jet_variable else 0
        terms[(tpow,) + tuple(k[:3])] = c
    return TernaryForm(terms, degree)
