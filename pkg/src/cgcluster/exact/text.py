"""Polynomial text grammar.

Terms are joined by ``+``/``-``; a term is a rational coefficient ``p/q``
optionally followed by ``*`` and factors ``x[i][j]^e``.  A bare factor list
means coefficient 1.  Besides matrix entries, factors may be formal atoms
``z[a]``/``z[a][b]`` or plain identifiers (``s1``, ``t``, ...).
"""
from __future__ import annotations

import re
from fractions import Fraction

from .poly import ONE, ZERO, Polynomial
from .variables import VarId, atom, chart, entry, param

CHART_NAMES = {"s1", "s2", "s3"}

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)"
    r"|(?P<x>x\[\s*(\d+)\s*\]\[\s*(\d+)\s*\])"
    r"|(?P<z>z\[\s*(-?\d+)\s*\](?:\[\s*(-?\d+)\s*\])?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^()])"
    r")"
)


class ParseError(ValueError):
    pass


def _tokens(text: str):
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 12]!r}")
        pos = m.end()
        if m.group("num"):
            yield ("num", Fraction(m.group("num")))
        elif m.group("x"):
            yield ("var", entry(int(m.group(3)), int(m.group(4))))
        elif m.group("z"):
            b = m.group(7)
            yield ("var", atom(int(m.group(6)), None if b is None else int(b)))
        elif m.group("name"):
            name = m.group("name")
            yield ("var", chart(name) if name in CHART_NAMES else param(name))
        else:
            yield ("op", m.group("op"))


def parse_poly(text: str) -> Polynomial:
    toks = list(_tokens(text))
    if not toks:
        raise ParseError("empty polynomial")
    pos = 0
    total = ZERO
    sign = 1

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    first = True
    while pos < len(toks):
        kind, val = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before token {val!r}")
        first = False
        coeff = Fraction(1)
        exps: dict[VarId, int] = {}
        expect_factor = True
        got_any = False
        while pos < len(toks) and expect_factor:
            kind, val = peek()
            if kind == "num":
                coeff *= val
                pos += 1
            elif kind == "var":
                pos += 1
                e = 1
                if peek() == ("op", "^"):
                    pos += 1
                    neg = False
                    paren = False
                    if peek() == ("op", "("):
                        paren = True
                        pos += 1
                    if peek() == ("op", "-"):
                        neg = True
                        pos += 1
                    k, ev = peek()
                    if k != "num" or ev.denominator != 1:
                        raise ParseError("exponent must be an integer")
                    pos += 1
                    if paren:
                        if peek() != ("op", ")"):
                            raise ParseError("unbalanced parenthesis in exponent")
                        pos += 1
                    e = -int(ev) if neg else int(ev)
                exps[val] = exps.get(val, 0) + e
            else:
                raise ParseError(f"unexpected token {val!r}")
            got_any = True
            if peek() == ("op", "*"):
                pos += 1
            else:
                expect_factor = False
        if not got_any:
            raise ParseError("dangling sign")
        total = total + Polynomial.monomial(exps, sign * coeff)
    return total


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.items():
        factors = []
        for v in sorted(exps, key=VarId.sort_key):
            e = exps[v]
            factors.append(str(v) if e == 1 else f"{v}^{e}")
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if factors:
            body = "*".join(factors) if a == 1 else f"{_fmt_coeff(a)} * " + "*".join(factors)
        else:
            body = _fmt_coeff(a)
        parts.append(("-" if neg else "+", body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out


__all__ = ["parse_poly", "format_poly", "ParseError", "ONE", "ZERO"]
