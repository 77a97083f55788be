"""Term language for algebra elements.

Grammar (``^`` binds tightest, then unary minus, then ``*``, then ``+``/``-``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | "i" | NAME | "(" expr ")"

``i`` is the imaginary unit and cannot be used as a generator name. Products that
collapse because an odd generator is repeated raise :class:`SquareZeroWarning`
and evaluate to 0.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import coeffs
from .algebra import AlgebraElement, Context
from .errors import ContextError, ParseError


class SquareZeroWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, ctx: Context, cutoff):
        self.text = text
        self.ctx = ctx
        self.cutoff = cutoff
        self.toks = tokenize(text)
        self.k = 0
        self.collapsed = False

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def eat(self, kind, text=None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", t.pos)
        self.k += 1
        return t

    def at(self, text) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def parse(self) -> AlgebraElement:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self):
        e = self.term()
        while self.at("+") or self.at("-"):
            op = self.eat("op").text
            r = self.term()
            e = e + r if op == "+" else e - r
        return e

    def term(self):
        e = self.unary()
        while self.at("*"):
            self.eat("op")
            r = self.unary()
            p = e * r
            if e and r and not p and not _cutoff_only(e.with_cutoff(None) * r.with_cutoff(None), self.cutoff):
                self._warn()
            e = p
        return e

    def unary(self):
        if self.at("-"):
            self.eat("op")
            return -self.unary()
        if self.at("+"):
            self.eat("op")
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.eat("op")
            t = self.tok
            if t.kind != "int":
                raise ParseError("exponent must be a non-negative integer", t.pos)
            self.eat("int")
            n = int(t.text)
            out = base ** n
            if base and n > 1 and not out and not _cutoff_only(base.with_cutoff(None) ** n, self.cutoff):
                self._warn()
            return out
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.eat("int")
            num = int(t.text)
            if self.at("/"):
                self.eat("op")
                d = self.eat("int")
                if int(d.text) == 0:
                    raise ParseError("zero denominator", d.pos)
                return self.ctx.scalar(Fraction(num, int(d.text)), self.cutoff)
            return self.ctx.scalar(num, self.cutoff)
        if t.kind == "name":
            self.eat("name")
            if t.text == "i":
                return self.ctx.scalar(coeffs.I, self.cutoff)
            if t.text not in self.ctx:
                raise ContextError(f"unknown generator {t.text!r} at position {t.pos}")
            return self.ctx.gen(t.text, self.cutoff)
        if self.at("("):
            self.eat("op")
            e = self.expr()
            self.eat("op", ")")
            return e
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def _warn(self):
        self.collapsed = True
        warnings.warn("product vanished: repeated odd generator or exponent cap", SquareZeroWarning, stacklevel=4)


def _cutoff_only(uncut: AlgebraElement, cutoff) -> bool:
    """True when the untruncated product is nonzero and lies entirely above the cutoff."""
    if cutoff is None or not uncut:
        return False
    return not uncut.filter(lambda m: uncut.ctx.mono_weight(m) <= cutoff)


def parse(text: str, ctx: Context, cutoff: int | None = None) -> AlgebraElement:
    """Parse ``text`` into a canonical element of ``ctx``."""
    return _Parser(text, ctx, cutoff).parse()


def parse_flagged(text: str, ctx: Context, cutoff: int | None = None) -> tuple[AlgebraElement, bool]:
    """Like :func:`parse` but returns ``(element, collapsed)`` instead of warning."""
    p = _Parser(text, ctx, cutoff)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SquareZeroWarning)
        e = p.parse()
    return e, p.collapsed
