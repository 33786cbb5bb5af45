"""Recursive-descent parser for formulas and rudimentary terms.

ASCII grammar (unicode connectives are accepted as synonyms)::

    formula := iff
    iff     := imp ("<->" imp)*
    imp     := or ("->" imp)?
    or      := and ("\\/" and)*
    and     := unary ("/\\" unary)*
    unary   := "~" unary | quant | "(" formula ")" | "(" prefix ")" unary | atom
    quant   := ("forall" | "exists") vars ["in" term] "." formula
    prefix  := ("forall" | "exists") vars ["in" term]
    atom    := term ("in" | "sub" | "=") term
    term    := NAME | "#" INT | "{" [term ("," term)*] "}" | "<" term ("," term)+ ">"
             | OP "(" term ("," term)* ")" | ("bigcup" | "image") NAME "in" term "." term

Quantifier bodies extend as far right as possible.  ``forall v, w in N . φ``
abbreviates two nested quantifiers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .hf import EMPTY, HfError, make_set, tuple_, von_neumann
from .logic import And, Atom, Formula, Iff, Implies, Not, Or, Quant
from .rudimentary import (
    DERIVED, Apply, BigCup, Const, Image, RudTerm, SetOf, Tup, Var,
)

__all__ = ["ParseError", "parse_formula", "parse_term", "parse_comprehension", "tokenize"]


class ParseError(HfError, ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


_UNICODE = {"∧": "/\\", "∨": "\\/", "¬": "~", "⇒": "->", "→": "->", "⇔": "<->",
            "↔": "<->", "∈": "in", "⊆": "sub", "∀": "forall", "∃": "exists"}

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<op><->|->|/\\|\\/|[~(){}<>,.=]|[∧∨¬⇒→⇔↔∈⊆∀∃])
  | (?P<nat>\#\d+)
  | (?P<name>[12](?:st|nd)|[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)

KEYWORDS = {"forall", "exists", "in", "sub", "bigcup", "image"}


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        value = m.group()
        if kind == "op" and value in _UNICODE:
            value = _UNICODE[value]
            kind = "name" if value in KEYWORDS else "op"
        if kind != "ws":
            if kind == "name" and value in KEYWORDS:
                kind = "kw"
            tokens.append(Token(kind, value, m.start()))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, message, tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {found}", self.text, tok.pos)

    def accept(self, text) -> bool:
        if self.tok.text == text and self.tok.kind in ("op", "kw"):
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            raise self.error(f"expected {text!r}")

    def name(self) -> str:
        if self.tok.kind != "name":
            raise self.error("expected a variable name")
        t = self.tok.text
        self.i += 1
        return t

    def finish(self):
        if self.tok.kind != "eof":
            raise self.error("unexpected trailing input")

    # formulas

    def formula(self) -> Formula:
        left = self.implication()
        while self.accept("<->"):
            left = Iff(left, self.implication())
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.accept("\\/"):
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.accept("/\\"):
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.tok
        if self.accept("~"):
            return Not(self.unary())
        if tok.kind == "kw" and tok.text in ("forall", "exists"):
            kind, names, bound = self.quant_head()
            self.expect(".")
            return _nest(kind, names, bound, self.formula())
        if tok.text == "(" and tok.kind == "op":
            nxt = self.peek()
            if nxt.kind == "kw" and nxt.text in ("forall", "exists"):
                self.i += 1
                kind, names, bound = self.quant_head()
                if self.accept(")"):
                    # prefix form: (exists v in w)(body)
                    return _nest(kind, names, bound, self.unary())
                self.expect(".")
                body = self.formula()
                self.expect(")")
                return _nest(kind, names, bound, body)
            self.i += 1
            inner = self.formula()
            self.expect(")")
            return inner
        return self.atom()

    def quant_head(self):
        kind = self.tok.text
        self.i += 1
        names = [self.name()]
        while self.accept(","):
            names.append(self.name())
        bound = self.term() if self.accept("in") else None
        return kind, names, bound

    def atom(self) -> Formula:
        start = self.tok
        left = self.term()
        tok = self.tok
        for op in ("in", "sub", "="):
            if self.accept(op):
                return Atom(op, left, self.term())
        raise self.error("expected 'in', 'sub' or '=' after term", tok if tok is not start else None)

    # terms

    def term(self) -> RudTerm:
        tok = self.tok
        if tok.kind == "nat":
            self.i += 1
            return Const(von_neumann(int(tok.text[1:])))
        if tok.kind == "op" and tok.text == "{":
            self.i += 1
            if self.accept("}"):
                return Const(EMPTY)
            items = [self.term()]
            while self.accept(","):
                items.append(self.term())
            self.expect("}")
            if all(isinstance(i, Const) for i in items):
                return Const(make_set(i.value for i in items))
            return SetOf(tuple(items))
        if tok.kind == "op" and tok.text == "<":
            self.i += 1
            items = [self.term()]
            while self.accept(","):
                items.append(self.term())
            if len(items) < 2:
                raise self.error("a tuple needs at least two components")
            self.expect(">")
            if all(isinstance(i, Const) for i in items):
                return Const(tuple_(*(i.value for i in items)))
            return Tup(tuple(items))
        if tok.kind == "kw" and tok.text in ("bigcup", "image"):
            self.i += 1
            if self.tok.text == "(" and self.tok.kind == "op":
                # bigcup(x) is the unary operation
                return self.call(tok.text)
            var = self.name()
            self.expect("in")
            over = self.term()
            self.expect(".")
            body = self.term()
            return (BigCup if tok.text == "bigcup" else Image)(var, over, body)
        if tok.kind == "name":
            self.i += 1
            if self.tok.kind == "op" and self.tok.text == "(":
                if tok.text not in DERIVED:
                    raise ParseError(f"unknown operation {tok.text!r}", self.text, tok.pos)
                return self.call(tok.text, tok)
            return Var(tok.text)
        raise self.error("expected a term")

    def call(self, op, tok=None) -> RudTerm:
        self.expect("(")
        args = [self.term()]
        while self.accept(","):
            args.append(self.term())
        self.expect(")")
        try:
            return Apply(op, tuple(args))
        except HfError as exc:
            raise ParseError(str(exc), self.text, (tok or self.tok).pos) from None


def _nest(kind, names, bound, body):
    for n in reversed(names):
        body = Quant(kind, n, bound, body)
    return body


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.finish()
    return f


def parse_term(text: str) -> RudTerm:
    p = _Parser(text)
    t = p.term()
    p.finish()
    return t


def parse_comprehension(text: str) -> tuple[str, RudTerm, Formula]:
    """``v in T . φ`` -> (v, T, φ)."""
    p = _Parser(text)
    var = p.name()
    p.expect("in")
    domain = p.term()
    p.expect(".")
    f = p.formula()
    p.finish()
    return var, domain, f
