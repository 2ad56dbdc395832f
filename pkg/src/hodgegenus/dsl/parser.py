"""Recursive-descent parser producing a small AST.

Grammar sketch (one statement per line, newlines inside brackets ignored)::

    stmt   := 'let' NAME '=' expr | query | 'assert' (query | expr) ('=='|'!=') expr
    query  := KIND words* expr* (key '=' expr)*
    expr   := sum ('on' primary)?
    sum    := prod (('+'|'-') prod)*
    prod   := unary (('*'|'/') unary)*
    unary  := '-' unary | power
    power  := primary ('^' unary)?

Primaries cover numbers, names, calls, ``P n``/``A n`` shapes, ``var``,
``ring``, ``bundle``, ``mhs``, ``epoly``, ``strata``, ``stalks``,
``fibration``, ``hodgecoll`` blocks and ``[rank r; c1=...]`` bundle specs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .lexer import Diagnostic, DslError, Token, tokenize

__all__ = ["parse", "Script", "QUERY_KINDS"]

QUERY_KINDS = ("genus", "epoly", "strat", "rh", "ghrr", "meyer", "am", "class", "verify")
QUERY_WORDS = {
    "genus": ("chi_y", "chi_y_c", "euler", "arithmetic", "signature", "weight", "dual"),
    "epoly": (),
    "strat": ("chi_c", "chi", "hat", "report", "stalk", "additive"),
    "rh": ("total", "special", "epoly", "euler"),
    "ghrr": (),
    "meyer": ("normalized", "plain"),
    "am": ("pq", "graded"),
    "class": ("hirzebruch", "normalized", "todd", "ch", "lambda", "meyer", "atiyah", "segre", "push"),
    "verify": ("paper-examples", "properties", "cross-checks"),
}
STOP_WORDS = {"on", "let", "assert", "under", "generic", "trivial-monodromy", "varying",
              "dim", "smooth", "complete", "sing", "projective"}


# -- AST ---------------------------------------------------------------------

@dataclass
class Node:
    line: int
    col: int


@dataclass
class Num(Node):
    value: int


@dataclass
class Str(Node):
    value: str


@dataclass
class Name(Node):
    id: str


@dataclass
class Bin(Node):
    op: str
    left: Node
    right: Node


@dataclass
class Neg(Node):
    operand: Node


@dataclass
class Call(Node):
    fn: str
    args: list


@dataclass
class Shape(Node):
    kind: str  # "P" or "A"
    n: Node


@dataclass
class As(Node):
    target: str  # "var", "ring" or "bundle"
    expr: Node


@dataclass
class Atom(Node):
    name: str
    epoly: Node
    dim: Node
    smooth: bool
    complete: bool


@dataclass
class Table(Node):
    kind: str  # "mhs", "epoly" or "hodgecoll"
    entries: list  # [(tuple[Node, ...], Node)]


@dataclass
class RingProduct(Node):
    factors: list


@dataclass
class RingProjBundle(Node):
    base: Node
    bundle: Node
    tangent: Node | None = None


@dataclass
class BundleSpec(Node):
    rank: Node
    chern: dict  # i -> Node


@dataclass
class OnRing(Node):
    expr: Node
    ring: Node


@dataclass
class Record:
    id: str
    line: int
    col: int
    attrs: dict = field(default_factory=dict)
    flags: set = field(default_factory=set)
    under: list = field(default_factory=list)


@dataclass
class Block(Node):
    kind: str  # "strata", "stalks"
    records: list
    flags: set


@dataclass
class Critical(Node):
    kind: str  # "isolated", "vanishing", "strata"
    items: Any
    sing: Node | None = None


@dataclass
class Fibration(Node):
    attrs: dict
    critical: list
    flags: set


@dataclass
class ListLit(Node):
    items: list


@dataclass
class Let(Node):
    name: str
    expr: Node


@dataclass
class Query(Node):
    kind: str
    words: list
    args: list
    opts: dict
    text: str


@dataclass
class Assert(Node):
    left: Node
    op: str
    right: Node
    text: str


@dataclass
class Script:
    statements: list
    source: str

    @property
    def bindings(self) -> list[Let]:
        return [s for s in self.statements if isinstance(s, Let)]

    @property
    def queries(self) -> list:
        return [s for s in self.statements if not isinstance(s, Let)]


# -- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[Token], source: str):
        self.toks = tokens
        self.i = 0
        self.lines = source.splitlines()

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("OP", "IDENT") and self.tok.text == text

    def next(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def error(self, msg: str, t: Token | None = None, code: str = "E-SYNTAX"):
        t = t or self.tok
        return DslError([Diagnostic("error", t.line, t.col, code, msg)])

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self.tok}")
        return self.next()

    def ident(self) -> Token:
        if self.tok.kind != "IDENT":
            raise self.error(f"expected a name, found {self.tok}")
        return self.next()

    def number(self) -> Node:
        t = self.tok
        neg = False
        if self.at("-"):
            self.next()
            neg = True
        if self.tok.kind != "NUM":
            raise self.error(f"expected an integer, found {self.tok}")
        v = int(self.next().text)
        return Num(t.line, t.col, -v if neg else v)

    def skip_sep(self):
        while self.at(";") or self.at(","):
            self.next()

    # statements
    def script(self) -> list:
        out = []
        while self.tok.kind != "EOF":
            if self.tok.kind == "NEWLINE":
                self.next()
                continue
            out.append(self.statement())
            if self.tok.kind not in ("NEWLINE", "EOF"):
                raise self.error(f"unexpected {self.tok} after statement")
        return out

    def statement(self):
        t = self.tok
        if self.at("let"):
            self.next()
            name = self.ident()
            self.expect("=")
            return Let(name.line, name.col, name.text, self.expr())
        if self.at("assert"):
            self.next()
            t0, t1 = self.tok, self.peek()
            call = t1.text == "{" or t1.text == "(" and t1.line == t0.line and t1.col == t0.col + len(t0.text)
            is_query = t0.kind == "IDENT" and t0.text in QUERY_KINDS and not call
            left = self.query() if is_query else self.expr()
            if not (self.at("==") or self.at("!=")):
                raise self.error(f"expected '==' or '!=', found {self.tok}")
            op = self.next().text
            right = self.expr()
            return Assert(t.line, t.col, left, op, right, self.lines[t.line - 1].strip())
        if t.kind == "IDENT" and t.text in QUERY_KINDS:
            return self.query()
        raise self.error(f"expected 'let', 'assert' or a query ({', '.join(QUERY_KINDS)}), found {t}")

    def query(self) -> Query:
        t = self.next()
        words, args, opts = [], [], {}
        allowed = QUERY_WORDS[t.text]
        if t.text == "verify":
            words.append(self.hyphenated())
            if words[0] not in allowed:
                raise self.error(f"verify needs a suite name: {', '.join(allowed)}")
            return Query(t.line, t.col, t.text, words, [], {}, self.lines[t.line - 1].strip())
        while self.word_follows(allowed):
            words.append(self.next().text)
        while self.starts_primary() and not self.at("=="):
            if self.tok.kind == "IDENT" and self.peek().text == "=" and self.peek().kind == "OP":
                key = self.next().text
                self.next()
                opts[key] = self.expr()
            else:
                args.append(self.expr())
        text = self.lines[t.line - 1].strip()
        return Query(t.line, t.col, t.text, words, args, opts, text)

    def word_follows(self, allowed) -> bool:
        t, nxt = self.tok, self.peek()
        if t.kind != "IDENT" or t.text not in allowed or nxt.text == "=":
            return False
        # chi_y(X) is a call, not a query word
        return not (nxt.text == "(" and nxt.line == t.line and nxt.col == t.col + len(t.text))

    def hyphenated(self) -> str:
        t = self.ident()
        word, end = t.text, t.col + len(t.text)
        while self.at("-") and self.tok.col == end and self.peek().kind == "IDENT" and self.peek().col == end + 1:
            self.next()
            part = self.next()
            word += "-" + part.text
            end = part.col + len(part.text)
        return word

    def starts_primary(self) -> bool:
        t = self.tok
        if t.kind in ("NUM", "STRING"):
            return True
        if t.kind == "IDENT":
            return t.text not in STOP_WORDS
        return t.kind == "OP" and t.text in ("(", "[", "-")

    # expressions
    def expr(self) -> Node:
        e = self.sum()
        if self.at("on"):
            t = self.next()
            e = OnRing(t.line, t.col, e, self.primary())
        return e

    def sum(self) -> Node:
        e = self.prod()
        while self.at("+") or self.at("-"):
            t = self.next()
            e = Bin(t.line, t.col, t.text, e, self.prod())
        return e

    def prod(self) -> Node:
        e = self.unary()
        while self.at("*") or self.at("/"):
            t = self.next()
            e = Bin(t.line, t.col, t.text, e, self.unary())
        return e

    def unary(self) -> Node:
        if self.at("-"):
            t = self.next()
            return Neg(t.line, t.col, self.unary())
        return self.power()

    def power(self) -> Node:
        e = self.primary()
        if self.at("^"):
            t = self.next()
            e = Bin(t.line, t.col, "^", e, self.unary())
        return e

    def primary(self) -> Node:
        t = self.tok
        if t.kind == "NUM":
            self.next()
            return Num(t.line, t.col, int(t.text))
        if t.kind == "STRING":
            self.next()
            return Str(t.line, t.col, t.text)
        if self.at("("):
            self.next()
            e = self.expr()
            self.expect(")")
            return e
        if self.at("["):
            return self.bundle_spec_or_list()
        if t.kind != "IDENT":
            raise self.error(f"expected an expression, found {t}")
        word = t.text
        if word in ("P", "A") and self.peek().kind == "NUM":
            self.next()
            return Shape(t.line, t.col, word, self.number())
        if word == "var":
            self.next()
            if self.at("atom"):
                return self.atom()
            return As(t.line, t.col, "var", self.primary())
        if word == "ring":
            self.next()
            return self.ring_form(t)
        if word == "bundle":
            self.next()
            return As(t.line, t.col, "bundle", self.expr())
        if word in ("mhs", "hodgecoll") and self.peek().text == "{":
            self.next()
            return self.table(t, word, arity=3 if word == "mhs" else 2)
        if word == "epoly" and self.peek().text == "{":
            self.next()
            return self.table(t, "epoly", arity=2)
        if word in ("strata", "stalks") and self.peek().text in ("{", "projective"):
            self.next()
            return self.block(t, word)
        if word == "fibration" and self.peek().text == "{":
            self.next()
            return self.fibration(t)
        self.next()
        if self.at("(") and self.tok.line == t.line and self.tok.col == t.col + len(word):
            self.next()
            args = []
            while not self.at(")"):
                args.append(self.expr())
                if not self.at(")"):
                    self.expect(",")
            self.next()
            return Call(t.line, t.col, word, args)
        return Name(t.line, t.col, word)

    def atom(self) -> Atom:
        t = self.expect("atom")
        if self.tok.kind != "STRING":
            raise self.error("atom needs a quoted name")
        name = self.next().text
        kw = self.expect("epoly")
        ep = self.table(kw, "epoly", 2) if self.at("{") else self.primary()
        self.expect("dim")
        dim = self.number()
        smooth = complete = False
        while self.at("smooth") or self.at("complete"):
            if self.next().text == "smooth":
                smooth = True
            else:
                complete = True
        return Atom(t.line, t.col, name, ep, dim, smooth, complete)

    def ring_form(self, t: Token) -> Node:
        if self.at("product"):
            self.next()
            factors = []
            while self.starts_primary() and not self.at("-"):
                factors.append(self.primary())
            if len(factors) < 1:
                raise self.error("ring product needs at least one factor")
            return RingProduct(t.line, t.col, factors)
        if self.at("projbundle"):
            self.next()
            attrs = {}
            while self.tok.kind == "IDENT" and self.peek().text == "=":
                key = self.next()
                if key.text not in ("base", "bundle", "tangent"):
                    raise self.error(f"unknown projbundle attribute {key.text!r}", key)
                self.next()
                attrs[key.text] = self.primary()
            for need in ("base", "bundle"):
                if need not in attrs:
                    raise self.error(f"projbundle needs {need}=...")
            return RingProjBundle(t.line, t.col, attrs["base"], attrs["bundle"], attrs.get("tangent"))
        return As(t.line, t.col, "ring", self.primary())

    def bundle_spec_or_list(self) -> Node:
        t = self.expect("[")
        if self.at("rank"):
            self.next()
            rank = self.expr()
            chern = {}
            while self.at(";") or self.at(","):
                self.next()
                if self.at("]"):
                    break
                key = self.ident()
                if not (key.text.startswith("c") and key.text[1:].isdigit()):
                    raise self.error(f"expected c<i>=..., found {key.text!r}", key)
                self.expect("=")
                chern[int(key.text[1:])] = self.expr()
            self.expect("]")
            return BundleSpec(t.line, t.col, rank, chern)
        items = []
        while not self.at("]"):
            items.append(self.expr())
            if not self.at("]"):
                self.expect(",")
        self.next()
        return ListLit(t.line, t.col, items)

    def table(self, t: Token, kind: str, arity: int) -> Table:
        self.expect("{")
        entries = []
        while not self.at("}"):
            k = self.expect("(")
            key = [self.number()]
            while self.at(","):
                self.next()
                key.append(self.number())
            self.expect(")")
            if kind == "mhs" and len(key) not in (2, 3) or kind != "mhs" and len(key) != arity:
                raise self.error(f"{kind} keys have {arity} entries, got {len(key)}", k)
            self.expect(":")
            entries.append((tuple(key), self.expr()))
            self.skip_sep()
        self.expect("}")
        return Table(t.line, t.col, kind, entries)

    def block(self, t: Token, kind: str) -> Block:
        flags = set()
        while self.at("projective"):
            flags.add(self.next().text)
        self.expect("{")
        records = self.records()
        self.expect("}")
        return Block(t.line, t.col, kind, records, flags)

    def records(self) -> list[Record]:
        out = []
        while not self.at("}"):
            name = self.ident()
            self.expect(":")
            rec = Record(name.text, name.line, name.col)
            while not (self.at(";") or self.at("}")):
                if self.at("under"):
                    self.next()
                    rec.under.append(self.ident().text)
                    while self.at(","):
                        self.next()
                        rec.under.append(self.ident().text)
                elif self.tok.kind == "IDENT" and self.tok.text in ("generic", "trivial-monodromy", "varying"):
                    rec.flags.add(self.next().text)
                elif self.tok.kind == "IDENT" and self.peek().text == "=":
                    key = self.next().text
                    self.next()
                    rec.attrs[key] = self.expr()
                else:
                    raise self.error(f"unexpected {self.tok} in record {name.text!r}")
            out.append(rec)
            self.skip_sep()
        return out

    def fibration(self, t: Token) -> Fibration:
        self.expect("{")
        attrs, critical, flags = {}, [], set()
        while not self.at("}"):
            if self.at("critical"):
                c = self.next()
                self.expect("{")
                critical.append(self.critical(c))
                self.expect("}")
            elif self.at("trivial-monodromy"):
                flags.add(self.next().text)
            elif self.tok.kind == "IDENT" and self.peek().text == "=":
                key = self.next()
                if key.text not in ("base", "fiber", "dim"):
                    raise self.error(f"unknown fibration attribute {key.text!r}", key)
                self.next()
                attrs[key.text] = self.expr()
            else:
                raise self.error(f"unexpected {self.tok} in fibration block")
            self.skip_sep()
        self.expect("}")
        for need in ("base", "fiber", "dim"):
            if need not in attrs:
                raise self.error(f"fibration needs {need}=...", t)
        return Fibration(t.line, t.col, attrs, critical, flags)

    def critical(self, c: Token) -> Critical:
        kind = self.ident()
        if kind.text == "isolated":
            return Critical(c.line, c.col, "isolated", self.primary())
        if kind.text == "vanishing":
            table = self.primary()
            self.expect("sing")
            return Critical(c.line, c.col, "vanishing", table, self.number())
        if kind.text == "strata":
            self.expect("{")
            recs = self.records()
            self.expect("}")
            return Critical(c.line, c.col, "strata", recs)
        raise self.error(f"critical value kind must be isolated, vanishing or strata, found {kind.text!r}", kind)


def _names(node, acc: list):
    if isinstance(node, Name):
        acc.append(node)
    elif isinstance(node, Node) or isinstance(node, Record):
        for v in vars(node).values():
            _names(v, acc)
    elif isinstance(node, (list, tuple, set)):
        for v in node:
            _names(v, acc)
    elif isinstance(node, dict):
        for v in node.values():
            _names(v, acc)


def _check_names(statements: list) -> None:
    """Duplicate bindings and references to names bound later are errors."""
    bound_at: dict[str, Let] = {}
    for s in statements:
        if isinstance(s, Let):
            if s.name in bound_at:
                first = bound_at[s.name]
                raise DslError([Diagnostic("error", s.line, s.col, "E-DUP",
                                           f"{s.name!r} is already defined at line {first.line}")])
            bound_at[s.name] = s
    seen: set[str] = set()
    for s in statements:
        refs: list[Name] = []
        _names(s.expr if isinstance(s, Let) else s, refs)
        for r in refs:
            if r.id in bound_at and r.id not in seen:
                raise DslError([Diagnostic("error", r.line, r.col, "E-FORWARD",
                                           f"{r.id!r} is used before its definition at line {bound_at[r.id].line}")])
        if isinstance(s, Let):
            seen.add(s.name)


def parse(source: str) -> Script:
    """Parse a script; raises :class:`DslError` with located diagnostics."""
    p = _Parser(tokenize(source), source)
    statements = p.script()
    _check_names(statements)
    return Script(statements, source)
