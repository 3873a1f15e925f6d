"""Construction expressions: tokenizer, recursive-descent parser and printer.

    expr    := ident [ '(' args ')' ] | NUMBER | '[' [NUMBER {',' NUMBER}] ']'
             | JSON-object | '{' ('finite' | 'cofinite') ':' '[' naturals ']' '}'
    args    := expr {',' expr}
    asum    := 'asum' '(' expr ';' [pointed {',' pointed}] ')'
    pointed := expr '@' NUMBER
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from fintop.errors import FinTopError

# generators: name -> takes a size argument
GENERATORS = {"S": False, "D": True, "I": True, "C": True, "B": True, "Cfin": True,
              "Comega": False, "Cof": False}
# operators with a fixed argument count; sum is variadic and asum has its own form
ARITY = {"prod": 2, "sub": 2, "q": 2, "pf": 2, "tri": 3, "dtri": 3, "pinch": 4,
         "tower": 2, "r0": 1}
VARIADIC = ("sum",)
OPERATORS = tuple(ARITY) + VARIADIC + ("asum",)


class ExprSyntaxError(FinTopError, ValueError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line, self.col, self.expected, self.found = line, col, expected, found
        where = f" but found {found}" if found else ""
        super().__init__(f"line {line}, column {col}: expected {expected}{where}")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class PointList:
    values: tuple[int, ...]


@dataclass(frozen=True)
class Gen:
    name: str
    size: int | None = None


@dataclass(frozen=True)
class Literal:
    points: int
    opens: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FinCofLit:
    mode: str
    support: tuple[int, ...]


@dataclass(frozen=True)
class Pointed:
    expr: "Expr"
    point: int


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple["Expr", ...]


Expr = Num | PointList | Gen | Literal | FinCofLit | Pointed | Call


@dataclass(frozen=True)
class Token:
    kind: str  # ident, num, punct, json, fincof, end
    text: str
    line: int
    col: int


PUNCT = "(),;[]@"
FINCOF = re.compile(r"\{\s*(finite|cofinite)\s*:\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*\}")


def tokenize(src: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1

    def advance(k: int) -> None:
        nonlocal i, line, col
        for ch in src[i:i + k]:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        i += k

    while i < len(src):
        ch = src[i]
        if ch.isspace():
            advance(1)
        elif ch in PUNCT:
            out.append(Token("punct", ch, line, col))
            advance(1)
        elif ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            out.append(Token("num", src[i:j], line, col))
            advance(j - i)
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            out.append(Token("ident", src[i:j], line, col))
            advance(j - i)
        elif ch == "{" and FINCOF.match(src, i):
            m = FINCOF.match(src, i)
            out.append(Token("fincof", m.group(0), line, col))
            advance(m.end() - i)
        elif ch == "{":
            try:
                _, end = json.JSONDecoder().raw_decode(src, i)
            except json.JSONDecodeError:
                raise ExprSyntaxError(line, col, "a JSON space literal") from None
            out.append(Token("json", src[i:end], line, col))
            advance(end - i)
        else:
            raise ExprSyntaxError(line, col, "an expression", repr(ch))
    out.append(Token("end", "", line, col))
    return out


class Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def fail(self, expected: str):
        t = self.tok
        raise ExprSyntaxError(t.line, t.col, expected, repr(t.text) if t.text else "end of input")

    def eat(self, text: str) -> Token:
        if self.tok.kind != "punct" or self.tok.text != text:
            self.fail(repr(text))
        t = self.tok
        self.pos += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == text

    def number(self) -> int:
        if self.tok.kind != "num":
            self.fail("a natural number")
        v = int(self.tok.text)
        self.pos += 1
        return v

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            self.fail("end of input")
        return e

    def parse_list(self) -> list[Expr]:
        items = [self.expr()]
        while self.at(","):
            self.pos += 1
            items.append(self.expr())
        if self.tok.kind != "end":
            self.fail("',' or end of input")
        return items

    def expr(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            return Num(self.number())
        if t.kind == "json":
            self.pos += 1
            return _literal(t)
        if t.kind == "fincof":
            self.pos += 1
            m = FINCOF.match(t.text)
            nums = m.group(2) or ""
            return FinCofLit(m.group(1), tuple(sorted({int(v) for v in re.findall(r"\d+", nums)})))
        if self.at("["):
            self.pos += 1
            vals = []
            if not self.at("]"):
                vals.append(self.number())
                while self.at(","):
                    self.pos += 1
                    vals.append(self.number())
            self.eat("]")
            return PointList(tuple(vals))
        if t.kind != "ident":
            self.fail("an expression")
        self.pos += 1
        name = t.text
        if name in GENERATORS:
            if not GENERATORS[name]:
                return Gen(name)
            self.eat("(")
            n = self.number()
            self.eat(")")
            return Gen(name, n)
        if name == "asum":
            return self.asum()
        if name not in ARITY and name not in VARIADIC:
            raise ExprSyntaxError(t.line, t.col, "a generator or operator", repr(name))
        open_tok = self.eat("(")
        args = [self.expr()]
        while self.at(","):
            self.pos += 1
            args.append(self.expr())
        self.eat(")")
        if name in ARITY and len(args) != ARITY[name]:
            raise ExprSyntaxError(open_tok.line, open_tok.col,
                                  f"{ARITY[name]} arguments to {name}", f"{len(args)} arguments")
        return Call(name, tuple(args))

    def asum(self) -> Call:
        self.eat("(")
        args = [self.expr()]
        self.eat(";")
        if not self.at(")"):
            args.append(self.pointed())
            while self.at(","):
                self.pos += 1
                args.append(self.pointed())
        self.eat(")")
        return Call("asum", tuple(args))

    def pointed(self) -> Pointed:
        e = self.expr()
        self.eat("@")
        return Pointed(e, self.number())


def _literal(t: Token) -> Literal:
    data = json.loads(t.text)
    try:
        n = int(data["points"])
        opens = tuple(sorted({tuple(sorted(int(p) for p in o)) for o in data["opens"]}))
    except (KeyError, TypeError, ValueError):
        raise ExprSyntaxError(t.line, t.col, 'an object {"points": n, "opens": [...]}') from None
    return Literal(n, opens)


def parse(src: str) -> Expr:
    return Parser(src).parse()


def parse_list(src: str) -> list[Expr]:
    """Comma-separated expressions, as used for families and seed sets."""
    return Parser(src).parse_list()


def to_source(e: Expr) -> str:
    """Print an expression so that ``parse(to_source(e)) == e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, PointList):
        return "[" + ", ".join(map(str, e.values)) + "]"
    if isinstance(e, Gen):
        return e.name if e.size is None else f"{e.name}({e.size})"
    if isinstance(e, Literal):
        return json.dumps({"points": e.points, "opens": [list(o) for o in e.opens]},
                          separators=(",", ":"))
    if isinstance(e, FinCofLit):
        return "{" + e.mode + ":[" + ",".join(map(str, e.support)) + "]}"
    if isinstance(e, Pointed):
        return f"{to_source(e.expr)}@{e.point}"
    if e.op == "asum":
        rest = ", ".join(to_source(a) for a in e.args[1:])
        return f"asum({to_source(e.args[0])}; {rest})"
    return f"{e.op}(" + ", ".join(to_source(a) for a in e.args) + ")"
