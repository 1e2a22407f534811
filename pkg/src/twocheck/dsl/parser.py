"""Line-oriented block syntax for the input language.

Declarations: fincat, twocat, family, weight, functor, monad, algebra,
morphism, diagram, task.  `#` starts a comment; statements are separated by
newlines or `;`; identifiers match [A-Za-z_][A-Za-z0-9_']* (task kind values
may be kebab-cased).  Composition tables are explicit equations: `g . f = h`
for (horizontal) composition, `b * a = c` for vertical composition.
print_document emits the canonical form; parse(print_document(parse(t)))
equals parse(t) on the AST (spans excluded from comparison).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ParseError

KEYWORDS = {
    "fincat", "twocat", "family", "weight", "functor", "monad", "algebra",
    "morphism", "diagram", "task",
}

PUNCT = {"{", "}", ":", "=", ".", "*", ";", "->", "=>"}


@dataclass(frozen=True)
class Token:
    kind: str        # "ident" | punctuation literal | "nl" | "eof"
    value: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            if tokens and tokens[-1].kind not in ("nl", "{"):
                tokens.append(Token("nl", "\n", line, col))
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if text.startswith("->", i):
            tokens.append(Token("->", "->", line, col))
            i += 2
            col += 2
            continue
        if text.startswith("=>", i):
            tokens.append(Token("=>", "=>", line, col))
            i += 2
            col += 2
            continue
        if ch in "{}:=.*;":
            tokens.append(Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            start_col = col
            while i < n and text[i].isdigit():
                i += 1
                col += 1
            tokens.append(Token("ident", text[start:i], line, start_col))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            start_col = col
            while i < n and (text[i].isalnum() or text[i] in "_'"):
                i += 1
                col += 1
            # kebab continuation for task kind values (never `->`)
            while i + 1 < n and text[i] == "-" and text[i + 1] not in ">" and (
                text[i + 1].isalpha() or text[i + 1] == "_"
            ):
                i += 1
                col += 1
                while i < n and (text[i].isalnum() or text[i] in "_'"):
                    i += 1
                    col += 1
            tokens.append(Token("ident", text[start:i], line, start_col))
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col, expected=())
    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Span:
    line: int = 0
    column: int = 0
    end_line: int = 0
    end_column: int = 0


@dataclass(frozen=True)
class Field:
    head: str
    values: tuple


@dataclass(frozen=True)
class TypedDecl:
    kw: str          # arrow | onecell | twocell
    name: str
    src: str
    arrow_kind: str  # "->" | "=>"
    tgt: str


@dataclass(frozen=True)
class Equation:
    op: str          # "." | "*"
    left: str
    right: str
    result: str


@dataclass(frozen=True)
class Assign:
    kw: str
    key: str
    value: str


@dataclass(frozen=True)
class SubBlock:
    kw: str
    name: str
    statements: tuple


@dataclass(frozen=True)
class Decl:
    kind: str
    name: str
    statements: tuple = ()
    on: str = None
    of: str = None
    source: str = None
    target: str = None
    family_sort: str = None
    members: tuple = ()
    span: Span = field(default=Span(), compare=False)


@dataclass(frozen=True)
class Document:
    declarations: tuple


class Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.pos = 0
        self.text = text

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, expected):
        tok = self.peek()
        raise ParseError(
            f"unexpected {tok.kind if tok.kind != 'ident' else tok.value!r}",
            tok.line, tok.column, expected=expected,
        )

    def expect(self, kind):
        tok = self.peek()
        if tok.kind != kind:
            self.error((kind,))
        return self.advance()

    def expect_ident(self):
        tok = self.peek()
        if tok.kind != "ident":
            self.error(("identifier",))
        return self.advance().value

    def skip_nl(self):
        while self.peek().kind in ("nl", ";"):
            self.advance()

    def parse_document(self):
        decls = []
        self.skip_nl()
        while self.peek().kind != "eof":
            decls.append(self.parse_declaration())
            self.skip_nl()
        return Document(tuple(decls))

    def parse_declaration(self):
        tok = self.peek()
        if tok.kind != "ident" or tok.value not in KEYWORDS:
            self.error(tuple(sorted(KEYWORDS)))
        start = self.advance()
        kind = start.value
        name = self.expect_ident()
        on = of = source = target = family_sort = None
        members = ()
        if kind in ("weight", "monad"):
            kw = self.expect_ident()
            if kw != "on":
                self.error(("on",))
            on = self.expect_ident()
        elif kind == "family":
            kw = self.expect_ident()
            if kw != "on":
                self.error(("on",))
            on = self.expect_ident()
            family_sort = self.expect_ident()
            if family_sort not in ("arrows", "cells"):
                self.error(("arrows", "cells"))
        elif kind in ("functor", "diagram"):
            self.expect(":")
            source = self.expect_ident()
            self.expect("->")
            target = self.expect_ident()
        elif kind == "algebra":
            kw = self.expect_ident()
            if kw != "of":
                self.error(("of",))
            of = self.expect_ident()
        elif kind == "morphism":
            kw = self.expect_ident()
            if kw != "of":
                self.error(("of",))
            of = self.expect_ident()
            self.expect(":")
            source = self.expect_ident()
            self.expect("->")
            target = self.expect_ident()

        self.expect("{")
        if kind == "family":
            self.skip_nl()
            mem = []
            while self.peek().kind != "}":
                mem.append(self.expect_ident())
                self.skip_nl()
            end = self.expect("}")
            return Decl(kind, name, (), on, of, source, target, family_sort, tuple(mem),
                        Span(start.line, start.column, end.line, end.column))
        statements = self.parse_statements()
        end = self.expect("}")
        return Decl(kind, name, tuple(statements), on, of, source, target, family_sort, (),
                    Span(start.line, start.column, end.line, end.column))

    def parse_statements(self):
        statements = []
        self.skip_nl()
        while self.peek().kind != "}":
            statements.append(self.parse_statement())
            if self.peek().kind not in ("}",):
                if self.peek().kind not in ("nl", ";"):
                    self.error(("newline", ";", "}"))
                self.skip_nl()
        return statements

    def parse_statement(self):
        head = self.expect_ident()
        tok = self.peek()
        if head in ("arrow", "onecell", "twocell") and self.tokens[self.pos + 1].kind == ":":
            name = self.expect_ident()
            self.expect(":")
            src = self.expect_ident()
            arrow_tok = self.peek()
            if arrow_tok.kind not in ("->", "=>"):
                self.error(("->", "=>"))
            arrow_kind = self.advance().kind
            tgt = self.expect_ident()
            return TypedDecl(head, name, src, arrow_kind, tgt)
        if tok.kind == "ident" and self.tokens[self.pos + 1].kind == "{":
            name = self.expect_ident()
            self.expect("{")
            inner = self.parse_statements()
            self.expect("}")
            return SubBlock(head, name, tuple(inner))
        if tok.kind in (".", "*"):
            op = self.advance().kind
            right = self.expect_ident()
            self.expect("=")
            result = self.expect_ident()
            return Equation(op, head, right, result)
        if tok.kind == "ident" and self.tokens[self.pos + 1].kind == "=":
            key = self.expect_ident()
            self.expect("=")
            value = self.expect_ident()
            return Assign(head, key, value)
        values = []
        while self.peek().kind == "ident":
            values.append(self.advance().value)
        return Field(head, tuple(values))


def parse(text):
    return Parser(tokenize(text), text).parse_document()


# ---------------------------------------------------------------------------
# Printer


def _print_statement(stmt, out, indent="  "):
    if isinstance(stmt, Field):
        out.append(indent + " ".join((stmt.head,) + stmt.values))
    elif isinstance(stmt, TypedDecl):
        out.append(f"{indent}{stmt.kw} {stmt.name} : {stmt.src} {stmt.arrow_kind} {stmt.tgt}")
    elif isinstance(stmt, Equation):
        out.append(f"{indent}{stmt.left} {stmt.op} {stmt.right} = {stmt.result}")
    elif isinstance(stmt, Assign):
        out.append(f"{indent}{stmt.kw} {stmt.key} = {stmt.value}")
    elif isinstance(stmt, SubBlock):
        out.append(f"{indent}{stmt.kw} {stmt.name} {{")
        for inner in stmt.statements:
            _print_statement(inner, out, indent + "  ")
        out.append(indent + "}")
    else:
        raise TypeError(stmt)


def print_document(doc):
    out = []
    for decl in doc.declarations:
        header = f"{decl.kind} {decl.name}"
        if decl.kind in ("weight", "monad"):
            header += f" on {decl.on}"
        elif decl.kind == "family":
            header += f" on {decl.on} {decl.family_sort}"
        elif decl.kind in ("functor", "diagram"):
            header += f" : {decl.source} -> {decl.target}"
        elif decl.kind == "algebra":
            header += f" of {decl.of}"
        elif decl.kind == "morphism":
            header += f" of {decl.of} : {decl.source} -> {decl.target}"
        if decl.kind == "family":
            out.append(header + " { " + " ".join(decl.members) + " }")
            out.append("")
            continue
        out.append(header + " {")
        for stmt in decl.statements:
            _print_statement(stmt, out)
        out.append("}")
        out.append("")
    return "\n".join(out)
