"""Parser and serializer for the presentation file grammar.

Grammar (UTF-8 text)::

    file   := header? statement+
    header := "group" NAME NL ("gens" NAME+ NL)?
    statement := chain | replace
    chain  := expr ("=" expr)* "=" "1" ";"? NL
    replace := "replace" expr "with" expr ("=" expr)* ";"? NL
    expr   := term ("*" term)*
    term   := atom ("^" (INT | atom))*
    atom   := NAME | "(" expr ("," expr)? ")"

"(e1,e2)" is a commutator, "(e)" is grouping.  INT may be negative and may
be braced, e.g. ``^{-1}``.  A ``^`` with a word right-hand side denotes
conjugation; with an integer literal it denotes a power.  Lines starting
with ``#`` are ignored.

Chained relator lines must end in the literal ``1``; every other chain
member contributes one relator.  ``replace`` directives record a central
substitution: the target relator is removed from the relator list and the
replacement relators appended (see constructors.apply_substitutions).
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field

from .words import (Commutator, Conjugation, Gen, Inverse, Power, Product,
                    Word, WordExpr)

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9.]*")
INT_RE = re.compile(r"-?\d+")

TOKEN_RE = re.compile(
    r"\s+|(?P<comment>#[^\n]*)|(?P<name>[A-Za-z][A-Za-z0-9.]*)"
    r"|(?P<int>-?\d+)|(?P<sym>[{}()^*=,;])"
)


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ReplaceDirective:
    """Swap one relator for a list of replacements (central substitutions)."""

    target: Word
    replacements: tuple[Word, ...]


@dataclass
class Presentation:
    """Named generators plus relator words."""

    generators: list[str]
    relators: list[Word]
    name: str = ""
    metadata: dict[str, str] = field(default_factory=dict)
    directives: list[ReplaceDirective] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for g in self.generators:
            if not NAME_RE.fullmatch(g):
                raise ValueError(f"bad generator name {g!r}")
            if g in seen:
                raise ValueError(f"duplicate generator {g!r}")
            seen.add(g)
        n = len(self.generators)
        for r in self.relators:
            if r.max_generator() >= n:
                raise ValueError("relator uses undeclared generator index")
        # drop exact duplicate relators, keep first occurrence
        uniq: list[Word] = []
        seen_r: set[Word] = set()
        for r in self.relators:
            if r in seen_r:
                warnings.warn(f"duplicate relator dropped in {self.name or 'presentation'}")
                continue
            seen_r.add(r)
            uniq.append(r)
        self.relators = uniq

    def gen_index(self, name: str) -> int:
        return self.generators.index(name)

    def word(self, text: str) -> Word:
        """Parse a single expression in this presentation's alphabet."""
        p = _Parser(text, strict=True, gens=list(self.generators))
        expr = p.parse_expr()
        p.expect_end()
        return expr.expand()


class _Parser:
    def __init__(self, text: str, strict: bool, gens: list[str] | None = None):
        self.tokens: list[tuple[str, str, int, int]] = []
        line, col = 1, 1
        pos = 0
        while pos < len(text):
            m = TOKEN_RE.match(text, pos)
            if not m:
                raise PresentationSyntaxError(
                    f"unexpected character {text[pos]!r}", line, col)
            chunk = m.group(0)
            kind = m.lastgroup
            if kind in ("name", "int", "sym"):
                self.tokens.append((kind, chunk, line, col))
            nl = chunk.count("\n")
            if nl:
                line += nl
                col = len(chunk) - chunk.rfind("\n")
            else:
                col += len(chunk)
            pos = m.end()
        self.i = 0
        self.strict = strict
        self.gens: list[str] = gens if gens is not None else []

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else ("", "", 1, 1)
            raise PresentationSyntaxError("unexpected end of input", last[2], last[3])
        self.i += 1
        return tok

    def error(self, msg: str):
        tok = self.peek() or (self.tokens[-1] if self.tokens else ("", "", 1, 1))
        raise PresentationSyntaxError(msg, tok[2], tok[3])

    def accept_sym(self, s: str) -> bool:
        tok = self.peek()
        if tok and tok[0] == "sym" and tok[1] == s:
            self.i += 1
            return True
        return False

    def expect_sym(self, s: str):
        if not self.accept_sym(s):
            self.error(f"expected {s!r}")

    def expect_end(self):
        if self.peek() is not None:
            self.error("trailing input")

    def gen_ref(self, name: str) -> Gen:
        if name in self.gens:
            return Gen(self.gens.index(name))
        if self.strict:
            self.error(f"unknown generator {name!r}")
        self.gens.append(name)
        return Gen(len(self.gens) - 1)

    def parse_expr(self) -> WordExpr:
        factors = [self.parse_term()]
        while self.accept_sym("*"):
            factors.append(self.parse_term())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def parse_term(self) -> WordExpr:
        node = self.parse_atom()
        while self.accept_sym("^"):
            tok = self.peek()
            if tok is None:
                self.error("dangling '^'")
            if tok[0] == "int":
                self.next()
                node = Power(node, int(tok[1]))
            elif tok[0] == "sym" and tok[1] == "{":
                self.next()
                t2 = self.next()
                if t2[0] != "int":
                    self.error("expected integer inside braces")
                self.expect_sym("}")
                node = Power(node, int(t2[1]))
            else:
                node = Conjugation(node, self.parse_atom())
        return node

    def parse_atom(self) -> WordExpr:
        tok = self.peek()
        if tok is None:
            self.error("expected expression")
        if tok[0] == "name":
            self.next()
            return self.gen_ref(tok[1])
        if tok[0] == "int" and tok[1] == "1":
            # the literal 1 only appears as chain terminator; handled by caller
            self.error("'1' is only valid as a chain terminator")
        if tok[0] == "sym" and tok[1] == "(":
            self.next()
            first = self.parse_expr()
            if self.accept_sym(","):
                second = self.parse_expr()
                self.expect_sym(")")
                return Commutator(first, second)
            self.expect_sym(")")
            return first
        self.error(f"unexpected token {tok[1]!r}")

    def at_literal_one(self) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "int" and tok[1] == "1"


def parse_presentation(text: str, strict: bool = False,
                       name: str = "") -> Presentation:
    """Parse presentation text into a Presentation.

    With strict=False (the default) generators are inferred in order of first
    appearance unless declared in a ``gens`` header line.
    """
    p = _Parser(text, strict=strict)
    pname = name
    tok = p.peek()
    if tok and tok[0] == "name" and tok[1] == "group":
        p.next()
        pname = p.next()[1]
        tok = p.peek()
    declared = False
    if tok and tok[0] == "name" and tok[1] == "gens":
        p.next()
        declared = True
        while p.peek() and p.peek()[0] == "name" and not _starts_statement(p):
            p.gens.append(p.next()[1])
    if declared and strict is False:
        p.strict = True  # declared alphabets are closed
    if strict and not p.gens:
        raise ValueError("strict mode requires a gens header")

    relators: list[Word] = []
    directives: list[ReplaceDirective] = []
    while p.peek() is not None:
        tok = p.peek()
        if tok[0] == "name" and tok[1] == "replace":
            p.next()
            target = p.parse_expr().expand()
            with_tok = p.next()
            if with_tok[0] != "name" or with_tok[1] != "with":
                p.error("expected 'with'")
            repls = [p.parse_expr().expand()]
            while p.accept_sym("="):
                if p.at_literal_one():
                    p.next()
                    break
                repls.append(p.parse_expr().expand())
            p.accept_sym(";")
            directives.append(ReplaceDirective(target, tuple(repls)))
            continue
        members = [p.parse_expr()]
        terminated = False
        while p.accept_sym("="):
            if p.at_literal_one():
                p.next()
                terminated = True
                break
            members.append(p.parse_expr())
        if not terminated:
            p.error("relator chain must end in '= 1'")
        p.accept_sym(";")
        relators.extend(m.expand() for m in members)
    return Presentation(generators=list(p.gens), relators=relators,
                        name=pname, directives=directives)


def _starts_statement(p: _Parser) -> bool:
    """Heuristic: a gens header ends where an expression/statement begins.

    A NAME followed by one of ``^ * = ( ,`` or by end-of-header keywords
    starts a statement; bare names separated by whitespace are generator
    declarations.
    """
    tok = p.peek()
    if tok is None or tok[0] != "name":
        return True
    if tok[1] in ("replace",):
        return True
    nxt = p.tokens[p.i + 1] if p.i + 1 < len(p.tokens) else None
    if nxt is None:
        return False
    if nxt[0] == "sym" and nxt[1] in ("^", "*", "=", ","):
        return True
    return False


# ---------------------------------------------------------------------------
# Serialization


def apply_substitutions(pres: Presentation) -> Presentation:
    """Resolve `replace` directives into a plain relator list."""
    relators = list(pres.relators)
    for d in pres.directives:
        if d.target in relators:
            relators = [r for r in relators if r != d.target]
        relators += [w for w in d.replacements if w not in relators]
    return Presentation(generators=list(pres.generators), relators=relators,
                        name=pres.name, metadata=dict(pres.metadata))


def word_to_text(w: Word, gens: list[str]) -> str:
    if w.is_identity():
        return "1"
    parts = []
    for g, e in w.syllables:
        if e == 1:
            parts.append(gens[g])
        else:
            parts.append(f"{gens[g]}^{e}")
    return "*".join(parts)


def serialize(p: Presentation) -> str:
    """Render a Presentation in the file grammar; parse(serialize(p))
    reproduces the generator list and relator multiset."""
    lines = []
    if p.name:
        lines.append(f"group {p.name}")
    lines.append("gens " + " ".join(p.generators))
    for r in p.relators:
        lines.append(f"{word_to_text(r, p.generators)} = 1;")
    for d in p.directives:
        repl = " = ".join(word_to_text(w, p.generators) for w in d.replacements)
        lines.append(f"replace {word_to_text(d.target, p.generators)} with {repl};")
    return "\n".join(lines) + "\n"
