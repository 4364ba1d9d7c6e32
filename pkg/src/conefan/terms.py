"""Lattice-ordered group terms: AST, parser, printer, evaluation, linear pieces.

Concrete syntax, loosest to tightest binding::

    term   = join
    join   = meet { "v" meet }
    meet   = add { "^" add }
    add    = unary { ("+" | "-") unary }
    unary  = "-" unary | atom
    atom   = "0" | "x<k>" | "(" term ")"

``v`` is the join (pointwise max), ``^`` the meet (pointwise min).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .arith import IntVec


class TermSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Neg:
    child: "Term"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Sub:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"


Term = Union[Var, Zero, Neg, Add, Sub, Join, Meet]


@dataclass(frozen=True)
class LGroupPresentation:
    """Generators of an l-subgroup of the free l-group on ``m`` variables."""

    m: int
    generators: tuple

    def __post_init__(self):
        if not self.generators:
            raise ValueError("presentation needs at least one generator")
        for t in self.generators:
            if max_var(t) > self.m:
                raise ValueError(f"generator {print_term(t)} uses more than {self.m} variables")

    @classmethod
    def identity(cls, m: int) -> "LGroupPresentation":
        return cls(m, tuple(Var(i) for i in range(1, m + 1)))


_TOKEN = re.compile(r"\s*(?:(x\d+)|(0)|([v^+\-()]))", re.IGNORECASE)


def _tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise TermSyntaxError(f"unexpected character {text[start]!r}", start)
        tok = (m.group(1) or m.group(2) or m.group(3)).lower()
        out.append((tok, m.start(m.lastindex)))
        pos = m.end()
    out.append(("$", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, m: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.m = m

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self) -> tuple[str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, what: str):
        tok, pos = self.take()
        if tok != what:
            found = "end of input" if tok == "$" else repr(tok)
            raise TermSyntaxError(f"expected {what!r}, found {found}", pos)

    def join(self) -> Term:
        t = self.meet()
        while self.peek() == "v":
            self.take()
            t = Join(t, self.meet())
        return t

    def meet(self) -> Term:
        t = self.add()
        while self.peek() == "^":
            self.take()
            t = Meet(t, self.add())
        return t

    def add(self) -> Term:
        t = self.unary()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.unary()
            t = Add(t, rhs) if op == "+" else Sub(t, rhs)
        return t

    def unary(self) -> Term:
        if self.peek() == "-":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Term:
        tok, pos = self.take()
        if tok == "0":
            return Zero()
        if tok == "(":
            t = self.join()
            self.expect(")")
            return t
        if tok.startswith("x"):
            if tok[1] == "0":
                raise TermSyntaxError("variable indices start at 1", pos)
            k = int(tok[1:])
            if k > self.m:
                raise TermSyntaxError(f"variable out of range: x{k} with m={self.m}", pos)
            return Var(k)
        found = "end of input" if tok == "$" else repr(tok)
        raise TermSyntaxError(f"expected a term, found {found}", pos)


def parse_term(text: str, m: int) -> Term:
    p = _Parser(text, m)
    t = p.join()
    tok, pos = p.take()
    if tok != "$":
        raise TermSyntaxError(f"unexpected {tok!r}", pos)
    return t


def print_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Neg):
        return f"(- {print_term(t.child)})"
    op = {Add: "+", Sub: "-", Join: "v", Meet: "^"}[type(t)]
    return f"({print_term(t.left)} {op} {print_term(t.right)})"


def max_var(t: Term) -> int:
    if isinstance(t, Var):
        return t.index
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Neg):
        return max_var(t.child)
    return max(max_var(t.left), max_var(t.right))


def eval_term(t: Term, x: Sequence) -> Fraction:
    if isinstance(t, Var):
        return Fraction(x[t.index - 1])
    if isinstance(t, Zero):
        return Fraction(0)
    if isinstance(t, Neg):
        return -eval_term(t.child, x)
    a = eval_term(t.left, x)
    b = eval_term(t.right, x)
    if isinstance(t, Add):
        return a + b
    if isinstance(t, Sub):
        return a - b
    if isinstance(t, Join):
        return max(a, b)
    return min(a, b)


def linear_pieces(t: Term, m: int) -> list[IntVec]:
    """Integer linear forms (coefficient tuples of length m) covering ``t``.

    Built by structural induction; may contain forms never attained.
    """
    return sorted(_pieces(t, m))


def _pieces(t: Term, m: int) -> set[IntVec]:
    if isinstance(t, Var):
        return {tuple(int(j == t.index - 1) for j in range(m))}
    if isinstance(t, Zero):
        return {(0,) * m}
    if isinstance(t, Neg):
        return {tuple(-c for c in f) for f in _pieces(t.child, m)}
    a = _pieces(t.left, m)
    b = _pieces(t.right, m)
    if isinstance(t, Add):
        return {tuple(x + y for x, y in zip(f, g)) for f in a for g in b}
    if isinstance(t, Sub):
        return {tuple(x - y for x, y in zip(f, g)) for f in a for g in b}
    return a | b


def split_terms(text: str) -> list[str]:
    """Split a comma-separated term list (terms never contain commas)."""
    parts = [p.strip() for p in text.split(",")]
    if any(not p for p in parts):
        raise TermSyntaxError("empty term in list", text.find(",,") if ",," in text else 0)
    return parts


def linear_term(coeffs: Sequence[int]) -> Term:
    """The term sum_j coeffs[j] * x_{j+1}, written with + and - only."""
    t: Term | None = None
    for j, c in enumerate(coeffs):
        for _ in range(abs(c)):
            v: Term = Var(j + 1)
            if t is None:
                t = v if c > 0 else Neg(v)
            else:
                t = Add(t, v) if c > 0 else Sub(t, v)
    return t if t is not None else Zero()
