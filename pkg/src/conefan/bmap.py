"""Integer piecewise homogeneous linear maps carried by a regular fan.

A :class:`BMap` pairs a domain fan with one integer matrix per maximal cone.
Term tuples become B-maps through :func:`linearizing_fan`; zero sets and
ranges are returned as regular fans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arith import IntMat, IntVec, dot, extreme_rays, matmul, matvec, primitive, rank, transpose
from .fan import (
    Cone,
    Fan,
    FanError,
    FanFormatError,
    _Piece,
    _pieces_of,
    _separated,
    _split,
    _fmt_vec,
    _parse_vec,
    as_int_point,
    cone_new,
    cone_piece,
    desingularize,
    faces,
    fan_validate,
    make_fan,
    orthant_fan,
    parse_fan_lines,
    piece_contains,
    triangulate_pieces,
    triangulate_union,
)
from .terms import Add, Join, Neg, Sub, Term, Var, Zero, eval_term, linear_pieces, max_var


class BMapError(ValueError):
    pass


class OutsideDomainError(BMapError):
    def __init__(self, point):
        super().__init__(f"point {_fmt_vec(point)} is outside the domain")
        self.point = tuple(point)


class RangeContainmentError(BMapError):
    def __init__(self, point):
        super().__init__(f"range point {_fmt_vec(point)} is outside the outer domain")
        self.point = tuple(point)


@dataclass(frozen=True)
class BMap:
    source_dim: int
    target_dim: int
    domain_fan: Fan
    matrices: tuple[IntMat, ...]  # aligned with domain_fan.cones

    def pieces(self):
        return zip(self.domain_fan.cones, self.matrices)

    def matrix_at(self, x: Sequence) -> Optional[IntMat]:
        p = as_int_point(x)
        for c, m in self.pieces():
            if c.contains(p):
                return m
        return None

    def __call__(self, x: Sequence) -> tuple[Fraction, ...]:
        return bmap_eval(self, x)


def check_compatible(b: BMap) -> Optional[IntVec]:
    """A ray on which two cone matrices disagree, or None."""
    image: dict[IntVec, tuple] = {}
    for c, m in b.pieces():
        for w in c.generators:
            y = matvec(m, w)
            if image.setdefault(w, y) != y:
                return w
    return None


def make_bmap(domain_fan: Fan, matrices: Sequence[Sequence[Sequence[int]]], target_dim: int) -> BMap:
    mats = tuple(tuple(tuple(int(v) for v in row) for row in m) for m in matrices)
    if len(mats) != len(domain_fan.cones):
        raise BMapError("one matrix per maximal cone is required")
    for m in mats:
        if len(m) != target_dim or any(len(r) != domain_fan.ambient_dim for r in m):
            raise BMapError(f"matrix must be {target_dim}x{domain_fan.ambient_dim}")
    b = BMap(domain_fan.ambient_dim, target_dim, domain_fan, mats)
    bad = check_compatible(b)
    if bad is not None:
        raise BMapError(f"matrices disagree on the ray {_fmt_vec(bad)}")
    return b


def identity_bmap(n: int) -> BMap:
    f = orthant_fan(n)
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return BMap(n, n, f, (eye,) * len(f.cones))


def bmap_eval(b: BMap, x: Sequence) -> tuple[Fraction, ...]:
    m = b.matrix_at(x)
    if m is None:
        raise OutsideDomainError(x)
    return tuple(Fraction(v) for v in matvec(m, [Fraction(c) for c in x]))


# ------------------------------------------------------------ linearization


def _neg(f: IntVec) -> IntVec:
    return tuple(-c for c in f)


def _sides(p: _Piece, d: IntVec) -> int:
    vals = [dot(d, r) for r in p.rays]
    if all(v >= 0 for v in vals):
        return 1
    if all(v <= 0 for v in vals):
        return -1
    return 0


def _linearize(t: Term, p: _Piece, m: int) -> list[tuple[_Piece, IntVec]]:
    """Refine ``p`` into cells on each of which ``t`` is one linear form."""
    if isinstance(t, Var):
        return [(p, tuple(int(j == t.index - 1) for j in range(m)))]
    if isinstance(t, Zero):
        return [(p, (0,) * m)]
    if isinstance(t, Neg):
        return [(q, _neg(f)) for q, f in _linearize(t.child, p, m)]
    out = []
    for q, f in _linearize(t.left, p, m):
        for r, g in _linearize(t.right, q, m):
            if isinstance(t, Add):
                out.append((r, tuple(a + b for a, b in zip(f, g))))
                continue
            if isinstance(t, Sub):
                out.append((r, tuple(a - b for a, b in zip(f, g))))
                continue
            d = tuple(a - b for a, b in zip(f, g))
            if not any(d):
                out.append((r, f))
                continue
            # on a cell where f - g >= 0: join is f, meet is g
            ge, le = (f, g) if isinstance(t, Join) else (g, f)
            side = _sides(r, d)
            if side > 0:
                out.append((r, ge))
            elif side < 0:
                out.append((r, le))
            else:
                for half in _split(m, r, primitive(d)):
                    out.append((half, ge if _sides(half, d) >= 0 else le))
    return out


def _linear_cells(terms: Sequence[Term], m: int, sign_split: bool = False) -> list[_Piece]:
    cells = [(p, ()) for p in _pieces_of(m, [])]
    for t in terms:
        cells = [(q, forms + (f,)) for p, forms in cells for q, f in _linearize(t, p, m)]
    pieces = []
    for p, forms in cells:
        work = [p]
        if sign_split:
            for f in forms:
                if any(f):
                    work = [q for w in work for q in _split(m, w, primitive(f))]
        pieces.extend(work)
    return pieces


def _row_for(t: Term, c: Cone, candidates: list[IntVec]) -> IntVec:
    probes = list(c.generators) + [c.relative_interior_point()]
    values = [eval_term(t, x) for x in probes]
    for f in candidates:
        if all(dot(f, x) == v for x, v in zip(probes, values)):
            return f
    raise BMapError(f"no linear piece of the term matches on {c}")


def linearizing_fan(terms: Sequence[Term], m: int, sign_split: bool = False) -> BMap:
    """Regular fan covering R^m on whose cones every term is linear."""
    if not terms:
        raise BMapError("at least one term is required")
    for t in terms:
        if max_var(t) > m:
            raise BMapError(f"term uses more than {m} variables")
    fan = desingularize(triangulate_pieces(m, _linear_cells(terms, m, sign_split)))
    cands = [linear_pieces(t, m) for t in terms]
    mats = tuple(
        tuple(_row_for(t, c, cs) for t, cs in zip(terms, cands)) for c in fan.cones
    )
    return BMap(m, len(terms), fan, mats)


def zeroset_fan(t: Term, m: int) -> Fan:
    """Regular fan whose support is {x : t(x) = 0}."""
    b = linearizing_fan([t], m, sign_split=True)
    keep = []
    for c, mat in b.pieces():
        row = mat[0]
        for face in faces(c):
            if all(dot(row, w) == 0 for w in face.generators):
                keep.append(face)
    return desingularize(make_fan(m, keep))


def image_cones(b: BMap) -> list[list[IntVec]]:
    out = []
    for c, mat in b.pieces():
        out.append([v for v in (matvec(mat, w) for w in c.generators) if any(v)])
    return out


def image_fan(b: BMap) -> Fan:
    """Regular fan whose support is the range of ``b``."""
    return desingularize(triangulate_union(b.target_dim, image_cones(b)))


# -------------------------------------------------------------- pullbacks


@dataclass(frozen=True)
class _Cell:
    piece: _Piece
    source: int  # index into the inner map's cones
    target: int  # index into the outer fan's cones


def pullback_cells(b: BMap, outer: Fan) -> tuple[list[_Cell], Optional[IntVec]]:
    """Cells C & b^-1(D) for domain cones C and outer cones D, plus a range
    point of ``b`` outside ``|outer|`` if there is one."""
    n = b.source_dim
    cells: list[_Cell] = []
    for i, (c, mat) in enumerate(b.pieces()):
        mine = []
        base = c.halfspaces()
        mt = transpose(mat)
        ys = [matvec(mat, g) for g in c.generators]
        img = cone_new(b.target_dim, ys) if ys and rank(ys) == len(ys) else None
        for j, d in enumerate(outer.cones):
            # if the image meets d only in a common face that is not the
            # whole image, the cell is lower dimensional and the
            # full-dimensional cells already cover it
            if img is not None and _separated(img, d) and not all(d.contains(y) for y in ys):
                continue
            pulled = [tuple(dot(col, a) for col in mt) for a in d.halfspaces()]
            cons = tuple(base + [a for a in pulled if any(a)])
            rays = extreme_rays(cons, n)
            if rays or not c.generators:
                mine.append(_Cell(_Piece(cons, tuple(rays)), i, j))
        if c.generators:
            tri = triangulate_pieces(n, [cone_piece(c)] + [x.piece for x in mine if x.piece.rays])
            for s in tri.cones:
                x = s.relative_interior_point()
                if not any(piece_contains(q.piece, x) for q in mine):
                    return cells, matvec(mat, x)
        cells.extend(mine)
    return cells, None


def refine_along(b: BMap, outer: Fan) -> tuple[Fan, list[tuple[int, int]]]:
    """Regular refinement of b's domain fan mapping every cone into one outer
    cone; returns the fan and (inner cone, outer cone) indices per cone."""
    cells, bad = pullback_cells(b, outer)
    if bad is not None:
        raise RangeContainmentError(bad)
    pieces = [c.piece for c in cells if c.piece.rays]
    fan = desingularize(triangulate_pieces(b.source_dim, pieces)) if pieces else b.domain_fan
    labels = []
    for tau in fan.cones:
        x = tau.relative_interior_point()
        cell = next((c for c in cells if piece_contains(c.piece, x)), None)
        if cell is None:
            raise BMapError(f"refined cone {tau} lies in no pullback cell")
        labels.append((cell.source, cell.target))
    return fan, labels


def compose(b2: BMap, b1: BMap) -> BMap:
    """The B-map x -> b2(b1(x)) on b1's domain."""
    if b1.target_dim != b2.source_dim:
        raise BMapError("dimension mismatch in composition")
    fan, labels = refine_along(b1, b2.domain_fan)
    mats = tuple(matmul(b2.matrices[j], b1.matrices[i]) for i, j in labels)
    return BMap(b1.source_dim, b2.target_dim, fan, mats)


# --------------------------------------------------------------- text format


def format_bmap(b: BMap) -> str:
    lines = [f"dim {b.source_dim}"]
    for c, m in b.pieces():
        lines.append(" ".join(["cone"] + [_fmt_vec(g) for g in c.generators]))
        lines.append("matrix " + ";".join(_fmt_vec(r) for r in m))
    return "\n".join(lines) + "\n"


def parse_bmap(text: str) -> BMap:
    dim, body = parse_fan_lines(list(enumerate(text.splitlines(), 1)))
    cones: list[Cone] = []
    mats: list[IntMat] = []
    target = None
    for lineno, toks in body:
        if toks[0] == "cone":
            if len(mats) != len(cones):
                raise FanFormatError("cone without a matrix line", lineno)
            try:
                cones.append(cone_new(dim, [_parse_vec(t, dim, lineno) for t in toks[1:]]))
            except FanError as e:
                raise FanFormatError(str(e), lineno) from None
        elif toks[0] == "matrix":
            if len(mats) != len(cones) - 1 or len(toks) != 2:
                raise FanFormatError("matrix line must follow its cone line", lineno)
            rows = tuple(_parse_vec(r, dim, lineno) for r in toks[1].split(";"))
            if target is None:
                target = len(rows)
            elif len(rows) != target:
                raise FanFormatError("matrices have different row counts", lineno)
            mats.append(rows)
        else:
            raise FanFormatError(f"unknown keyword {toks[0]!r}", lineno)
    if len(mats) != len(cones) or not cones:
        raise FanFormatError("every cone needs a matrix line", len(text.splitlines()))
    fan = make_fan(dim, cones)
    if len(fan.cones) != len(cones):
        raise FanFormatError("only maximal cones may be listed", len(text.splitlines()))
    v = fan_validate(fan)
    if v is not None:
        raise FanError(f"not a fan: {v}")
    by_gens = {c.generators: m for c, m in zip(cones, mats)}
    return make_bmap(fan, [by_gens[c.generators] for c in fan.cones], target)
