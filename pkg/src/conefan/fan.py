"""Rational simplicial cones and fans.

A :class:`Cone` is the positive hull of linearly independent primitive
integer vectors; a :class:`Fan` stores its maximal cones only, faces are
derived. Everything is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm, prod
from typing import Iterable, Iterator, Optional, Sequence

from .arith import (
    ArithError,
    IntVec,
    LinealityError,
    canonical_normal,
    clear_denominators,
    dot,
    extreme_rays,
    inverse,
    matmul,
    nullspace,
    primitive,
    rank,
    smith_normal_form,
    transpose,
)


class FanError(ValueError):
    pass


class DependentGeneratorsError(FanError):
    def __init__(self, dependency: tuple[Fraction, ...]):
        super().__init__(f"dependent generators; dependency {tuple(map(str, dependency))}")
        self.dependency = dependency


def as_int_point(x: Sequence) -> IntVec:
    """Positive rescaling of a rational point to an integer point (membership
    in any cone is invariant under it)."""
    if all(isinstance(c, int) for c in x):
        return tuple(x)
    return clear_denominators(x)


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    generators: tuple[IntVec, ...]

    @property
    def dim(self) -> int:
        return len(self.generators)

    @cached_property
    def _dual(self) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...], int]:
        # (equations, coordinate rows L, D): x in span iff E x = 0, then
        # the coordinates of x are L x / D.
        n = self.ambient_dim
        g = self.generators
        if not g:
            return tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (), 1
        eqs = tuple(nullspace(g, n))
        gram_inv = inverse(matmul(g, transpose(g)))
        left = matmul(gram_inv, g)
        scale = lcm(*(q.denominator for row in left for q in row))
        rows = tuple(tuple(int(q * scale) for q in row) for row in left)
        return eqs, rows, scale

    @property
    def equations(self) -> tuple[IntVec, ...]:
        return self._dual[0]

    @property
    def facet_normals(self) -> tuple[IntVec, ...]:
        """Row i is >= 0 on the cone and vanishes on every generator but the i-th."""
        return self._dual[1]

    def halfspaces(self) -> list[IntVec]:
        out = list(self.facet_normals)
        for e in self.equations:
            out.append(e)
            out.append(tuple(-c for c in e))
        return out

    def coordinates(self, x: Sequence) -> Optional[tuple[Fraction, ...]]:
        """The lambda with x = sum lambda_i w_i, or None if x is off the span."""
        eqs, rows, scale = self._dual
        if any(dot(e, x) for e in eqs):
            return None
        return tuple(Fraction(dot(r, x)) / scale for r in rows)

    def contains(self, x: Sequence) -> bool:
        p = as_int_point(x)
        eqs, rows, _ = self._dual
        return all(dot(e, p) == 0 for e in eqs) and all(dot(r, p) >= 0 for r in rows)

    def relative_interior_point(self) -> IntVec:
        if not self.generators:
            return (0,) * self.ambient_dim
        return tuple(map(sum, zip(*self.generators)))

    @cached_property
    def multiplicity(self) -> int:
        """Index of the generated sublattice in its saturation (1 iff regular)."""
        if not self.generators:
            return 1
        _, s, _ = smith_normal_form(self.generators)
        return prod(s[i][i] for i in range(self.dim))

    def is_face_of(self, other: "Cone") -> bool:
        return set(self.generators) <= set(other.generators)

    def __str__(self) -> str:
        return "pos(" + ", ".join(_fmt_vec(g) for g in self.generators) + ")"


def _fmt_vec(v: Sequence) -> str:
    return ",".join(str(c) for c in v)


def cone_new(ambient_dim: int, raw_generators: Iterable[Sequence[int]]) -> Cone:
    gens = []
    for v in raw_generators:
        if len(v) != ambient_dim:
            raise FanError(f"generator {tuple(v)} is not in dimension {ambient_dim}")
        if not any(v):
            raise FanError("zero generator is not a ray direction")
        gens.append(tuple(v))
    if rank(gens) < len(gens):
        # dependency coefficients refer to the generators as given
        dep = nullspace(transpose(gens), len(gens))[0]
        raise DependentGeneratorsError(tuple(Fraction(c) for c in dep))
    return Cone(ambient_dim, tuple(sorted(primitive(g) for g in gens)))


def zero_cone(ambient_dim: int) -> Cone:
    return Cone(ambient_dim, ())


def faces(c: Cone) -> list[Cone]:
    out = []
    for k in range(c.dim + 1):
        for sub in itertools.combinations(c.generators, k):
            out.append(Cone(c.ambient_dim, sub))
    return out


def membership(c: Cone, x: Sequence) -> bool:
    return c.contains(x)


# --------------------------------------------------------------------- fans


@dataclass(frozen=True)
class Fan:
    ambient_dim: int
    cones: tuple[Cone, ...]  # maximal cones, sorted

    def contains(self, x: Sequence) -> bool:
        p = as_int_point(x)
        return any(c.contains(p) for c in self.cones)

    def cone_containing(self, x: Sequence) -> Optional[Cone]:
        p = as_int_point(x)
        return next((c for c in self.cones if c.contains(p)), None)

    def all_cones(self) -> list[Cone]:
        seen: dict[tuple, Cone] = {}
        for c in self.cones:
            for f in faces(c):
                seen.setdefault(f.generators, f)
        return [seen[k] for k in sorted(seen, key=lambda g: (len(g), g))]

    @property
    def rays(self) -> list[IntVec]:
        return sorted({g for c in self.cones for g in c.generators})

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cones), default=0)

    def is_regular(self) -> bool:
        return all(c.multiplicity == 1 for c in self.cones)

    def __str__(self) -> str:
        return format_fan(self)


def make_fan(ambient_dim: int, cones: Iterable[Cone]) -> Fan:
    """Fan from cones already known to be compatible: keeps maximal ones only."""
    uniq = {c.generators: c for c in cones}
    keys = sorted(uniq, key=len, reverse=True)
    kept: list[frozenset] = []
    out = []
    for k in keys:
        s = frozenset(k)
        if any(s <= t for t in kept):
            continue
        kept.append(s)
        out.append(uniq[k])
    if not out:
        out = [zero_cone(ambient_dim)]
    return Fan(ambient_dim, tuple(sorted(out, key=lambda c: c.generators)))


@dataclass(frozen=True)
class FanViolation:
    first: Cone
    second: Cone
    point: IntVec

    def __str__(self) -> str:
        return f"{self.first} and {self.second} overlap badly at {_fmt_vec(self.point)}"


def intersect_cones(c: Cone, d: Cone) -> list[IntVec]:
    """Extreme rays of c & d."""
    return extreme_rays(c.halfspaces() + d.halfspaces(), c.ambient_dim)


def fan_validate(f: Fan) -> Optional[FanViolation]:
    """None if every two maximal cones meet in a common face."""
    for c in f.cones:
        if c.ambient_dim != f.ambient_dim:
            return FanViolation(c, c, (0,) * f.ambient_dim)
    for c, d in itertools.combinations(f.cones, 2):
        bad = _bad_overlap(c, d)
        if bad is not None:
            return FanViolation(c, d, bad)
    return None


def _separated(c: Cone, d: Cone) -> bool:
    """Cheap sufficient test that c & d is a common face.

    Keeps generator sets fc, fd with c & d inside pos(fc) & pos(fd). A
    functional h >= 0 on fc and <= 0 on fd cuts both down to h = 0. Once one
    set lies among the other cone's generators the intersection is pos of it.
    Candidates for h are the facet and span normals of both cones."""
    gc, gd = set(c.generators), set(d.generators)
    cands = list(c._dual[1]) + [tuple(-v for v in r) for r in d._dual[1]]
    for e in c._dual[0] + d._dual[0]:
        cands += [tuple(e), tuple(-v for v in e)]
    fc, fd = gc, gd
    while True:
        if fc <= gd or fd <= gc:
            return True
        for h in cands:
            vc = [dot(h, g) for g in fc]
            vd = [dot(h, g) for g in fd]
            if min(vc) >= 0 and max(vd) <= 0 and (max(vc) > 0 or min(vd) < 0):
                fc = {g for g, v in zip(fc, vc) if v == 0}
                fd = {g for g, v in zip(fd, vd) if v == 0}
                break
        else:
            return False


def _bad_overlap(c: Cone, d: Cone) -> Optional[IntVec]:
    shared = set(c.generators) & set(d.generators)
    if _separated(c, d):
        return None
    rays = intersect_cones(c, d)
    if all(r in shared for r in rays):
        return None
    return tuple(map(sum, zip(*rays)))


def fan_from_max_cones(ambient_dim: int, cones: Iterable[Cone]) -> Fan:
    f = make_fan(ambient_dim, cones)
    v = fan_validate(f)
    if v is not None:
        raise FanError(f"not a fan: {v}")
    return f


# --------------------------------------------------------------- regularity


@dataclass(frozen=True)
class RegularityWitness:
    regular: bool
    point: Optional[IntVec] = None
    coefficients: Optional[tuple[Fraction, ...]] = None

    def __bool__(self) -> bool:
        return self.regular


def parallelepiped_points_bruteforce(c: Cone) -> list[tuple[IntVec, tuple[Fraction, ...]]]:
    """All nonzero lattice points of the half-open parallelepiped of ``c``
    (bounding-box scan, each candidate confirmed exactly). Slow; a reference."""
    if not c.generators:
        return []
    eqs, rows, scale = c._dual
    lo = [sum(min(0, g[k]) for g in c.generators) for k in range(c.ambient_dim)]
    hi = [sum(max(0, g[k]) for g in c.generators) for k in range(c.ambient_dim)]
    out = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not any(x):
            continue
        if any(dot(e, x) for e in eqs):
            continue
        lam = [dot(r, x) for r in rows]
        if all(0 <= v < scale for v in lam):
            out.append((x, tuple(Fraction(v, scale) for v in lam)))
    return sorted(out)


def parallelepiped_points(c: Cone) -> list[tuple[IntVec, tuple[Fraction, ...]]]:
    """Same set as the bounding-box scan, but one point per coset of the
    sublattice spanned by the generators, read off the Smith form."""
    if not c.generators:
        return []
    _, s, v = smith_normal_form(c.generators)
    winv = inverse(v)
    basis = [tuple(int(q) for q in winv[i]) for i in range(c.dim)]
    _, rows, scale = c._dual
    out = []
    for coeffs in itertools.product(*(range(s[i][i]) for i in range(c.dim))):
        if not any(coeffs):
            continue
        x = [sum(k * b[j] for k, b in zip(coeffs, basis)) for j in range(c.ambient_dim)]
        lam = [dot(r, x) % scale for r in rows]
        pt = tuple(sum(l * g[j] for l, g in zip(lam, c.generators)) // scale for j in range(c.ambient_dim))
        out.append((pt, tuple(Fraction(l, scale) for l in lam)))
    return sorted(out)


def is_regular(c: Cone) -> RegularityWitness:
    if c.multiplicity == 1:
        return RegularityWitness(True)
    x, lam = _best_witness(c)
    return RegularityWitness(False, x, lam)


def _best_witness(c: Cone) -> tuple[IntVec, tuple[Fraction, ...]]:
    pts = parallelepiped_points(c)
    if not pts:  # would contradict Minkowski; guard against a broken cone
        raise FanError(f"singular cone {c} without parallelepiped point")
    return min(pts, key=lambda p: (sum(p[1]), p[0]))


# ------------------------------------------------------ stellar subdivision


def stellar_subdivide(f: Fan, ray: Sequence[int]) -> Fan:
    r = primitive(ray)
    out = []
    hit = False
    for c in f.cones:
        lam = c.coordinates(r)
        if lam is None or any(v < 0 for v in lam):
            out.append(c)
            continue
        hit = True
        rest = list(c.generators)
        for i, v in enumerate(lam):
            if v > 0:
                gens = rest[:i] + rest[i + 1 :] + [r]
                out.append(Cone(f.ambient_dim, tuple(sorted(gens))))
    if not hit:
        raise FanError(f"ray {_fmt_vec(r)} is outside the support")
    # starring a fan given by maximal cones yields maximal cones again
    uniq = {c.generators: c for c in out}
    return Fan(f.ambient_dim, tuple(uniq[k] for k in sorted(uniq)))


def desingularize(f: Fan) -> Fan:
    """Regular refinement with the same support, by repeated starring."""
    while True:
        singular = [c for c in f.cones if c.multiplicity > 1]
        if not singular:
            return f
        worst = min(singular, key=lambda c: (-c.multiplicity, c.generators))
        x, _ = _best_witness(worst)
        f = stellar_subdivide(f, primitive(x))


# ------------------------------------------------------------ triangulation


@dataclass(frozen=True)
class _Piece:
    constraints: tuple[IntVec, ...]  # a.x >= 0
    rays: tuple[IntVec, ...]


def generator_hrep(n: int, gens: Sequence[Sequence[int]]) -> list[IntVec]:
    """Halfspaces (a.x >= 0) describing pos(gens); gens may be dependent."""
    gens = [tuple(g) for g in gens if any(g)]
    eqs = nullspace(gens, n) if gens else nullspace([], n)
    ineqs: list[IntVec] = []
    if gens:
        # dual cone restricted to span(gens) is pointed; its rays are facet normals
        dual_cons = list(gens)
        for e in eqs:
            dual_cons.append(e)
            dual_cons.append(tuple(-c for c in e))
        ineqs = extreme_rays(dual_cons, n)
    out = list(ineqs)
    for e in eqs:
        out.append(e)
        out.append(tuple(-c for c in e))
    return out


def _pieces_of(n: int, cons: list[IntVec]) -> list[_Piece]:
    try:
        rays = extreme_rays(cons, n)
        return [_Piece(tuple(cons), tuple(rays))] if rays else []
    except LinealityError:
        pass
    out = []
    for signs in itertools.product((1, -1), repeat=n):
        extra = [tuple(s * int(i == j) for j in range(n)) for i, s in enumerate(signs)]
        rays = extreme_rays(cons + extra, n)
        if rays:
            out.append(_Piece(tuple(cons + extra), tuple(rays)))
    return out


def _piece_hyperplanes(n: int, p: _Piece) -> set[IntVec]:
    """Facet hyperplanes of a piece plus hyperplanes cutting out its span."""
    hs = {canonical_normal(e) for e in nullspace(p.rays, n)}
    d = rank(p.rays)
    for a in p.constraints:
        vals = [dot(a, r) for r in p.rays]
        if all(v == 0 for v in vals):
            continue
        tight = [r for r, v in zip(p.rays, vals) if v == 0]
        if rank(tight) == d - 1:
            hs.add(canonical_normal(a))
    return hs


def _split(n: int, p: _Piece, h: IntVec) -> list[_Piece]:
    vals = [dot(h, r) for r in p.rays]
    if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
        return [p]
    out = []
    for a in (h, tuple(-c for c in h)):
        cons = p.constraints + (a,)
        out.append(_Piece(cons, tuple(extreme_rays(cons, n))))
    return out


def triangulate_union(ambient_dim: int, cones: Sequence[Sequence[Sequence[int]]]) -> Fan:
    """Simplicial fan whose support is the union of the given generator-listed
    cones (generators may be dependent, cones may contain lines)."""
    pieces = []
    for gens in cones:
        if not any(any(g) for g in gens):
            continue
        pieces.extend(_pieces_of(ambient_dim, generator_hrep(ambient_dim, gens)))
    return triangulate_pieces(ambient_dim, pieces)


def _crosses(h: IntVec, rays: Iterable[IntVec]) -> bool:
    vals = [dot(h, r) for r in rays]
    return any(v > 0 for v in vals) and any(v < 0 for v in vals)


def _is_face(p: _Piece, rays: Sequence[IntVec]) -> bool:
    """Is pos(rays), a subset of p, a face of p?"""
    tight = [a for a in p.constraints if all(dot(a, r) == 0 for r in rays)]
    face = {r for r in p.rays if all(dot(a, r) == 0 for a in tight)}
    return face == set(rays)


def _meet(n: int, p: _Piece, q: _Piece) -> list[IntVec]:
    """Extreme rays of p & q. Tries to shrink both ray sets with a separating
    constraint first (as for cones); falls back to double description."""
    fp, fq = set(p.rays), set(q.rays)
    cands = list(p.constraints) + [tuple(-c for c in a) for a in q.constraints]
    while fp and fq:
        if fp <= set(q.rays) and _is_face(q, sorted(fp)):
            return sorted(fp)
        if fq <= set(p.rays) and _is_face(p, sorted(fq)):
            return sorted(fq)
        for h in cands:
            vp = [dot(h, r) for r in fp]
            vq = [dot(h, r) for r in fq]
            if min(vp) >= 0 and max(vq) <= 0 and (max(vp) > 0 or min(vq) < 0):
                fp = {r for r, v in zip(fp, vp) if v == 0}
                fq = {r for r, v in zip(fq, vq) if v == 0}
                break
        else:
            return extreme_rays(p.constraints + q.constraints, n)
    return []


def _local_cuts(n: int, pieces: Sequence[_Piece]) -> list[set[IntVec]]:
    """Hyperplanes to cut each piece by so that the cells meet face to face.

    A piece is cut by the hyperplanes of every piece it overlaps (meets in
    more than a common face) that cross it. Then, until nothing changes, a cut
    of one piece crossing the intersection with another is copied over."""
    hyps = [_piece_hyperplanes(n, p) for p in pieces]
    cuts: list[set[IntVec]] = [set() for _ in pieces]
    meets = []
    for i, j in itertools.combinations(range(len(pieces)), 2):
        rays = _meet(n, pieces[i], pieces[j])
        if not rays:
            continue
        meets.append((i, j, rays))
        if _is_face(pieces[i], rays) and _is_face(pieces[j], rays):
            continue
        for a, b in ((i, j), (j, i)):
            cuts[a] |= {h for h in hyps[b] if _crosses(h, pieces[a].rays)}
    changed = True
    while changed:
        changed = False
        for i, j, rays in meets:
            for a, b in ((i, j), (j, i)):
                new = {h for h in cuts[b] - cuts[a] if _crosses(h, rays)}
                if new:
                    cuts[a] |= new
                    changed = True
    return cuts


def triangulate_pieces(n: int, pieces: Sequence[_Piece]) -> Fan:
    pieces = list({p.rays: p for p in pieces if p.rays}.values())
    cuts = _local_cuts(n, pieces)
    pool: set[IntVec] = set()
    cells: set[frozenset[IntVec]] = set()
    for p, hs in zip(pieces, cuts):
        pool |= _piece_hyperplanes(n, p) | hs
        work = [p]
        for h in sorted(hs):
            work = [q for w in work for q in _split(n, w, h)]
        cells.update(frozenset(w.rays) for w in work if w.rays)
    tri = _Pulling(n, sorted(pool))
    simplices: list[Cone] = []
    for cell in sorted(cells, key=lambda s: sorted(s)):
        for s in tri.pull(cell):
            simplices.append(Cone(n, tuple(sorted(s))))
    return make_fan(n, simplices)


class _Pulling:
    """Pulling triangulation of arrangement cells; each face is triangulated
    from its lexicographically least ray, so shared faces agree."""

    def __init__(self, n: int, hyperplanes: list[IntVec]):
        self.n = n
        self.hyper = hyperplanes
        self.memo: dict[frozenset, list[frozenset]] = {}

    @lru_cache(maxsize=None)
    def _rank(self, rays: frozenset) -> int:
        return rank(sorted(rays))

    def facets(self, cell: frozenset) -> list[frozenset]:
        d = self._rank(cell)
        out = set()
        for h in self.hyper:
            vals = {r: dot(h, r) for r in cell}
            if all(v >= 0 for v in vals.values()) or all(v <= 0 for v in vals.values()):
                tight = frozenset(r for r, v in vals.items() if v == 0)
                if len(tight) < len(cell) and self._rank(tight) == d - 1:
                    out.add(tight)
        return sorted(out, key=lambda s: sorted(s))

    def pull(self, cell: frozenset) -> list[frozenset]:
        if cell in self.memo:
            return self.memo[cell]
        if self._rank(cell) == len(cell):
            res = [cell]
        else:
            apex = min(cell)
            res = []
            for facet in self.facets(cell):
                if apex in facet:
                    continue
                res.extend(s | {apex} for s in self.pull(facet))
        self.memo[cell] = res
        return res


# ------------------------------------------------------------------ support


def support_covers_space(f: Fan) -> bool:
    n = f.ambient_dim
    if n == 1:
        return {c.generators for c in f.cones} >= {((1,),), ((-1,),)}
    if any(c.dim != n for c in f.cones):
        return False
    ridges: dict[tuple, int] = {}
    for c in f.cones:
        for i in range(n):
            r = c.generators[:i] + c.generators[i + 1 :]
            ridges[r] = ridges.get(r, 0) + 1
    return all(k == 2 for k in ridges.values())


def lattice_shells(n: int) -> Iterator[IntVec]:
    """Nonzero integer points by increasing max-norm, lexicographic per shell."""
    k = 1
    while True:
        for x in itertools.product(range(-k, k + 1), repeat=n):
            if max(abs(c) for c in x) == k:
                yield x
        k += 1


def witness_outside_support(f: Fan) -> Optional[IntVec]:
    if support_covers_space(f):
        return None
    for x in lattice_shells(f.ambient_dim):
        if not f.contains(x):
            return x
    return None  # unreachable


# --------------------------------------------------------------- text format


def format_fan(f: Fan) -> str:
    lines = [f"dim {f.ambient_dim}"]
    for c in f.cones:
        lines.append(" ".join(["cone"] + [_fmt_vec(g) for g in c.generators]))
    return "\n".join(lines) + "\n"


class FanFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_vec(tok: str, n: int, lineno: int) -> IntVec:
    try:
        v = tuple(int(x) for x in tok.split(","))
    except ValueError:
        raise FanFormatError(f"bad integer vector {tok!r}", lineno) from None
    if len(v) != n:
        raise FanFormatError(f"vector {tok!r} is not in dimension {n}", lineno)
    return v


def parse_fan_lines(lines: Sequence[tuple[int, str]]) -> tuple[int, list[tuple[int, list[str]]]]:
    """Shared tokenizer for fan-like files: returns (dim, [(lineno, tokens)])."""
    dim = None
    body = []
    for lineno, raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if dim is None:
            if toks[0] != "dim" or len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
                raise FanFormatError("expected 'dim <n>'", lineno)
            dim = int(toks[1])
            continue
        body.append((lineno, toks))
    if dim is None:
        raise FanFormatError("missing 'dim <n>' line", len(lines))
    return dim, body


def parse_fan(text: str, validate: bool = True) -> Fan:
    dim, body = parse_fan_lines(list(enumerate(text.splitlines(), 1)))
    cones = []
    for lineno, toks in body:
        if toks[0] != "cone":
            raise FanFormatError(f"unknown keyword {toks[0]!r}", lineno)
        gens = [_parse_vec(t, dim, lineno) for t in toks[1:]]
        try:
            cones.append(cone_new(dim, gens))
        except (FanError, ArithError) as e:
            raise FanFormatError(str(e), lineno) from None
    f = make_fan(dim, cones)
    if validate:
        v = fan_validate(f)
        if v is not None:
            raise FanError(f"not a fan: {v}")
    return f


def cone_piece(c: Cone) -> _Piece:
    return _Piece(tuple(c.halfspaces()), c.generators)


def piece_contains(p: _Piece, x: Sequence[int]) -> bool:
    return all(dot(a, x) >= 0 for a in p.constraints)


def uncovered_point(c: Cone, f: Fan) -> Optional[IntVec]:
    """A point of ``c`` outside ``|f|``, or None when ``c`` lies in ``|f|``."""
    if not c.generators:
        return None
    n = c.ambient_dim
    mine = set(c.generators)
    if any(mine <= set(d.generators) for d in f.cones):
        return None  # c is a face of a cone of f
    parts = []
    for d in f.cones:
        # meeting c in a proper common face only: lower dimensional, and
        # the remaining parts must cover c on their own
        if _separated(c, d) and not all(d.contains(g) for g in c.generators):
            continue
        cons = tuple(c.halfspaces() + d.halfspaces())
        rays = extreme_rays(cons, n)
        if rays:
            parts.append(_Piece(cons, tuple(rays)))
    tri = triangulate_pieces(n, [cone_piece(c)] + parts)
    for s in tri.cones:
        x = s.relative_interior_point()
        if not any(piece_contains(p, x) for p in parts):
            return x
    return None


def same_support(f: Fan, g: Fan) -> Optional[IntVec]:
    """None if |f| = |g|, else a point in exactly one of them."""
    for a, b in ((f, g), (g, f)):
        for c in a.cones:
            x = uncovered_point(c, b)
            if x is not None:
                return x
    return None


def orthant_fan(n: int) -> Fan:
    cones = []
    for signs in itertools.product((1, -1), repeat=n):
        gens = [tuple(s * int(i == j) for j in range(n)) for i, s in enumerate(signs)]
        cones.append(Cone(n, tuple(sorted(gens))))
    return make_fan(n, cones)
