"""Abstract simplicial complexes of fans, B-homeomorphisms and the freeness
decision procedures.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .arith import IntVec, inverse, matmul, matvec, primitive, rank, smith_normal_form, transpose
from .bmap import BMap, RangeContainmentError, image_fan, linearizing_fan, refine_along
from .fan import (
    Cone,
    Fan,
    _fmt_vec,
    _parse_vec,
    desingularize,
    fan_validate,
    format_fan,
    make_fan,
    parse_fan,
    same_support,
    stellar_subdivide,
    support_covers_space,
    uncovered_point,
    witness_outside_support,
)
from .terms import Term, max_var


class CombinatError(ValueError):
    pass


# --------------------------------------------------------------- complexes


@dataclass(frozen=True)
class AbstractComplex:
    vertices: tuple[IntVec, ...]
    facets: frozenset[frozenset[IntVec]]  # maximal simplices

    @property
    def simplices(self) -> set[frozenset[IntVec]]:
        out = {frozenset()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(frozenset(s) for s in itertools.combinations(sorted(f), k))
        return out


def abstract_complex(f: Fan) -> AbstractComplex:
    facets = frozenset(frozenset(c.generators) for c in f.cones if c.generators)
    verts = tuple(sorted({v for s in facets for v in s}))
    return AbstractComplex(verts, facets)


@dataclass(frozen=True)
class ComplexIso:
    pairs: tuple[tuple[IntVec, IntVec], ...]  # sorted by source vertex

    @property
    def mapping(self) -> dict[IntVec, IntVec]:
        return dict(self.pairs)

    def inverse(self) -> "ComplexIso":
        return ComplexIso(tuple(sorted((b, a) for a, b in self.pairs)))


def _joint_colors(cxs: Sequence[AbstractComplex], rounds: int = 3) -> list[dict[IntVec, int]]:
    """Isomorphism-invariant vertex colours by iterated refinement, numbered
    consistently across all the given complexes."""
    stars = []
    for cx in cxs:
        star: dict[IntVec, list[frozenset]] = {v: [] for v in cx.vertices}
        for s in cx.facets:
            for v in s:
                star[v].append(s)
        stars.append(star)
    sigs = [{v: tuple(sorted(len(s) for s in st[v])) for v in st} for st in stars]
    for _ in range(rounds + 1):
        table = {c: i for i, c in enumerate(sorted({c for sg in sigs for c in sg.values()}))}
        colors = [{v: table[c] for v, c in sg.items()} for sg in sigs]
        sigs = [
            {
                v: (col[v], tuple(sorted(tuple(sorted(col[u] for u in s if u != v)) for s in st[v])))
                for v in st
            }
            for st, col in zip(stars, colors)
        ]
    return colors


def complex_isomorphic(a: AbstractComplex, b: AbstractComplex) -> Optional[ComplexIso]:
    """Lexicographically least vertex bijection carrying facets onto facets."""
    if len(a.vertices) != len(b.vertices) or len(a.facets) != len(b.facets):
        return None
    if Counter(map(len, a.facets)) != Counter(map(len, b.facets)):
        return None
    sa, sb = _joint_colors([a, b])
    if Counter(sa.values()) != Counter(sb.values()):
        return None

    def nbrs(cx):
        out = {v: set() for v in cx.vertices}
        for s in cx.facets:
            for u in s:
                out[u] |= s - {u}
        return out

    na, nb = nbrs(a), nbrs(b)
    facets_b = b.facets
    star_a: dict[IntVec, list[frozenset]] = {v: [] for v in a.vertices}
    for s in a.facets:
        for v in s:
            star_a[v].append(s)
    order = list(a.vertices)
    assign: dict[IntVec, IntVec] = {}
    used: set[IntVec] = set()

    def consistent(v: IntVec, w: IntVec) -> bool:
        for u, x in assign.items():
            if (u in na[v]) != (x in nb[w]):
                return False
        for s in star_a[v]:
            if all(u in assign or u == v for u in s):
                img = frozenset(assign.get(u, w) for u in s)
                if img not in facets_b:
                    return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in b.vertices:
            if w in used or sa[v] != sb[w] or not consistent(v, w):
                continue
            assign[v] = w
            used.add(w)
            if search(k + 1):
                return True
            del assign[v]
            used.discard(w)
        return False

    if not search(0):
        return None
    iso = ComplexIso(tuple(sorted(assign.items())))
    if {frozenset(assign[u] for u in s) for s in a.facets} != set(facets_b):
        return None
    return iso


# ----------------------------------------------------------- B-homeomorphisms


def _basis_completion(gens: Sequence[IntVec], n: int) -> list[IntVec]:
    """Vectors completing the rows of ``gens`` to a basis of Z^n."""
    if len(gens) == n:
        return []
    if not gens:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    u, s, v = smith_normal_form(gens)
    if any(s[i][i] != 1 for i in range(len(gens))):
        raise CombinatError("generators do not extend to a lattice basis")
    winv = inverse(v)
    return [tuple(int(q) for q in winv[i]) for i in range(len(gens), n)]


def synthesize_bhomeo(delta: Fan, nabla: Fan, iso: ComplexIso) -> BMap:
    """Cone-wise linear map sending each ray of ``delta`` to its iso image."""
    mp = iso.mapping
    n, d = delta.ambient_dim, nabla.ambient_dim
    mats = []
    for c in delta.cones:
        if not c.generators:
            mats.append(tuple((0,) * n for _ in range(d)))
            continue
        try:
            images = [mp[w] for w in c.generators]
        except KeyError as e:
            raise CombinatError(f"iso misses the ray {_fmt_vec(e.args[0])}") from None
        if rank(images) < len(images):
            raise CombinatError(f"images of {c} are linearly dependent")
        rest = _basis_completion(list(c.generators), n)
        basis = list(c.generators) + rest
        targets = images + [r if d == n else (0,) * d for r in rest]
        # M B^T = T^T  =>  M = T^T (B^T)^-1
        m = matmul(transpose(targets), inverse(transpose(basis)))
        if any(q.denominator != 1 for row in m for q in row):
            raise CombinatError(f"{c} is not regular; matrix is not integral")
        mats.append(tuple(tuple(int(q) for q in row) for row in m))
    return BMap(n, d, delta, tuple(mats))


@dataclass(frozen=True)
class BhomeoCheck:
    ok: bool
    clause: Optional[str] = None
    detail: str = ""
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"clause ({self.clause}): {self.detail}"


def verify_bhomeo(h: BMap, phi: Fan, psi: Fan) -> BhomeoCheck:
    """Check that ``h`` is a B-homeomorphism of |phi| onto |psi|."""
    def fail(clause, detail, witness=None):
        return BhomeoCheck(False, clause, detail, witness)

    # (a) linearizing regular refinement of phi inside h's fan
    x = same_support(h.domain_fan, phi)
    if x is not None:
        return fail("a", f"domain of h and |phi| differ at {_fmt_vec(x)}", x)
    try:
        delta, labels = refine_along(h, psi)
    except RangeContainmentError as e:
        return fail("c", f"h maps onto {_fmt_vec(e.point)} outside |psi|", e.point)
    if not delta.is_regular():
        return fail("a", "refinement is not regular")

    # (b) lattice primitivity and regularity of images
    images: list[Cone] = []
    vertex_map: dict[IntVec, IntVec] = {}
    for tau, (i, _) in zip(delta.cones, labels):
        m = h.matrices[i]
        ys = [matvec(m, w) for w in tau.generators]
        for w, y in zip(tau.generators, ys):
            if not any(y):
                return fail("b", f"ray {_fmt_vec(w)} maps to 0", w)
            if primitive(y) != y:
                return fail("b", f"ray {_fmt_vec(w)} maps to non-primitive {_fmt_vec(y)}", w)
            vertex_map[w] = y
        if rank(ys) < len(ys):
            return fail("b", f"image of {tau} collapses dimension", tau.generators)
        img = Cone(psi.ambient_dim, tuple(sorted(ys)))
        if img.multiplicity != 1:
            return fail("b", f"image {img} of {tau} is not regular", tau.generators)
        images.append(img)

    # (d) images pairwise meet in common faces, and h is injective on the complex
    if len(set(vertex_map.values())) != len(vertex_map):
        return fail("d", "two rays share an image ray")
    if len({c.generators for c in images}) != len(images):
        return fail("d", "two cones share an image cone")
    img_fan = Fan(psi.ambient_dim, tuple(sorted(images, key=lambda c: c.generators)))
    if len(make_fan(psi.ambient_dim, images).cones) != len(images):
        return fail("d", "an image cone is a face of another image cone")
    v = fan_validate(img_fan)
    if v is not None:
        return fail("d", f"image cones overlap: {v}", v.point)

    # (c) the images subdivide psi
    for d in psi.cones:
        y = uncovered_point(d, img_fan)
        if y is not None:
            return fail("c", f"{_fmt_vec(y)} in |psi| is not in the image", y)
    return BhomeoCheck(True)


# ----------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class Verdict:
    answer: bool
    reason: str  # "covers", "witness" or "dimension"
    n: int
    m: int
    witness: Optional[IntVec] = None
    fan: Optional[Fan] = None

    def __bool__(self) -> bool:
        return self.answer


def decide_free(terms: Sequence[Term], m: int) -> Verdict:
    """Is the l-group generated by the terms free of rank len(terms)?"""
    n = len(terms)
    if n < 1:
        raise CombinatError("at least one term is required")
    for t in terms:
        if max_var(t) > m:
            raise CombinatError(f"term uses more than {m} variables")
    if n > m:
        return Verdict(False, "dimension", n, m)
    theta = image_fan(linearizing_fan(terms, m))
    if support_covers_space(theta):
        if _small_uncovered_point(theta) is not None:
            raise CombinatError("covering fan failed its own re-check")
        return Verdict(True, "covers", n, m, fan=theta)
    x = witness_outside_support(theta)
    if x is None or theta.contains(x):
        raise CombinatError("witness failed its own re-check")
    return Verdict(False, "witness", n, m, witness=x, fan=theta)


def _small_uncovered_point(f: Fan, radius: int = 2) -> Optional[IntVec]:
    """Uncovered lattice point of max-norm <= radius, if any."""
    for x in itertools.product(range(-radius, radius + 1), repeat=f.ambient_dim):
        if any(x) and not f.contains(x):
            return x
    return None


def check_free_basis(terms: Sequence[Term], m: Optional[int] = None) -> Verdict:
    n = len(terms)
    if m is None:
        m = max((max_var(t) for t in terms), default=0)
        m = max(m, n)
    if m != n:
        raise CombinatError(f"{n} terms in {m} variables: counts must agree")
    return decide_free(terms, m)


# ------------------------------------------------------ certificate search


@dataclass(frozen=True)
class Certificate:
    delta: Fan
    nabla: Fan
    iso: ComplexIso


class _Exhausted:
    def __repr__(self) -> str:
        return "BUDGET_EXHAUSTED"

    def __bool__(self) -> bool:
        return False


BUDGET_EXHAUSTED = _Exhausted()


def _ray_order(n: int, k: int) -> list[IntVec]:
    """Primitive vectors of max-norm <= k, by max-norm then lexicographically."""
    out = []
    for x in itertools.product(range(-k, k + 1), repeat=n):
        if any(x) and primitive(x) == x:
            out.append(x)
    return sorted(out, key=lambda v: (max(map(abs, v)), v))


def subdivision_sequence(f: Fan) -> Iterator[Fan]:
    """Distinct regular subdivisions of ``f`` in a fixed order: stage k stars
    at increasing sequences of at most k rays of max-norm <= k, each result
    desingularized."""
    base = desingularize(f)
    seen = {base.cones}
    yield base
    if all(c.dim <= 1 for c in f.cones):
        return  # rays admit no proper subdivision
    done: set[tuple] = set()
    k = 1
    while True:
        rays = [r for r in _ray_order(f.ambient_dim, k) if f.contains(r)]
        for length in range(1, k + 1):
            for seq in itertools.combinations(rays, length):
                if seq in done:
                    continue
                done.add(seq)
                g = base
                for r in seq:
                    g = stellar_subdivide(g, r)
                g = desingularize(g)
                if g.cones not in seen:
                    seen.add(g.cones)
                    yield g
        k += 1


def search_certificate(phi: Fan, psi: Fan, budget: int) -> Union[Certificate, _Exhausted]:
    """Look for regular subdivisions of phi and psi with isomorphic complexes;
    each pair tested costs one unit of budget."""
    left: list[Fan] = []
    right: list[Fan] = []
    gens = [subdivision_sequence(phi), subdivision_sequence(psi)]
    done = [False, False]

    def fill(side: list[Fan], k: int) -> None:
        while not done[k] and len(side) <= diag:
            nxt = next(gens[k], None)
            if nxt is None:
                done[k] = True
            else:
                side.append(nxt)

    tests = 0
    diag = 0
    while tests < budget:
        # pairs (i, j) with i + j = diag, i ascending
        fill(left, 0)
        fill(right, 1)
        if all(done) and diag > len(left) + len(right):
            break  # every pair has been tried
        for i in range(diag + 1):
            if tests >= budget:
                break
            j = diag - i
            if i >= len(left) or j >= len(right):
                continue
            tests += 1
            a, b = left[i], right[j]
            iso = complex_isomorphic(abstract_complex(a), abstract_complex(b))
            if iso is None:
                continue
            h = synthesize_bhomeo(a, b, iso)
            if verify_bhomeo(h, a, b):
                return Certificate(a, b, iso)
        diag += 1
    return BUDGET_EXHAUSTED


def support_dimension_obstruction(phi: Fan, psi: Fan) -> bool:
    """True when the supports have different dimensions, so no subdivisions
    can ever have isomorphic complexes."""
    return phi.dim != psi.dim


# --------------------------------------------------------------- text format


def format_certificate(cert: Certificate) -> str:
    parts = ["# delta", format_fan(cert.delta).rstrip("\n"), "# nabla", format_fan(cert.nabla).rstrip("\n"), "# bijection"]
    parts += [f"map {_fmt_vec(a)} -> {_fmt_vec(b)}" for a, b in cert.iso.pairs]
    return "\n".join(parts) + "\n"


def parse_certificate(text: str) -> Certificate:
    blocks: list[list[str]] = []
    maps = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body.startswith("dim "):
            blocks.append([body])
        elif body.startswith("map "):
            maps.append(body)
        elif body:
            if not blocks:
                raise CombinatError(f"unexpected line {line!r}")
            blocks[-1].append(body)
    if len(blocks) != 2:
        raise CombinatError("a certificate holds exactly two fans")
    delta, nabla = (parse_fan("\n".join(b)) for b in blocks)
    pairs = []
    for i, line in enumerate(maps, 1):
        try:
            src, dst = line[4:].split("->")
        except ValueError:
            raise CombinatError(f"bad map line {line!r}") from None
        pairs.append((_parse_vec(src.strip(), delta.ambient_dim, i), _parse_vec(dst.strip(), nabla.ambient_dim, i)))
    return Certificate(delta, nabla, ComplexIso(tuple(sorted(pairs))))
