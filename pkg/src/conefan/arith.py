"""Exact integer and rational linear algebra.

Vectors are tuples of ``int``; matrices are tuples of row tuples. Rationals
are :class:`fractions.Fraction`. Nothing in this module touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

IntVec = tuple[int, ...]
IntMat = tuple[IntVec, ...]


class ArithError(ValueError):
    pass


class LinealityError(ArithError):
    """The cone described by the halfspaces contains a line."""

    def __init__(self, direction: IntVec):
        super().__init__(f"lineality detected along {direction}")
        self.direction = direction


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vec_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> IntVec:
    """Divide ``v`` by the positive gcd of its entries."""
    g = vec_gcd(v)
    if g == 0:
        raise ArithError("not a ray direction: zero vector")
    return tuple(x // g for x in v)


def canonical_normal(v: Sequence[int]) -> IntVec:
    """Primitive normal with first nonzero entry positive (one per hyperplane)."""
    p = primitive(v)
    for x in p:
        if x:
            return p if x > 0 else tuple(-y for y in p)
    return p


def clear_denominators(x: Sequence) -> IntVec:
    """Positive multiple of a rational vector with integer entries."""
    d = 1
    for q in x:
        d = lcm(d, Fraction(q).denominator)
    return tuple(int(Fraction(q) * d) for q in x)


def identity(n: int) -> IntMat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def matvec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in m)


def _rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    if not a:
        return a, pivots
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return _int_rank([tuple(r) for r in rows])


def _int_rank(rows: list[tuple]) -> int:
    # fraction-free elimination; integer inputs only
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    if any(not isinstance(x, int) for r in a for x in r):
        return len(_rref(a)[1])
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, len(a)):
            f = a[i][c]
            if f:
                a[i] = [p * x - f * y for x, y in zip(a[i], a[r])]
                g = vec_gcd(a[i])
                if g > 1:
                    a[i] = [x // g for x in a[i]]
        r += 1
        if r == len(a):
            break
    return r


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[IntVec]:
    """Integer basis (primitive vectors) of {x : rows . x = 0}, canonical via RREF."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -red[r][f]
        basis.append(primitive(clear_denominators(x)))
    return basis


def solve_linear(a: Sequence[Sequence], b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Some exact solution of ``a x = b`` (free variables set to 0), or None."""
    if not a:
        return None if any(b) else ()
    ncols = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = _rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return tuple(x)


def inverse(m: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise ArithError("singular matrix")
    return tuple(tuple(row[n:]) for row in red)


def determinant(m: Sequence[Sequence[int]]) -> int:
    # Bareiss
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMat, IntMat, IntMat]:
    """Return ``(U, S, V)`` with ``U m V = S``, U and V unimodular, S diagonal
    with nonnegative entries each dividing the next."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    s = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        s[dst] = [a + q * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in s:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return tuple(map(tuple, u)), tuple(map(tuple, s)), tuple(map(tuple, v))
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = s[t][t]
            clean = True
            for i in range(t + 1, rows):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // p))
                    clean = clean and s[i][t] == 0
            for j in range(t + 1, cols):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // p))
                    clean = clean and s[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if s[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return tuple(map(tuple, u)), tuple(map(tuple, s)), tuple(map(tuple, v))


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    _, s, _ = smith_normal_form(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))]


def extreme_rays(halfspaces: Sequence[Sequence[int]], dim: int) -> list[IntVec]:
    """Primitive extreme rays of the pointed cone {x : a.x >= 0 for all a}.

    Double description: constraints are deduplicated and inserted in
    lexicographic order. Raises :class:`LinealityError` if the cone has a line.
    """
    cons = sorted({primitive(a) for a in halfspaces if any(a)})
    line = nullspace(cons, dim) if cons else nullspace([], dim)
    if line:
        raise LinealityError(line[0])

    # initial simplicial cone from the first dim independent constraints
    basis: list[int] = []
    for i, a in enumerate(cons):
        if _int_rank([cons[j] for j in basis] + [a]) > len(basis):
            basis.append(i)
            if len(basis) == dim:
                break
    binv = inverse([cons[i] for i in basis])
    # columns of binv are the rays; ray k is tight on every basis row but k
    rays: list[IntVec] = []
    tight: list[frozenset[int]] = []
    for k in range(dim):
        col = clear_denominators([binv[r][k] for r in range(dim)])
        rays.append(primitive(col))
        tight.append(frozenset(basis[j] for j in range(dim) if j != k))

    inserted = set(basis)
    for idx, a in enumerate(cons):
        if idx in inserted:
            continue
        vals = [dot(a, r) for r in rays]
        pos = [i for i, x in enumerate(vals) if x > 0]
        neg = [i for i, x in enumerate(vals) if x < 0]
        if not neg:
            tight = [z | {idx} if vals[i] == 0 else z for i, z in enumerate(tight)]
            inserted.add(idx)
            continue
        new_rays = []
        new_tight = []
        for i, x in enumerate(vals):
            if x >= 0:
                new_rays.append(rays[i])
                new_tight.append(tight[i] | {idx} if x == 0 else tight[i])
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if len(common) < dim - 2:
                    continue
                if any(
                    r != p and r != q and common <= tight[r] for r in range(len(rays))
                ):
                    continue
                combo = [vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])]
                new_rays.append(primitive(combo))
                new_tight.append(common | {idx})
        rays, tight = new_rays, new_tight
        inserted.add(idx)
    return sorted(set(rays))
