"""Slow, independent reference computations used by the tests.

Nothing here imports the package's linear algebra: elimination is redone
from scratch over Fraction so that a bug in conefan.arith cannot hide itself.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional, Sequence


def solve_columns(cols: Sequence[Sequence], y: Sequence) -> Optional[list[Fraction]]:
    """lam with sum lam_i * cols[i] == y, or None. cols must be independent."""
    n, k = len(y), len(cols)
    a = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(y[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [u - f * v for u, v in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][k] != 0 for i in range(r, n)):
        return None
    lam = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        lam[c] = a[i][k]
    return lam


def rank_of(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    a = [[Fraction(v) for v in r] for r in rows]
    r = 0
    for c in range(len(a[0])):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            f = a[i][c] / a[r][c]
            a[i] = [u - f * v for u, v in zip(a[i], a[r])]
        r += 1
    return r


def det(m: Sequence[Sequence[int]]) -> int:
    """Leibniz formula; fine for the 3x3 sizes used here."""
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def in_cone(gens: Sequence[Sequence[int]], x: Sequence) -> bool:
    if not any(x):
        return True
    if not gens:
        return False
    lam = solve_columns(gens, x)
    return lam is not None and all(v >= 0 for v in lam)


def box_parallelepiped(gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Nonzero integer points sum lam_i g_i with 0 <= lam_i < 1, by scanning
    the bounding box."""
    n = len(gens[0])
    lo = [sum(min(0, g[k]) for g in gens) for k in range(n)]
    hi = [sum(max(0, g[k]) for g in gens) for k in range(n)]
    out = []
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not any(x):
            continue
        lam = solve_columns(gens, x)
        if lam is not None and all(0 <= v < 1 for v in lam):
            out.append(x)
    return out


def in_positive_hull(vectors: Sequence[Sequence[int]], y: Sequence) -> Optional[list[Fraction]]:
    """Nonnegative weights (one per vector) with sum w_i v_i == y, or None.

    By Caratheodory it is enough to try linearly independent subsets."""
    if not any(y):
        return [Fraction(0)] * len(vectors)
    idx = [i for i, v in enumerate(vectors) if any(v)]
    for k in range(1, len(y) + 1):
        for sub in itertools.combinations(idx, k):
            cols = [vectors[i] for i in sub]
            if rank_of(cols) < k:
                continue
            lam = solve_columns(cols, y)
            if lam is not None and all(v >= 0 for v in lam):
                w = [Fraction(0)] * len(vectors)
                for i, v in zip(sub, lam):
                    w[i] = v
                return w
    return None


def grid(m: int, steps: int = 21, lo: int = -2, hi: int = 2) -> list[tuple[Fraction, ...]]:
    axis = [Fraction(lo) + Fraction(hi - lo) * i / (steps - 1) for i in range(steps)]
    return list(itertools.product(axis, repeat=m))


def random_in_cone(rng, gens: Sequence[Sequence[int]], den: int = 9) -> tuple[Fraction, ...]:
    """A random point of pos(gens), occasionally on a proper face."""
    n = len(gens[0])
    lam = [Fraction(rng.randint(0, 3 * den), den) if rng.random() > 0.2 else Fraction(0) for _ in gens]
    return tuple(sum((l * g[i] for l, g in zip(lam, gens)), Fraction(0)) for i in range(n))
