"""Seeded random instances: terms, cones, fans, points, unimodular matrices."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .arith import IntMat, determinant, primitive, rank
from .fan import Cone, Fan, triangulate_union
from .terms import Add, Join, Meet, Neg, Sub, Term, Var, Zero


def random_term(rng: random.Random, m: int, depth: int) -> Term:
    if depth <= 1 or rng.random() < 0.2:
        return Zero() if rng.random() < 0.1 else Var(rng.randint(1, m))
    kind = rng.choice(["neg", "add", "sub", "join", "meet", "join", "meet"])
    if kind == "neg":
        return Neg(random_term(rng, m, depth - 1))
    cls = {"add": Add, "sub": Sub, "join": Join, "meet": Meet}[kind]
    return cls(random_term(rng, m, depth - 1), random_term(rng, m, depth - 1))


def random_point(rng: random.Random, n: int, bound: int = 5, den: int = 7) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den)) for _ in range(n))


def random_generators(rng: random.Random, n: int, t: int, bound: int = 6) -> list[tuple[int, ...]]:
    """t linearly independent primitive vectors with entries in [-bound, bound]."""
    while True:
        gens = [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(t)]
        if all(any(g) for g in gens) and rank(gens) == t:
            gens = sorted({primitive(g) for g in gens})
            if len(gens) == t:
                return gens


def random_cone(rng: random.Random, n: int, bound: int = 6) -> Cone:
    t = rng.randint(1, n)
    return Cone(n, tuple(random_generators(rng, n, t, bound)))


def random_fan(rng: random.Random, n: Optional[int] = None, bound: int = 4, pieces: int = 3) -> Fan:
    """Fan whose support is a union of a few random simplicial cones."""
    n = n or rng.randint(1, 3)
    cones = [random_generators(rng, n, rng.randint(1, n), bound) for _ in range(rng.randint(1, pieces))]
    return triangulate_union(n, cones)


def random_unimodular(rng: random.Random, n: int, bound: int = 3) -> IntMat:
    """Product of elementary integer matrices with entries kept in [-bound, bound]."""
    while True:
        m = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(rng.randint(1, 2 * n)):
            i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
            if i == j:
                m = [[-v for v in row] for row in m]
                continue
            c = rng.choice([-1, 1])
            cand = [row[:] for row in m]
            cand[i] = [a + c * b for a, b in zip(cand[i], cand[j])]
            if max(abs(v) for row in cand for v in row) <= bound:
                m = cand
        if rng.random() < 0.5 and n > 1:
            i, j = rng.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
        if abs(determinant(m)) == 1:
            return tuple(map(tuple, m))
