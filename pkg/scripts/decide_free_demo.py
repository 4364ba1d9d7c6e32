"""Run the freeness decision on a handful of term tuples, then on random
unimodular recombinations of the coordinates and of a few non-free tuples.

    python3 scripts/decide_free_demo.py --random 10 --seed 3
"""

import argparse
import random

from conefan.combinat import decide_free
from conefan.sampling import random_unimodular
from conefan.terms import linear_term, parse_term, print_term, split_terms

FIXED = [
    ("x1, x2", 2),
    ("x1 v -x1", 1),
    ("x1 v x2, x1 ^ x2", 2),
    ("x1 + x2, x2", 2),
    ("x1, x1 v x2", 2),
    ("x1 v -x1, x2", 2),
    ("(x1 v 0) - (x2 v 0), x1 ^ x2", 2),
    ("x1, x2, x1 + x2", 2),
]


def show(label, terms, m):
    v = decide_free(terms, m)
    if v.answer:
        tail = f"YES ({len(v.fan.cones)} cones cover R^{v.n})"
    elif v.reason == "dimension":
        tail = "NO (more terms than variables)"
    else:
        tail = f"NO, witness {v.witness}"
    print(f"{label:40s} {tail}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--random", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for text, m in FIXED:
        show(text, [parse_term(t, m) for t in split_terms(text)], m)

    rng = random.Random(args.seed)
    print()
    for _ in range(args.random):
        n = rng.randint(1, 3)
        u = random_unimodular(rng, n)
        ts = [linear_term(row) for row in u]
        show(", ".join(print_term(t) for t in ts)[:40], ts, n)


if __name__ == "__main__":
    main()
