"""Cone counts and multiplicities before/after desingularizing random fans.

    python3 scripts/desingularize_stats.py --fans 50 --bound 3 --seed 7
"""

import argparse
import random
import statistics
import time

from conefan.fan import desingularize
from conefan.sampling import random_fan


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fans", type=int, default=50)
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--dim", type=int, default=None, help="ambient dim (default: random 1..3)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = []
    for k in range(args.fans):
        f = random_fan(rng, args.dim, bound=args.bound)
        t0 = time.perf_counter()
        g = desingularize(f)
        dt = time.perf_counter() - t0
        mult = max((c.multiplicity for c in f.cones if c.generators), default=1)
        rows.append((f.ambient_dim, len(f.cones), mult, len(g.cones), dt))
        print(f"{k:3d}  dim {f.ambient_dim}  cones {len(f.cones):3d} -> {len(g.cones):4d}  max mult {mult:5d}  {dt:6.2f}s")

    growth = [after / before for _, before, _, after, _ in rows]
    print(f"\nmedian cone growth {statistics.median(growth):.2f}x, "
          f"max {max(growth):.1f}x, total time {sum(r[4] for r in rows):.1f}s")


if __name__ == "__main__":
    main()
