"""Layer-cell detection by key-pairs, over every valid near staircase of a given size.

For each shape with one layer (or a mixed NW/SE pair) this counts the biwords
of bounded multiplicity whose support class disagrees with the Bruhat test.

    python3 scripts/bijection_sweep.py --n 5 --max-mult 3
"""

import argparse
import time
from itertools import combinations

from skyline.cli import bijection_table
from skyline.core import NearStaircase


def shapes(n, max_cells):
    labels = range(1, n)
    subsets = [c for k in range(max_cells + 1) for c in combinations(labels, k)]
    for nw in subsets:
        for se in subsets:
            if not 0 < len(nw) + len(se) <= max_cells:
                continue
            try:
                yield NearStaircase(n, nw=nw, se=se)
            except ValueError:
                continue


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--max-mult", type=int, default=3)
    ap.add_argument("--max-cells", type=int, default=2, help="layer cells per shape")
    args = ap.parse_args()

    total_bad = 0
    print(f"{'nw':<10} {'se':<10} {'biwords':>8} {'layer':>7} {'bad':>5} {'sec':>7}")
    for shape in shapes(args.n, args.max_cells):
        t0 = time.perf_counter()
        table = bijection_table(shape, args.max_mult)
        dt = time.perf_counter() - t0
        count = sum(r["biwords"] for r in table.values())
        hits = sum(r["condition"] for r in table.values())
        bad = sum(r["mismatches"] for r in table.values())
        total_bad += bad
        print(f"{str(list(shape.nw)):<10} {str(list(shape.se)):<10} {count:>8} {hits:>7} {bad:>5} {dt:>7.2f}")
    print("PASS" if total_bad == 0 else f"FAIL {total_bad} mismatches")
    return 0 if total_bad == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
