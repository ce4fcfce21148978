"""Time each side of the kernel expansion check as the degree bound grows.

    python3 scripts/kernel_scaling.py data/shapes/n4-nw2.json --max-degree 4 --threads 4
"""

import argparse
import json
from pathlib import Path

from skyline.core import NearStaircase
from skyline.kernel import verify_expansion


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("shape", help="near staircase JSON file")
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    shape = NearStaircase.from_json(json.loads(Path(args.shape).read_text()))
    status = 0
    header = None
    for D in range(args.max_degree + 1):
        rep = verify_expansion(shape, D, threads=args.threads)
        if header is None:
            header = list(rep.timings)
            print("D  ok    monomials " + " ".join(f"{h:>18}" for h in header))
        cols = " ".join(f"{rep.timings[h]:>17.3f}s" for h in header)
        print(f"{D:<2} {str(rep.ok):<5} {len(rep.sides['kernel']):>9} {cols}")
        status |= not rep.ok
    return status


if __name__ == "__main__":
    raise SystemExit(main())
