"""Run every exhaustive sweep and expansion job, printing one timed line each.

    python3 scripts/run_acceptance_matrix.py [--json results.json]
"""

import argparse
import json
import time
from pathlib import Path

from skyline.core import NearStaircase
from skyline.kernel import verify_expansion
from skyline.sweeps import (
    coplactic_sweep, demazure_sweep, pipeline_sweep, theorem42_sweep, theorem44_sweep,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def expansion_jobs():
    config = json.loads((DATA / "acceptance-batch.json").read_text())
    for job in config["jobs"]:
        if job["run"] == "verify":
            shape = NearStaircase.from_json(json.loads((DATA / job["shape"]).read_text()))
            yield job["shape"], shape, job["degree"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", help="write the rows to this file")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    rows = []

    def timed(name, fn):
        t0 = time.perf_counter()
        ok, detail = fn()
        dt = time.perf_counter() - t0
        rows.append({"name": name, "ok": ok, "detail": detail, "seconds": round(dt, 3)})
        print(f"{'PASS' if ok else 'FAIL'} {name:<40} {dt:8.2f}s  {detail}")

    for name, sweep in [
        ("pipeline", pipeline_sweep), ("coplactic", coplactic_sweep),
        ("single layer cell", theorem42_sweep), ("mixed layer", theorem44_sweep),
        ("demazure", demazure_sweep),
    ]:
        timed(name, lambda sweep=sweep: (lambda r: (r.ok, r.line()))(sweep()))
    for label, shape, D in expansion_jobs():
        def job(shape=shape, D=D):
            rep = verify_expansion(shape, D, threads=args.threads)
            return rep.ok, f"{len(rep.sides['kernel'])} monomials"
        timed(f"expansion {label} D={D}", job)

    if args.json:
        Path(args.json).write_text(json.dumps(rows, indent=1) + "\n")
    return 0 if all(r["ok"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
