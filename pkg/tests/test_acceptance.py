"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import json
import time
from itertools import combinations
from pathlib import Path

import pytest

from conftest import SEC3
from skyline.core import NearStaircase
from skyline.crystal import e_op, e_power
from skyline.growth import growth_diagram, label_str
from skyline.kernel import eq2_check, lemma51_check, verify_expansion
from skyline.keypairs import layer_specs
from skyline.rsk import phi
from skyline.ssaf import Ssaf, psi
from skyline.sweeps import (
    coplactic_sweep, demazure_sweep, mixed_shapes, pipeline_sweep, theorem42_sweep,
    theorem44_sweep,
)
from skyline.tableaux import Ssyt

DATA = Path(__file__).resolve().parent.parent / "data"
RESULTS: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str):
    RESULTS[number] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
    assert ok, detail


def test_criterion_1_psi_golden():
    rows = json.loads((DATA / "sec2-ssyt.json").read_text())["rows"]
    P = Ssyt(rows)
    F = psi(P, 5)
    best = min(_timed(lambda: psi(P, 5)) for _ in range(20))
    expected = Ssaf.from_columns(5, {1: [1], 4: [4, 3, 3, 2], 5: [5, 2]})
    ok = (F == expected and F.shape == (1, 0, 0, 4, 2) and F.content == (1, 2, 2, 1, 1)
          and best < 1e-3)
    record(1, ok, f"psi(P) shape {F.shape}, content {F.content}, {best * 1e6:.0f} us")


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_criterion_2_phi_and_growth_golden():
    pair = phi(SEC3, 7)
    g = growth_diagram(SEC3, 7)
    left = " ".join(label_str(p) for p in g.left_labels())
    bottom = " ".join(label_str(p) for p in g.bottom_labels())
    ok = (pair.insertion.shape == (3, 0, 4, 1, 0, 0, 1)
          and pair.recording.shape == (1, 0, 1, 0, 4, 0, 3)
          and left == "0 1 1 1 11 111 211 311 411 4111 4211 4311"
          and bottom == "0 1 2 2 21 22 32 321 331 3311 4311")
    record(2, ok, f"sh(F)={pair.insertion.shape} sh(G)={pair.recording.shape}, labels match")


def test_criterion_3_pipeline_equivalence():
    res = pipeline_sweep()
    record(3, res.ok, res.line())


def test_criterion_4_crystal():
    w = tuple(int(c) for c in "443334344")
    golden = (e_op(3, w) == tuple(int(c) for c in "443334334")
              and e_power(3, w, 2) == tuple(int(c) for c in "443334333"))
    res = coplactic_sweep()
    record(4, golden and res.ok, f"golden e_3 values {'ok' if golden else 'wrong'}; {res.line()}")


def test_criterion_5_single_layer_cell():
    res = theorem42_sweep(4, 3)
    record(5, res.ok, res.line())


def test_criterion_6_mixed_layer():
    shapes = mixed_shapes(5)
    res = theorem44_sweep(shapes, 3)
    names = ", ".join(f"nw={list(s.nw)} se={list(s.se)}" for s in shapes)
    record(6, res.ok and len(shapes) > 0, f"{res.line()} over {names}")


def test_criterion_7_demazure():
    res = demazure_sweep(4, 5)
    record(7, res.ok, res.line())


EXPANSION_JOBS = [
    ("n2-staircase.json", 3), ("n3-staircase.json", 3), ("n4-nw2.json", 3),
    ("n4-se2.json", 3), ("n5-nw3-se4.json", 2),
]


def test_criterion_8_expansion():
    parts, ok = [], True
    for name, D in EXPANSION_JOBS:
        shape = NearStaircase.from_json(json.loads((DATA / "shapes" / name).read_text()))
        report = verify_expansion(shape, D)
        ok = ok and report.ok and len(report.sides) == 5
        parts.append(f"{name[:-5]} D={D} {'ok' if report.ok else 'diverged'}")
    record(8, ok, "; ".join(parts))


def n4_split_specs():
    """Every valid n=4 shape with an SE cell, and every (H, M) with M avoiding p+1."""
    labels = (1, 2, 3)
    subsets = [c for k in range(4) for c in combinations(labels, k)]
    for nw in subsets:
        for se in subsets:
            if not se:
                continue
            try:
                shape = NearStaircase(4, nw=nw, se=se)
            except ValueError:
                continue
            for spec in layer_specs(shape):
                if shape.p + 1 not in spec.M:
                    yield spec


def test_criterion_9_separation_and_split():
    specs = list(n4_split_specs())
    bad = 0
    for D in range(4):
        for spec in specs:
            bad += not lemma51_check(spec, D).ok
            bad += not eq2_check(spec, D).ok
    record(9, bad == 0 and len(specs) > 0, f"{len(specs)} layer choices, D <= 3, {bad} failures")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
