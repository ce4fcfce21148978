"""Exhaustive small-range sweeps shared by the acceptance suite and the scripts.

Each sweep returns a ``SweepResult`` counting the cases examined and the
counterexamples found, keeping the first few for inspection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bruhat import simple_swap
from .core import Biword, NearStaircase, all_biwords, biwords_on_cells, compositions
from .crystal import unmatched, upsilon, upsilon_ssaf
from .growth import phi_by_growth
from .keypairs import (
    SupportClass, classify_biword, key_pair_of, nw_condition, nw_se_condition_b, se_condition,
)
from .polynomial import (
    Polynomial, atom_operator, atom_polynomial, demazure_pi, key_polynomial,
    key_polynomial_operator,
)
from .rsk import phi, phi_inverse

SMALL_BIWORDS = ((3, 4), (4, 3))  # (alphabet, max biletters)


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, example=None):
        self.cases += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 5:
                self.examples.append(example)

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def line(self) -> str:
        return f"{self.name}: {self.cases} cases, {self.failures} failures"


def small_biwords(ranges=SMALL_BIWORDS) -> Iterator[tuple[Biword, int]]:
    for n, m in ranges:
        for w in all_biwords(n, m):
            yield w, n


def pipeline_sweep(ranges=SMALL_BIWORDS) -> SweepResult:
    res = SweepResult("growth = insertion, inverse round trip")
    for w, n in small_biwords(ranges):
        pair = phi(w, n)
        res.record(phi_by_growth(w, n) == pair and phi_inverse(pair) == w, (w, n))
    return res


def coplactic_sweep(ranges=((3, 4),)) -> SweepResult:
    """``phi(upsilon_r w) = (upsilon_r F, G)`` for every ``r`` with something to saturate."""
    res = SweepResult("coplactic property")
    for w, n in small_biwords(ranges):
        pair = phi(w, n)
        for r in range(1, n):
            if not unmatched(r, w.bottom)[1]:
                continue
            out = phi(upsilon(r, w), n)
            ok = out.recording == pair.recording and out.insertion == upsilon_ssaf(r, pair.insertion)
            res.record(ok, (w, r))
    return res


def single_cell_shapes(n: int) -> Iterator[tuple[str, int, NearStaircase]]:
    """Every single layer cell, once as an NW label and once as an SE label."""
    for r in range(1, n):
        yield "nw", r, NearStaircase(n, nw=(r,))
        yield "se", r, NearStaircase(n, se=(n - r,))


def theorem42_sweep(n: int = 4, max_mult: int = 3) -> SweepResult:
    """Support uses the layer cell iff the NW form holds iff the SE form holds."""
    res = SweepResult(f"single layer cell, n={n}, multiplicity <= {max_mult}")
    for variant, r, shape in single_cell_shapes(n):
        cell = shape.layer_cell(r)
        for w in biwords_on_cells(shape.cells(), max_mult):
            nu, beta = key_pair_of(w, n)
            uses = cell in w.cells()
            b = nw_condition(nu, beta, (r,))
            c = se_condition(nu, beta, (r,), n)
            res.record(uses == b == c, (variant, r, w))
    return res


def mixed_shapes(n: int = 5) -> list[NearStaircase]:
    """All shapes with one NW and one SE cell satisfying the ordering rules."""
    out = []
    for r1 in range(1, n):
        for e in range(1, n):
            try:
                out.append(NearStaircase(n, nw=(r1,), se=(e,)))
            except ValueError:
                continue
    return out


def theorem44_sweep(shapes: Iterable[NearStaircase] | None = None, max_mult: int = 3) -> SweepResult:
    """Support uses every layer cell iff the mixed Bruhat condition holds."""
    shapes = mixed_shapes() if shapes is None else list(shapes)
    res = SweepResult(f"mixed layer, multiplicity <= {max_mult}")
    for shape in shapes:
        target = SupportClass("layer", shape.nw, shape.se)
        for w in biwords_on_cells(shape.cells(), max_mult):
            nu, beta = key_pair_of(w, shape.n)
            uses = classify_biword(w, shape) == target
            res.record(uses == nw_se_condition_b(nu, beta, shape), (shape, w))
    return res


def demazure_sweep(max_n: int = 4, max_size: int = 5) -> SweepResult:
    """Idempotence, braid and commutation on monomials, action rules, and both key definitions."""
    res = SweepResult(f"Demazure identities, n <= {max_n}, |nu| <= {max_size}")
    for n in range(1, max_n + 1):
        for s in range(max_size + 1):
            for exp in compositions(s, n):
                f = Polynomial.monomial(exp)
                for i in range(1, n):
                    pf = demazure_pi(i, f)
                    res.record(demazure_pi(i, pf) == pf, ("idempotent", exp, i))
                    for j in range(i + 1, n):
                        a = demazure_pi(i, demazure_pi(j, f))
                        b = demazure_pi(j, demazure_pi(i, f))
                        if j == i + 1:
                            a, b = demazure_pi(j, a), demazure_pi(i, b)
                            res.record(a == b, ("braid", exp, i))
                        else:
                            res.record(a == b, ("commute", exp, i, j))
            for nu in compositions(s, n):
                key, atom = key_polynomial(nu), atom_polynomial(nu)
                res.record(key == key_polynomial_operator(nu), ("key", nu))
                res.record(atom == atom_operator(nu), ("atom", nu))
                for i in range(1, n):
                    pk, pa = demazure_pi(i, key), demazure_pi(i, atom)
                    if nu[i - 1] > nu[i]:
                        swapped = simple_swap(i, nu)
                        ok = pk == key_polynomial(swapped) and pa == atom_polynomial(swapped) + atom
                    elif nu[i - 1] == nu[i]:
                        ok = pk == key and pa == atom
                    else:
                        ok = pk == key and not pa
                    res.record(ok, ("action", nu, i))
    return res

