"""Truncated Cauchy kernels over near staircases and the three-sided expansion check.

All polynomials here live in ``2n`` variables ``x_1..x_n, y_1..y_n``. Truncation
at ``D`` keeps terms of ``x``-degree at most ``D``; every side is bihomogeneous
so the comparison is made one degree at a time.
"""

from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Optional

from .bruhat import omega
from .core import NearStaircase, biwords_on_cells, compositions, ferrers_cells, staircase
from .keypairs import (
    LayerSpec, a_condition, b_condition, classify_biword, extend_m, layer_specs,
)
from .polynomial import Polynomial, apply_pis, atom_polynomial, key_polynomial, xy_names
from .rsk import phi
from .ssaf import Ssaf, same_orbit, ssafs

VARIANTS = ("mixed", "nw", "se")


def xy_monomial(n: int, x_exp, y_exp) -> tuple[int, ...]:
    return tuple(x_exp) + tuple(y_exp)


def kernel_slice(cells, n: int, m: int) -> Polynomial:
    """Degree-``m`` part of the product of ``1/(1 - x_i y_j)`` over ``cells``."""
    out: dict = defaultdict(int)
    for multiset in combinations_with_replacement(sorted(cells), m):
        exp = [0] * (2 * n)
        for i, j in multiset:
            exp[i - 1] += 1
            exp[n + j - 1] += 1
        out[tuple(exp)] += 1
    return Polynomial(2 * n, out)


def truncated_kernel(shape: NearStaircase, D: int) -> Polynomial:
    n = shape.n
    total = Polynomial.zero(2 * n)
    for m in range(D + 1):
        total = total + kernel_slice(shape.cells(), n, m)
    return total


def shape_kernel(row_lengths, D: int, n: int) -> Polynomial:
    """Truncated kernel of an arbitrary Ferrers shape inside ``[n] x [n]``."""
    cells = ferrers_cells(row_lengths)
    total = Polynomial.zero(2 * n)
    for m in range(D + 1):
        total = total + kernel_slice(cells, n, m)
    return total


@lru_cache(maxsize=None)
def _ssafs_by_size(n: int, m: int) -> tuple[Ssaf, ...]:
    return tuple(ssafs(n, m))


@dataclass
class EnumerationStats:
    pairs: int = 0  # SSAF pairs in a common orbit that were examined
    tagged: int = 0  # pairs lying in some A-set
    overlaps: int = 0  # pairs lying in two or more A-sets
    biwords: int = 0
    biword_mismatches: int = 0  # biwords whose image disagrees with its tag
    images_agree: bool = True  # the biword images are exactly the tagged pairs

    def merge(self, other: EnumerationStats):
        self.pairs += other.pairs
        self.tagged += other.tagged
        self.overlaps += other.overlaps
        self.biwords += other.biwords
        self.biword_mismatches += other.biword_mismatches
        self.images_agree = self.images_agree and other.images_agree

    @property
    def ok(self) -> bool:
        return self.overlaps == 0 and self.biword_mismatches == 0 and self.images_agree

    def to_json(self) -> dict:
        return {
            "pairs": self.pairs, "tagged": self.tagged, "overlaps": self.overlaps,
            "biwords": self.biwords, "biwordMismatches": self.biword_mismatches,
            "imagesAgree": self.images_agree,
        }


def tag_pairs(shape: NearStaircase, m: int) -> dict:
    """Map each SSAF pair of size ``m`` lying in an A-set to the list of A-sets holding it."""
    specs = list(layer_specs(shape))
    by_shape: dict = defaultdict(list)
    for F in _ssafs_by_size(shape.n, m):
        by_shape[F.shape].append(F)
    tags = {}
    for nu, Fs in by_shape.items():
        for beta, Gs in by_shape.items():
            if not same_orbit(nu, beta):
                continue
            hits = [s for s in specs if a_condition(nu, beta, s)]
            for F in Fs:
                for G in Gs:
                    tags[(F, G)] = hits
    return tags


def combinatorial_slice(shape: NearStaircase, m: int) -> tuple[Polynomial, EnumerationStats]:
    n = shape.n
    stats = EnumerationStats()
    tags = tag_pairs(shape, m)
    out: dict = defaultdict(int)
    for (F, G), hits in tags.items():
        stats.pairs += 1
        if hits:
            stats.tagged += 1
            stats.overlaps += len(hits) > 1
            out[xy_monomial(n, F.content, G.content)] += len(hits)
    images = set()
    for w in biwords_on_cells(shape.cells(), m, m):
        stats.biwords += 1
        pair = phi(w, n)
        key = (pair.insertion, pair.recording)
        images.add(key)
        hits = tags.get(key, [])
        if [h.support_class() for h in hits] != [classify_biword(w, shape)]:
            stats.biword_mismatches += 1
    stats.images_agree = images == {k for k, hits in tags.items() if hits}
    return Polynomial(2 * n, out), stats


def combinatorial_side(shape: NearStaircase, D: int) -> tuple[Polynomial, EnumerationStats]:
    total = Polynomial.zero(2 * shape.n)
    stats = EnumerationStats()
    for m in range(D + 1):
        poly, s = combinatorial_slice(shape, m)
        total = total + poly
        stats.merge(s)
    return total, stats


def operator_slice(shape: NearStaircase, m: int, variant: str) -> Polynomial:
    n = shape.n
    nw, se = shape.nw, shape.se
    if variant == "mixed":
        x_word, y_word = nw, se
    elif variant == "se":
        x_word, y_word = (), tuple(n - r for r in reversed(nw)) + se
    elif variant == "nw":
        x_word, y_word = tuple(n - e for e in reversed(se)) + nw, ()
    else:
        raise ValueError(f"unknown variant {variant!r}")
    total = Polynomial.zero(2 * n)
    for nu in compositions(m, n):
        fx = apply_pis(x_word, atom_polynomial(nu)).embed(2 * n, 0)
        gy = apply_pis(y_word, key_polynomial(omega(nu))).embed(2 * n, n)
        total = total + fx * gy
    return total


def operator_side(shape: NearStaircase, D: int, variant: str = "mixed") -> Polynomial:
    total = Polynomial.zero(2 * shape.n)
    for m in range(D + 1):
        total = total + operator_slice(shape, m, variant)
    return total


def first_divergence(polys: dict) -> Optional[dict]:
    """Smallest monomial, in graded lex order, on which the given polynomials disagree."""
    names = list(polys)
    support = set()
    for p in polys.values():
        support |= set(p.terms)
    for exp in sorted(support, key=lambda e: (sum(e), e)):
        coeffs = {k: polys[k].terms.get(exp, 0) for k in names}
        if len(set(coeffs.values())) > 1:
            return {"monomial": list(exp), "coefficients": coeffs}
    return None


def _slice_job(args):
    shape_json, m, side = args
    shape = NearStaircase.from_json(shape_json)
    t0 = time.perf_counter()
    if side == "kernel":
        out = (kernel_slice(shape.cells(), shape.n, m), None)
    elif side == "combinatorial":
        out = combinatorial_slice(shape, m)
    else:
        out = (operator_slice(shape, m, side.removeprefix("operator_")), None)
    return side, m, out, time.perf_counter() - t0


@dataclass
class ExpansionReport:
    shape: NearStaircase
    D: int
    sides: dict
    equal: bool
    first_divergence: Optional[dict]
    timings: dict
    enumeration: EnumerationStats = field(default_factory=EnumerationStats)

    @property
    def ok(self) -> bool:
        return self.equal and self.enumeration.ok

    def to_json(self, with_polynomials: bool = True) -> dict:
        return {
            "shape": self.shape.to_json(),
            "D": self.D,
            "sides": {k: (p.to_json() if with_polynomials else len(p)) for k, p in self.sides.items()},
            "equal": self.equal,
            "firstDivergence": self.first_divergence,
            "timings": self.timings,
            "enumeration": self.enumeration.to_json(),
        }


def verify_expansion(shape: NearStaircase, D: int, variants=VARIANTS, threads: int = 1) -> ExpansionReport:
    sides = ["kernel", "combinatorial"] + [f"operator_{v}" for v in variants]
    jobs = [(shape.to_json(), m, side) for side in sides for m in range(D + 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_slice_job, jobs))
    else:
        results = [_slice_job(j) for j in jobs]
    polys = {side: Polynomial.zero(2 * shape.n) for side in sides}
    timings = {side: 0.0 for side in sides}
    stats = EnumerationStats()
    for side, m, (poly, s), elapsed in results:
        polys[side] = polys[side] + poly
        timings[side] += elapsed
        if s is not None:
            stats.merge(s)
    timings = {k: round(v, 6) for k, v in timings.items()}
    div = first_divergence(polys)
    return ExpansionReport(shape, D, polys, div is None, div, timings, stats)


def render_xy(p: Polynomial, n: int) -> str:
    return p.to_str(xy_names(n))


@dataclass
class SplitCheck:
    spec: LayerSpec
    lhs: Polynomial
    rhs: Polynomial

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _a_slices(shape: NearStaircase, spec: LayerSpec, D: int, cond=a_condition) -> dict:
    """``{beta: sum of x^F y^G over pairs with sh(G) = beta}`` for a shape predicate."""
    n = shape.n
    slices: dict = defaultdict(lambda: defaultdict(int))
    for m in range(D + 1):
        Fs = _ssafs_by_size(n, m)
        for F in Fs:
            for G in Fs:
                if same_orbit(F.shape, G.shape) and cond(F.shape, G.shape, spec):
                    slices[G.shape][xy_monomial(n, F.content, G.content)] += 1
    return {beta: Polynomial(2 * n, terms) for beta, terms in slices.items()}


def eq2_check(spec: LayerSpec, D: int) -> SplitCheck:
    """Apply ``pi_{e_{p+1}}`` in ``y`` to each recording-shape slice of an A-set."""
    shape = spec.shape
    n = shape.n
    e = shape.se[0]
    zero = Polynomial.zero(2 * n)
    lhs = zero
    weak = zero
    for beta, poly in _a_slices(shape, spec, D).items():
        lhs = lhs + apply_pis((e,), poly, offset=n, n=n)
        if beta[e - 1] >= beta[e]:
            weak = weak + poly
    strict_b = sum(_a_slices(shape, spec, D, b_condition).values(), zero)
    return SplitCheck(spec, lhs, weak + strict_b)


@dataclass
class SeparationCheck:
    spec: LayerSpec
    pairs: int
    mismatches: int
    overlaps: int

    @property
    def ok(self) -> bool:
        return self.mismatches == 0 and self.overlaps == 0


def lemma51_check(spec: LayerSpec, D: int) -> SeparationCheck:
    """B-set versus the disjoint union of the strict A-part and the A-set with ``M^1``."""
    shape = spec.shape
    e = shape.se[0]
    bigger = extend_m(spec)
    pairs = mismatches = overlaps = 0
    for m in range(D + 1):
        Fs = _ssafs_by_size(shape.n, m)
        for F in Fs:
            for G in Fs:
                nu, beta = F.shape, G.shape
                if not same_orbit(nu, beta):
                    continue
                pairs += 1
                left = b_condition(nu, beta, spec)
                first = a_condition(nu, beta, spec) and beta[e - 1] < beta[e]
                second = a_condition(nu, beta, bigger)
                overlaps += first and second
                mismatches += left != (first or second)
    return SeparationCheck(spec, pairs, mismatches, overlaps)


def single_cell_check(n: int, r: int, D: int) -> tuple[bool, bool]:
    """``pi_r`` in ``x`` and ``pi_{n-r}`` in ``y`` both turn the staircase kernel into the one-cell kernel."""
    rho = staircase(n)
    lam = list(rho)
    lam[r] += 1
    base = shape_kernel(rho, D, n)
    target = shape_kernel(lam, D, n)
    via_x = apply_pis((r,), base, offset=0, n=n)
    via_y = apply_pis((n - r,), base, offset=n, n=n)
    return via_x == target, via_y == target
