"""Key-pairs of biwords and the Bruhat-order tests that detect layer cells.

A test is described by two swap sequences: ``nu_ops`` acts on the insertion
shape and ``beta_ops`` on the recording shape, first element first. The test
holds when the fully swapped recording shape is below ``omega`` of the fully
swapped insertion shape, while dropping any single swap on either side breaks
the inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .bruhat import bruhat_leq, omega, simple_swap
from .core import Biword, Cell, Composition, NearStaircase, cells_from_biword
from .rsk import phi
from .ssaf import Ssaf, same_orbit


def act(ops: Sequence[int], alpha: Sequence[int]) -> Composition:
    out = tuple(alpha)
    for i in ops:
        out = simple_swap(i, out)
    return out


def _drop(ops: Sequence[int], m: int) -> tuple[int, ...]:
    return tuple(ops[:m]) + tuple(ops[m + 1:])


@lru_cache(maxsize=None)
def bruhat_test(nu: Composition, beta: Composition, nu_ops: tuple[int, ...],
                beta_ops: tuple[int, ...]) -> bool:
    if not same_orbit(nu, beta):
        return False
    top = omega(act(nu_ops, nu))
    if not bruhat_leq(act(beta_ops, beta), top):
        return False
    for m in range(len(nu_ops)):
        if bruhat_leq(act(beta_ops, beta), omega(act(_drop(nu_ops, m), nu))):
            return False
    for m in range(len(beta_ops)):
        if bruhat_leq(act(_drop(beta_ops, m), beta), top):
            return False
    return True


def key_pair_of(w: Biword, n: int) -> tuple[Composition, Composition]:
    return phi(w, n).key_pair


def nw_condition(nu, beta, rows: Sequence[int]) -> bool:
    """All rows on the insertion side: ``beta <= omega s_{r_k}...s_{r_1} nu`` and minimality."""
    return bruhat_test(tuple(nu), tuple(beta), tuple(rows), ())


def se_condition(nu, beta, rows: Sequence[int], n: int) -> bool:
    """All rows moved to the recording side as ``s_{n-r}``."""
    return bruhat_test(tuple(nu), tuple(beta), (), tuple(n - r for r in reversed(rows)))


def nw_se_condition_b(nu, beta, shape: NearStaircase) -> bool:
    """Mixed test: NW labels act on ``nu``, SE labels act on ``beta``."""
    return bruhat_test(tuple(nu), tuple(beta), shape.nw, shape.se)


def split_condition(nu, beta, rows: Sequence[int], p: int, n: int) -> bool:
    """Lowest ``k - p`` rows stay with ``nu``; the top ``p`` rows move to ``beta``."""
    k = len(rows)
    low, high = rows[:k - p], rows[k - p:]
    return bruhat_test(tuple(nu), tuple(beta), tuple(low), tuple(n - r for r in reversed(high)))


def proper_subsequence_condition(nu, beta, rows: Sequence[int]) -> bool:
    """``beta`` is not below ``omega s_{i_t}...s_{i_1} nu`` for any proper subsequence."""
    nu, beta = tuple(nu), tuple(beta)
    return all(
        not bruhat_leq(beta, omega(act(sub, nu)))
        for t in range(len(rows))
        for sub in combinations(rows, t)
    )


@dataclass(frozen=True)
class SupportClass:
    kind: str  # "staircase", "layer" or "outside"
    nw: tuple[int, ...] = ()
    se: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind != "layer":
            return self.kind
        return f"layer nw={list(self.nw)} se={list(self.se)}"


def classify_biword(w: Biword, shape: NearStaircase) -> SupportClass:
    support = set(cells_from_biword(w))
    if not support <= shape.cells():
        return SupportClass("outside")
    nw = tuple(r for r in shape.nw if shape.layer_cell(r) in support)
    se = tuple(e for e in shape.se if shape.layer_cell(shape.n - e) in support)
    if not nw and not se:
        return SupportClass("staircase")
    return SupportClass("layer", nw, se)


@dataclass(frozen=True)
class LayerSpec:
    """A choice ``(H, M)`` of NW indices in ``[1, p]`` and SE indices in ``[p+1, k]``."""

    shape: NearStaircase
    H: tuple[int, ...] = ()
    M: tuple[int, ...] = ()

    def __post_init__(self):
        p, k = self.shape.p, self.shape.k
        H, M = tuple(self.H), tuple(self.M)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "M", M)
        if any(a >= b for a, b in zip(H, H[1:])) or any(not 1 <= i <= p for i in H):
            raise ValueError(f"H must be increasing inside [1, {p}]: {H}")
        if any(a >= b for a, b in zip(M, M[1:])) or any(not p < j <= k for j in M):
            raise ValueError(f"M must be increasing inside [{p + 1}, {k}]: {M}")

    @property
    def z(self) -> int:
        return len(self.H)

    @property
    def t(self) -> int:
        return len(self.M)

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(self.shape.nw[i - 1] for i in self.H)

    @property
    def labels(self) -> tuple[int, ...]:
        p = self.shape.p
        return tuple(self.shape.se[j - p - 1] for j in self.M)

    def sub_shape(self) -> NearStaircase:
        return NearStaircase(self.shape.n, self.rows, self.labels)

    def support_class(self) -> SupportClass:
        if not self.H and not self.M:
            return SupportClass("staircase")
        return SupportClass("layer", self.rows, self.labels)


def layer_specs(shape: NearStaircase) -> Iterator[LayerSpec]:
    """Every ``(H, M)`` in the order ``z`` then ``t`` then lexicographic."""
    p, k = shape.p, shape.k
    for z in range(p + 1):
        for t in range(k - p + 1):
            for H in combinations(range(1, p + 1), z):
                for M in combinations(range(p + 1, k + 1), t):
                    yield LayerSpec(shape, H, M)


def a_condition(nu, beta, spec: LayerSpec) -> bool:
    return bruhat_test(tuple(nu), tuple(beta), spec.rows, spec.labels)


def in_a_set(F: Ssaf, G: Ssaf, spec: LayerSpec) -> bool:
    return a_condition(F.shape, G.shape, spec)


def b_condition(nu, beta, spec: LayerSpec) -> bool:
    shape = spec.shape
    p = shape.p
    if shape.k == p:
        raise ValueError("B-sets need at least one SE label")
    if p + 1 in spec.M:
        raise ValueError("M must avoid the first SE index")
    e = shape.se[0]
    if not beta[e - 1] < beta[e]:
        return False
    return a_condition(nu, simple_swap(e, beta), spec)


def in_b_set(F: Ssaf, G: Ssaf, spec: LayerSpec) -> bool:
    return b_condition(F.shape, G.shape, spec)


def extend_m(spec: LayerSpec) -> LayerSpec:
    """``M^1 = {p+1} | M``."""
    return LayerSpec(spec.shape, spec.H, (spec.shape.p + 1,) + spec.M)


def matching_specs(nu, beta, shape: NearStaircase) -> list[LayerSpec]:
    return [s for s in layer_specs(shape) if a_condition(nu, beta, s)]
