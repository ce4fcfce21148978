"""Bruhat order on the orbit of a partition under permutation of positions.

``alpha < t alpha`` whenever ``alpha_i > alpha_j`` for ``i < j`` and ``t``
swaps positions ``i`` and ``j``; the order is the transitive closure. The
partition itself is the minimum of its orbit and its reverse the maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .core import Composition, sort_to_partition


def simple_swap(i: int, alpha: Sequence[int]) -> Composition:
    """Apply ``s_i``, exchanging entries ``i`` and ``i + 1`` (1-based)."""
    if not 1 <= i < len(alpha):
        raise IndexError(f"s_{i} undefined on compositions of length {len(alpha)}")
    a = list(alpha)
    a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


def apply_word(word: Sequence[int], alpha: Sequence[int]) -> Composition:
    """``s_{w_1} s_{w_2} ... s_{w_m} alpha``: the rightmost letter acts first."""
    out = tuple(alpha)
    for i in reversed(word):
        out = simple_swap(i, out)
    return out


def omega(alpha: Sequence[int]) -> Composition:
    return tuple(reversed(alpha))


def inversions(alpha: Sequence[int]) -> int:
    """Pairs ``i < j`` with ``alpha_i < alpha_j``."""
    n = len(alpha)
    return sum(1 for i in range(n) for j in range(i + 1, n) if alpha[i] < alpha[j])


@dataclass(frozen=True)
class OrbitPoset:
    base: Composition
    elements: tuple[Composition, ...]
    index: dict
    covering: tuple[tuple[Composition, Composition], ...]
    # up[k] is a bitmask of the elements >= elements[k]
    up: tuple[int, ...]

    def leq(self, alpha: Composition, beta: Composition) -> bool:
        a, b = self.index.get(alpha), self.index.get(beta)
        if a is None or b is None:
            return False
        return bool(self.up[a] >> b & 1)

    def relations(self) -> list[tuple[Composition, Composition]]:
        """Every pair ``alpha < t alpha`` generating the order (not only covers)."""
        return [
            (alpha, beta)
            for alpha in self.elements
            for beta in _raises(alpha)
        ]


def _raises(alpha: Composition) -> list[Composition]:
    n = len(alpha)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] > alpha[j]:
                a = list(alpha)
                a[i], a[j] = a[j], a[i]
                out.append(tuple(a))
    return out


@lru_cache(maxsize=None)
def orbit_poset(base: Composition) -> OrbitPoset:
    base = sort_to_partition(base)
    elements = tuple(sorted(set(permutations(base)), key=lambda a: (-inversions(a), a)))
    index = {a: k for k, a in enumerate(elements)}
    up = [0] * len(elements)
    # every raise adds inversions, so elements with more inversions are finished first
    for k, alpha in enumerate(elements):
        mask = 1 << k
        for beta in _raises(alpha):
            mask |= up[index[beta]]
        up[k] = mask
    covering = tuple(
        (elements[a], elements[b])
        for a in range(len(elements))
        for b in range(len(elements))
        if a != b and up[a] >> b & 1 and not any(
            c not in (a, b) and up[a] >> c & 1 and up[c] >> b & 1 for c in range(len(elements))
        )
    ) if len(elements) <= 120 else ()
    return OrbitPoset(base, elements, index, covering, tuple(up))


def bruhat_leq(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """``alpha <= beta`` in the orbit order; False for different orbits."""
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != len(beta) or sort_to_partition(alpha) != sort_to_partition(beta):
        return False
    return orbit_poset(sort_to_partition(alpha)).leq(alpha, beta)


def bruhat_lt(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    return tuple(alpha) != tuple(beta) and bruhat_leq(alpha, beta)
