"""Weak compositions, cells, near-staircase shapes and biwords.

Cells are ``(row, column)`` pairs in French convention: row 1 is the bottom
row and a Ferrers shape ``(l_1, l_2, ...)`` has ``l_i`` cells in row ``i``.
A biletter ``(top, bottom)`` is the cell ``(bottom, top)``; it contributes the
monomial ``x_bottom * y_top`` to a Cauchy kernel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

Cell = tuple[int, int]
Composition = tuple[int, ...]


def composition(entries: Iterable[int], n: int | None = None) -> Composition:
    """Validate and freeze a weak composition, optionally padding to length n."""
    comp = tuple(int(e) for e in entries)
    if any(e < 0 for e in comp):
        raise ValueError(f"weak composition has a negative entry: {comp}")
    if n is not None:
        if len(comp) > n:
            raise ValueError(f"composition {comp} is longer than n={n}")
        comp = comp + (0,) * (n - len(comp))
    return comp


def sort_to_partition(gamma: Sequence[int]) -> Composition:
    return tuple(sorted(gamma, reverse=True))


def is_partition(gamma: Sequence[int]) -> bool:
    return all(gamma[i] >= gamma[i + 1] for i in range(len(gamma) - 1))


def compositions(total: int, n: int) -> Iterator[Composition]:
    """All weak compositions of ``total`` with ``n`` parts."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest


def ferrers_cells(row_lengths: Sequence[int]) -> frozenset[Cell]:
    if not is_partition(row_lengths):
        raise ValueError(f"row lengths {tuple(row_lengths)} are not a partition")
    return frozenset(
        (i, j) for i, length in enumerate(row_lengths, start=1) for j in range(1, length + 1)
    )


def staircase(n: int) -> Composition:
    return tuple(range(n, 0, -1))


@dataclass(frozen=True)
class NearStaircase:
    """Staircase ``(n, ..., 1)`` plus one layer of single cells on its stairs.

    ``nw`` holds the NW row labels ``r_1 < ... < r_p``; ``se`` holds the SE
    column labels ``e_{p+1} < ... < e_k``, whose rows are ``r_j = n - e_j``.
    Every layer label ``r`` adds the cell ``(r + 1, n - r + 1)``.
    """

    n: int
    nw: tuple[int, ...] = ()
    se: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nw", tuple(self.nw))
        object.__setattr__(self, "se", tuple(self.se))
        n = self.n
        if n < 1:
            raise ValueError("n must be positive")
        for name, labels in (("nw", self.nw), ("se", self.se)):
            if any(a >= b for a, b in zip(labels, labels[1:])):
                raise ValueError(f"{name} labels must be strictly increasing: {labels}")
            if any(not 1 <= v < n for v in labels):
                raise ValueError(f"{name} labels must lie in [1, {n - 1}]: {labels}")
        rows = self.se_rows[::-1] + self.nw  # r_k < ... < r_{p+1} < r_1 < ... < r_p
        if any(a >= b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"layer rows violate r_k<...<r_(p+1)<r_1<...<r_p: {rows}")
        if self.nw and self.se and self.nw[0] - self.se_rows[0] <= 1:
            raise ValueError("NW and SE layers need r_1 - r_(p+1) > 1")

    @property
    def p(self) -> int:
        return len(self.nw)

    @property
    def k(self) -> int:
        return len(self.nw) + len(self.se)

    @property
    def se_rows(self) -> tuple[int, ...]:
        """Rows ``r_{p+1} > ... > r_k`` of the SE labels."""
        return tuple(self.n - e for e in self.se)

    def layer_cell(self, r: int) -> Cell:
        return (r + 1, self.n - r + 1)

    @property
    def nw_cells(self) -> tuple[Cell, ...]:
        return tuple(self.layer_cell(r) for r in self.nw)

    @property
    def se_cells(self) -> tuple[Cell, ...]:
        return tuple(self.layer_cell(r) for r in self.se_rows)

    @property
    def row_lengths(self) -> Composition:
        lengths = list(staircase(self.n))
        for r in self.nw + self.se_rows:
            lengths[r] += 1
        return tuple(lengths)

    def cells(self) -> frozenset[Cell]:
        return ferrers_cells(staircase(self.n)) | set(self.nw_cells) | set(self.se_cells)

    def to_json(self) -> dict:
        return {"n": self.n, "nw": list(self.nw), "se": list(self.se)}

    @classmethod
    def from_json(cls, data: dict) -> NearStaircase:
        return cls(int(data["n"]), tuple(data.get("nw", ())), tuple(data.get("se", ())))


def cells_of(shape: NearStaircase) -> frozenset[Cell]:
    return shape.cells()


@dataclass(frozen=True, order=True)
class Biword:
    """Two-row array in lexicographic order on the top row."""

    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("biword rows must have equal length")
        pairs = list(zip(self.top, self.bottom))
        if any(a > b for a, b in zip(pairs, pairs[1:])):
            raise ValueError(f"biword not in lexicographic order: {pairs}")
        if any(v < 1 for v in self.top + self.bottom):
            raise ValueError("biword letters must be positive")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Biword:
        """Build from ``(top, bottom)`` biletters in any order."""
        ordered = sorted(pairs)
        return cls(tuple(t for t, _ in ordered), tuple(b for _, b in ordered))

    def __len__(self) -> int:
        return len(self.top)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.top, self.bottom))

    def alphabet_size(self) -> int:
        return max(self.top + self.bottom, default=0)

    def cells(self) -> Counter:
        """Multiset of cells ``(bottom, top)``."""
        return Counter((b, t) for t, b in self.pairs)

    def support(self) -> frozenset[Cell]:
        return frozenset(self.cells())

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, data: dict) -> Biword:
        return cls(tuple(data["top"]), tuple(data["bottom"]))

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.top)) + " / " + " ".join(map(str, self.bottom)) + ")"


def biword_from_cells(cells: Counter | dict[Cell, int] | Iterable[Cell]) -> Biword:
    """Biword with biletter ``(j over i)`` repeated once per copy of cell ``(i, j)``."""
    if not isinstance(cells, dict):
        cells = Counter(cells)
    pairs = []
    for (i, j), mult in cells.items():
        if mult < 0:
            raise ValueError("negative multiplicity")
        pairs.extend([(j, i)] * mult)
    return Biword.from_pairs(pairs)


def cells_from_biword(w: Biword) -> Counter:
    return w.cells()


def transpose_biword(w: Biword) -> Biword:
    return Biword.from_pairs((b, t) for t, b in w.pairs)


def biwords_on_cells(cells: Iterable[Cell], max_len: int, min_len: int = 0) -> Iterator[Biword]:
    """Every biword whose support lies in ``cells``, with ``min_len <= length <= max_len``."""
    cells = sorted(cells)
    for length in range(min_len, max_len + 1):
        for combo in combinations_with_replacement(cells, length):
            yield biword_from_cells(combo)


def all_biwords(n: int, max_len: int, min_len: int = 0) -> Iterator[Biword]:
    square = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return biwords_on_cells(square, max_len, min_len)
