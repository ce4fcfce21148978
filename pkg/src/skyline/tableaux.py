"""Semi-standard and reverse semi-standard tableaux, insertion and keys.

Tableaux are stored row-major in French convention: ``rows[0]`` is the
bottom row. Columns are derived on demand.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Composition, is_partition, sort_to_partition

Rows = tuple[tuple[int, ...], ...]


def _freeze(rows: Sequence[Sequence[int]]) -> Rows:
    return tuple(tuple(int(v) for v in row) for row in rows if len(row) > 0)


def _columns(rows: Rows) -> Rows:
    if not rows:
        return ()
    return tuple(
        tuple(row[j] for row in rows if len(row) > j) for j in range(len(rows[0]))
    )


@dataclass(frozen=True)
class Tableau:
    rows: Rows = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", _freeze(self.rows))
        shape = tuple(len(r) for r in self.rows)
        if not is_partition(shape):
            raise ValueError(f"row lengths {shape} are not a partition")
        self._check()

    def _check(self):
        pass

    @property
    def shape(self) -> Composition:
        return tuple(len(r) for r in self.rows)

    @property
    def columns(self) -> Rows:
        return _columns(self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def content(self, n: int) -> Composition:
        counts = Counter(v for row in self.rows for v in row)
        return tuple(counts.get(i, 0) for i in range(1, n + 1))

    def entries(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def render(self) -> str:
        """French-convention ASCII picture: bottom row printed last."""
        if not self.rows:
            return "(empty)"
        width = max(len(str(v)) for v in self.entries())
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in reversed(self.rows))


class Ssyt(Tableau):
    """Rows weakly increase to the right, columns strictly increase upward."""

    def _check(self):
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"SSYT row not weakly increasing: {row}")
        for col in self.columns:
            if any(a >= b for a, b in zip(col, col[1:])):
                raise ValueError(f"SSYT column not strictly increasing: {col}")


class Rssyt(Tableau):
    """Rows weakly decrease to the right, columns strictly decrease upward."""

    def _check(self):
        for row in self.rows:
            if any(a < b for a, b in zip(row, row[1:])):
                raise ValueError(f"RSSYT row not weakly decreasing: {row}")
        for col in self.columns:
            if any(a <= b for a, b in zip(col, col[1:])):
                raise ValueError(f"RSSYT column not strictly decreasing: {col}")


def is_key_tableau(t: Ssyt) -> bool:
    cols = [set(c) for c in t.columns]
    return all(b <= a for a, b in zip(cols, cols[1:]))


def column_word(t: Tableau) -> tuple[int, ...]:
    """Columns read top to bottom, left to right."""
    return tuple(v for col in t.columns for v in reversed(col))


def _row_insert(rows: list[list[int]], letter: int) -> int:
    """Row-insert into a mutable tableau; return the index of the row that grew."""
    x = letter
    for i, row in enumerate(rows):
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return i
        row[pos], x = x, row[pos]
    rows.append([x])
    return len(rows) - 1


def schensted_insert(word: Sequence[int]) -> Ssyt:
    rows: list[list[int]] = []
    for letter in word:
        _row_insert(rows, letter)
    return Ssyt(rows)


def complement(word: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(n - b + 1 for b in word)


def star(word: Sequence[int], n: int) -> tuple[int, ...]:
    """``b_1...b_m -> (n-b_m+1)...(n-b_1+1)``."""
    return tuple(n - b + 1 for b in reversed(word))


def complement_rows(t: Tableau, n: int) -> Rows:
    return tuple(tuple(n - v + 1 for v in row) for row in t.rows)


def reverse_insert(word: Sequence[int], n: int) -> Rssyt:
    """Reverse Schensted insertion: insert ``b*`` and complement the entries."""
    return Rssyt(complement_rows(schensted_insert(star(word, n)), n))


def ssyt_from_rssyt(r: Rssyt, n: int) -> Ssyt:
    """Inverse of ``P -> reverse_insert(column_word(P), n)``."""
    t = Ssyt(complement_rows(r, n))
    return schensted_insert(star(column_word(t), n))


def key_of(gamma: Sequence[int]) -> Ssyt:
    """The key tableau whose first ``gamma_j`` columns contain ``j``."""
    width = max(gamma, default=0)
    cols = [[j for j, g in enumerate(gamma, start=1) if g > c] for c in range(width)]
    height = max((len(c) for c in cols), default=0)
    rows = [[col[i] for col in cols if len(col) > i] for i in range(height)]
    return Ssyt(rows)


def shape_of_key(gamma: Sequence[int]) -> Composition:
    return sort_to_partition(gamma)


def partitions_of(total: int, max_parts: int, max_part: int | None = None) -> Iterator[Composition]:
    """Partitions of ``total`` with at most ``max_parts`` parts, trailing zeros dropped."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, max_parts - 1, first):
            yield (first,) + rest


def ssyts_of_shape(shape: Sequence[int], n: int) -> Iterator[Ssyt]:
    """All SSYTs of the given partition shape with entries in ``[n]``."""
    shape = tuple(s for s in shape if s > 0)
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def fill(idx: int) -> Iterator[Ssyt]:
        if idx == len(cells):
            yield Ssyt([[filling[(i, j)] for j in range(length)] for i, length in enumerate(shape)])
            return
        i, j = cells[idx]
        low = 1
        if j > 0:
            low = max(low, filling[(i, j - 1)])
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        above = sum(1 for length in shape[i + 1:] if length > j)
        for v in range(low, n - above + 1):
            filling[(i, j)] = v
            yield from fill(idx + 1)
        filling.pop((i, j), None)

    yield from fill(0)


def ssyts(n: int, size: int) -> Iterator[Ssyt]:
    for shape in partitions_of(size, n):
        yield from ssyts_of_shape(shape, n)


def rssyts(n: int, size: int) -> Iterator[Rssyt]:
    for t in ssyts(n, size):
        yield Rssyt(complement_rows(t, n))
