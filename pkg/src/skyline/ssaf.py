"""Semi-skyline augmented fillings (SSAFs).

An SSAF over ``[n]`` is stored as ``n`` columns sitting on the basement
``1..n``; ``columns[j - 1]`` lists the entries above basement ``j`` from the
bottom up. Its shape is the weak composition of column heights.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .core import Composition, compositions, sort_to_partition
from .tableaux import Rssyt, Ssyt, column_word, key_of, reverse_insert, rssyts, ssyt_from_rssyt


class NotInImage(ValueError):
    """Input is not in the image of the map being inverted."""


@dataclass(frozen=True)
class Ssaf:
    n: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(int(v) for v in c) for c in self.columns)
        if len(cols) != self.n:
            raise ValueError(f"SSAF over [{self.n}] needs {self.n} columns, got {len(cols)}")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def empty(cls, n: int) -> Ssaf:
        return cls(n, ((),) * n)

    @classmethod
    def from_columns(cls, n: int, cols: dict[int, Sequence[int]]) -> Ssaf:
        """Build from a sparse ``{basement: entries}`` mapping."""
        return cls(n, tuple(tuple(cols.get(j, ())) for j in range(1, n + 1)))

    @property
    def shape(self) -> Composition:
        return tuple(len(c) for c in self.columns)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def content(self) -> Composition:
        counts = Counter(v for c in self.columns for v in c)
        return tuple(counts.get(i, 0) for i in range(1, self.n + 1))

    def entry(self, col: int, height: int) -> int:
        """Entry at 1-based column ``col`` and height (0 is the basement)."""
        return col if height == 0 else self.columns[col - 1][height - 1]

    def row(self, height: int) -> list[int]:
        return [c[height - 1] for c in self.columns if len(c) >= height]

    def monomial(self) -> Composition:
        return self.content

    def violations(self) -> list[str]:
        """Every broken SSAF condition; empty when the filling is an SSAF."""
        out = []
        for j in range(1, self.n + 1):
            col = [j, *self.columns[j - 1]]
            if any(a < b for a, b in zip(col, col[1:])):
                out.append(f"column {j} is not weakly decreasing upward: {col}")
        heights = self.shape
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                hi, hj = heights[i - 1], heights[j - 1]
                if hi >= hj:
                    # a above c in column i, b beside a in column j
                    for r in range(1, hj + 1):
                        a, b, c = self.entry(i, r), self.entry(j, r), self.entry(i, r - 1)
                        if not (b < a or b > c):
                            out.append(f"type A triple at columns {i},{j} height {r}")
                else:
                    # b above c in column j, a beside c in column i
                    for r in range(0, hi + 1):
                        a, b, c = self.entry(i, r), self.entry(j, r + 1), self.entry(j, r)
                        if not (a < b <= c):
                            out.append(f"type B triple at columns {i},{j} height {r}")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def to_json(self) -> dict:
        return {"n": self.n, "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data: dict) -> Ssaf:
        return cls(int(data["n"]), tuple(tuple(c) for c in data["columns"]))

    def render(self) -> str:
        """Skyline picture with the basement as the bottom line."""
        width = len(str(self.n))
        height = max(self.shape, default=0)
        lines = []
        for h in range(height, 0, -1):
            cells = [
                str(c[h - 1]).rjust(width) if len(c) >= h else " " * width for c in self.columns
            ]
            lines.append(" ".join(cells).rstrip())
        lines.append("-" * ((width + 1) * self.n - 1))
        lines.append(" ".join(str(j).rjust(width) for j in range(1, self.n + 1)))
        return "\n".join(lines)


def rho(R: Rssyt, n: int) -> Ssaf:
    """Column ``i`` of the RSSYT fills row ``i`` of the SSAF, largest entry first."""
    cols: list[list[int]] = [[] for _ in range(n)]
    for i, rcol in enumerate(R.columns):
        for a in sorted(rcol, reverse=True):
            if i == 0:
                cols[a - 1].append(a)
                continue
            for c in cols:
                if len(c) == i and c[-1] >= a:
                    c.append(a)
                    break
            else:
                raise ValueError(f"no admissible place for {a} in row {i + 1}")
    return Ssaf(n, tuple(tuple(c) for c in cols))


def rho_inverse(F: Ssaf) -> Rssyt:
    height = max(F.shape, default=0)
    rcols = []
    for h in range(1, height + 1):
        entries = F.row(h)
        if len(set(entries)) != len(entries):
            raise NotInImage(f"row {h} of the SSAF has repeated entries")
        rcols.append(sorted(entries, reverse=True))
    if any(len(a) < len(b) for a, b in zip(rcols, rcols[1:])):
        raise NotInImage("rows of the SSAF do not shrink upward")
    rows = [[c[i] for c in rcols if len(c) > i] for i in range(len(rcols[0]) if rcols else 0)]
    try:
        R = Rssyt(rows)
    except ValueError as exc:
        raise NotInImage(str(exc)) from exc
    if rho(R, F.n) != F:
        raise NotInImage("filling is not in the image of rho")
    return R


def psi(P: Ssyt, n: int) -> Ssaf:
    return rho(reverse_insert(column_word(P), n), n)


def psi_inverse(F: Ssaf) -> Ssyt:
    return ssyt_from_rssyt(rho_inverse(F), F.n)


def right_key(P: Ssyt, n: int) -> Ssyt:
    return key_of(psi(P, n).shape)


def key_ssaf(nu: Sequence[int]) -> Ssaf:
    """The SSAF whose column ``i`` holds ``nu_i`` copies of ``i``."""
    return Ssaf(len(nu), tuple((i,) * v for i, v in enumerate(nu, start=1)))


def ssafs_via_rho(n: int, size: int) -> Iterator[Ssaf]:
    for R in rssyts(n, size):
        yield rho(R, n)


def ssafs_of_shape(gamma: Sequence[int]) -> Iterator[Ssaf]:
    """Direct enumeration: weakly decreasing columns filtered by the triple rules."""
    n = len(gamma)
    per_column = []
    for j, h in enumerate(gamma, start=1):
        options: list[tuple[int, ...]] = []

        def grow(seq: tuple[int, ...], top: int, h=h, options=options):
            if len(seq) == h:
                options.append(seq)
                return
            for v in range(1, top + 1):
                grow(seq + (v,), v)

        grow((), j)
        per_column.append(options)
    for cols in product(*per_column):
        F = Ssaf(n, cols)
        if F.is_valid():
            yield F


def ssafs(n: int, size: int) -> Iterator[Ssaf]:
    for gamma in compositions(size, n):
        yield from ssafs_of_shape(gamma)


def same_orbit(a: Sequence[int], b: Sequence[int]) -> bool:
    return sort_to_partition(a) == sort_to_partition(b)
