"""01-fillings and growth diagrams computing reverse RSK, plus SSAF extraction.

Grid coordinates are 0-based from the bottom-left. Cell ``(x, y)`` occupies
``[x, x+1] x [y, y+1]`` and corner ``(x, y)`` is its bottom-left point. Labels
are seeded with the empty partition on the top row and the right column and
propagated towards the bottom-left corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .core import Biword, Composition
from .ssaf import Ssaf

Partition = Composition


@dataclass(frozen=True)
class ZeroOneFilling:
    n: int
    width: int
    height: int
    crosses: frozenset[tuple[int, int]]
    # column_letter[x] is the original column of sub-column x; likewise rows
    column_letter: tuple[int, ...]
    row_letter: tuple[int, ...]

    @property
    def thick_columns(self) -> tuple[int, ...]:
        """Vertical lines (x positions) that separate original columns."""
        return _thick_lines(self.column_letter)

    @property
    def thick_rows(self) -> tuple[int, ...]:
        return _thick_lines(self.row_letter)

    def biword(self) -> Biword:
        by_column = sorted(self.crosses)
        return Biword.from_pairs((self.column_letter[x], self.row_letter[y]) for x, y in by_column)


def _thick_lines(letters: tuple[int, ...]) -> tuple[int, ...]:
    lines = [0]
    lines += [x for x in range(1, len(letters)) if letters[x] != letters[x - 1]]
    lines.append(len(letters))
    return tuple(lines)


def _expand(counts: list[int]) -> tuple[tuple[int, ...], list[int]]:
    """Sub-line letters and the first sub-line of each original line."""
    letters: list[int] = []
    start = []
    for letter, c in enumerate(counts, start=1):
        start.append(len(letters))
        letters.extend([letter] * max(c, 1))
    return tuple(letters), start


def to_zero_one_filling(w: Biword, n: int) -> ZeroOneFilling:
    pairs = w.pairs  # lexicographic on (top, bottom) = column order
    col_counts = [sum(1 for t, _ in pairs if t == j) for j in range(1, n + 1)]
    row_counts = [sum(1 for _, b in pairs if b == i) for i in range(1, n + 1)]
    column_letter, col_start = _expand(col_counts)
    row_letter, row_start = _expand(row_counts)
    by_row = sorted(range(len(pairs)), key=lambda k: (pairs[k][1], pairs[k][0], k))
    y_of = {}
    seen = [0] * n
    for k in by_row:
        b = pairs[k][1]
        y_of[k] = row_start[b - 1] + seen[b - 1]
        seen[b - 1] += 1
    crosses = set()
    seen = [0] * n
    for k, (t, _) in enumerate(pairs):
        crosses.add((col_start[t - 1] + seen[t - 1], y_of[k]))
        seen[t - 1] += 1
    return ZeroOneFilling(n, len(column_letter), len(row_letter), frozenset(crosses),
                          column_letter, row_letter)


class MalformedDiagram(ValueError):
    pass


def _contains_one_box(big: Partition, small: Partition) -> bool:
    if big == small:
        return True
    if len(big) < len(small):
        return False
    padded = small + (0,) * (len(big) - len(small))
    diff = [b - s for b, s in zip(big, padded)]
    return all(d >= 0 for d in diff) and sum(diff) == 1


def _differing_row(big: Partition, small: Partition) -> int:
    padded = small + (0,) * (len(big) - len(small))
    return next(i for i, (b, s) in enumerate(zip(big, padded)) if b != s)


def _add_box(part: Partition, row: int) -> Partition:
    parts = list(part) + [0] * (row + 1 - len(part))
    parts[row] += 1
    if row > 0 and parts[row] > parts[row - 1]:
        raise MalformedDiagram(f"cannot add a box in row {row + 1} of {part}")
    return tuple(parts)


def local_rule(eps: Partition, mu: Partition, nu: Partition, has_cross: bool) -> Partition:
    """Bottom-left label of a cell from its top-right (eps), bottom-right (mu) and top-left (nu)."""
    eps, mu, nu = (tuple(v for v in p if v) for p in (eps, mu, nu))
    if not (_contains_one_box(mu, eps) and _contains_one_box(nu, eps)):
        raise MalformedDiagram(f"labels {eps}, {mu}, {nu} do not grow by single boxes")
    if has_cross and not (eps == mu == nu):
        raise MalformedDiagram("a cross needs equal labels on its other three corners")
    if eps == mu == nu:
        return _add_box(eps, 0) if has_cross else eps
    if eps == mu:
        return nu
    if eps == nu:
        return mu
    if mu != nu:
        width = max(len(mu), len(nu))
        mu, nu = mu + (0,) * (width - len(mu)), nu + (0,) * (width - len(nu))
        return tuple(max(a, b) for a, b in zip(mu, nu))
    return _add_box(mu, _differing_row(mu, eps) + 1)


@dataclass(frozen=True)
class GrowthDiagram:
    filling: ZeroOneFilling
    labels: dict  # (x, y) -> partition

    def left_labels(self) -> list[Partition]:
        """Labels on the left edge from top to bottom."""
        return [self.labels[(0, y)] for y in range(self.filling.height, -1, -1)]

    def bottom_labels(self) -> list[Partition]:
        """Labels on the bottom edge from right to left."""
        return [self.labels[(x, 0)] for x in range(self.filling.width, -1, -1)]

    def check_local_rules(self) -> bool:
        f = self.filling
        return all(
            local_rule(self.labels[(x + 1, y + 1)], self.labels[(x + 1, y)],
                       self.labels[(x, y + 1)], (x, y) in f.crosses) == self.labels[(x, y)]
            for x in range(f.width) for y in range(f.height)
        )

    def render(self) -> str:
        return render_growth(self)


def growth_labels(f: ZeroOneFilling) -> GrowthDiagram:
    labels: dict[tuple[int, int], Partition] = {}
    for x in range(f.width + 1):
        labels[(x, f.height)] = ()
    for y in range(f.height + 1):
        labels[(f.width, y)] = ()
    for y in range(f.height - 1, -1, -1):
        for x in range(f.width - 1, -1, -1):
            labels[(x, y)] = local_rule(labels[(x + 1, y + 1)], labels[(x + 1, y)],
                                        labels[(x, y + 1)], (x, y) in f.crosses)
    return GrowthDiagram(f, labels)


def growth_diagram(w: Biword, n: int) -> GrowthDiagram:
    return growth_labels(to_zero_one_filling(w, n))


def _place(F: list[list[int]], letter: int, old: Partition, new: Partition):
    """Put ``letter`` in the leftmost column whose growth turns ``old`` into ``new``."""
    row = _differing_row(new, old)
    height = old[row] if row < len(old) else 0
    for j, col in enumerate(F, start=1):
        top = col[-1] if col else j
        if len(col) == height and top >= letter:
            col.append(letter)
            return
    raise MalformedDiagram(f"no admissible column for {letter} growing {old} to {new}")


def ssaf_from_labels(g: GrowthDiagram, side: Literal["left", "bottom"]) -> Ssaf:
    """Read an SSAF off one edge: ``left`` gives the insertion SSAF, ``bottom`` the recording one."""
    f = g.filling
    n = f.n
    cols: list[list[int]] = [[] for _ in range(n)]
    if side == "left":
        steps = [(f.row_letter[y], g.labels[(0, y + 1)], g.labels[(0, y)])
                 for y in range(f.height - 1, -1, -1)]
    elif side == "bottom":
        steps = [(f.column_letter[x], g.labels[(x + 1, 0)], g.labels[(x, 0)])
                 for x in range(f.width - 1, -1, -1)]
    else:
        raise ValueError(f"unknown side {side!r}")
    for letter, old, new in steps:
        if old != new:
            _place(cols, letter, old, new)
    return Ssaf(n, tuple(tuple(c) for c in cols))


def phi_by_growth(w: Biword, n: int):
    from .rsk import SsafPair

    g = growth_diagram(w, n)
    return SsafPair(ssaf_from_labels(g, "left"), ssaf_from_labels(g, "bottom"))


def label_str(p: Partition) -> str:
    if not p:
        return "0"
    if max(p) < 10:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def render_growth(g: GrowthDiagram) -> str:
    """ASCII growth diagram: ``#``/``=`` for thick lines, ``|``/``-`` for thin, ``X`` for crosses."""
    f = g.filling
    thick_x, thick_y = set(f.thick_columns), set(f.thick_rows)
    left = {y: label_str(g.labels[(0, y)]) for y in range(f.height + 1)}
    margin = max(len(s) for s in left.values()) + 1
    lines = []
    for y in range(f.height, -1, -1):
        line = []
        for x in range(f.width + 1):
            line.append("+")
            if x < f.width:
                line.append("===" if y in thick_y else "---")
        lines.append(left[y].rjust(margin) + " " + "".join(line))
        if y > 0:
            row = []
            for x in range(f.width + 1):
                row.append("#" if x in thick_x else "|")
                if x < f.width:
                    row.append(" X " if (x, y - 1) in f.crosses else "   ")
            lines.append(" " * (margin + 1) + "".join(row))
    bottom = [label_str(g.labels[(x, 0)]) for x in range(f.width + 1)]
    depth = max(len(s) for s in bottom)
    for d in range(depth):
        row = []
        for x in range(f.width + 1):
            s = bottom[x]
            row.append(s[d] if d < len(s) else " ")
            if x < f.width:
                row.append("   ")
        lines.append(" " * (margin + 1) + "".join(row))
    return "\n".join(lines)
