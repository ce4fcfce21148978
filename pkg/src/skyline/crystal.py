"""Coplactic operators on words and biwords and the saturation maps ``upsilon``.

Bracketing: in the subword of letters ``r`` and ``r + 1``, each ``r + 1`` is an
opener and each later ``r`` a closer. What survives the matching has the form
``r^a (r+1)^b``; ``e_r`` lowers the leftmost unmatched ``r + 1`` and ``f_r``
raises the rightmost unmatched ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import Biword, Composition, cells_from_biword, transpose_biword
from .bruhat import simple_swap
from .rsk import phi
from .ssaf import Ssaf, psi, psi_inverse
from .tableaux import column_word, schensted_insert

Word = tuple[int, ...]


def unmatched(r: int, word: Sequence[int]) -> tuple[list[int], list[int]]:
    """Positions of the unmatched ``r`` and unmatched ``r + 1`` in ``word``."""
    open_stack: list[int] = []
    lone_r: list[int] = []
    for pos, letter in enumerate(word):
        if letter == r + 1:
            open_stack.append(pos)
        elif letter == r:
            if open_stack:
                open_stack.pop()
            else:
                lone_r.append(pos)
    return lone_r, open_stack


def matched_pairs(r: int, word: Sequence[int]) -> list[tuple[int, int]]:
    stack: list[int] = []
    pairs = []
    for pos, letter in enumerate(word):
        if letter == r + 1:
            stack.append(pos)
        elif letter == r and stack:
            pairs.append((stack.pop(), pos))
    return sorted(pairs)


def _check_index(r: int, n: Optional[int]):
    if r < 1 or (n is not None and r >= n):
        raise IndexError(f"crystal index {r} out of range")


def e_op(r: int, word: Sequence[int], n: Optional[int] = None) -> Optional[Word]:
    """``e_r`` on a word, or None where it is undefined."""
    _check_index(r, n)
    _, lone = unmatched(r, word)
    if not lone:
        return None
    out = list(word)
    out[lone[0]] = r
    return tuple(out)


def f_op(r: int, word: Sequence[int], n: Optional[int] = None) -> Optional[Word]:
    _check_index(r, n)
    lone, _ = unmatched(r, word)
    if not lone:
        return None
    out = list(word)
    out[lone[-1]] = r + 1
    return tuple(out)


def e_power(r: int, word: Sequence[int], m: int) -> Optional[Word]:
    out: Optional[Word] = tuple(word)
    for _ in range(m):
        if out is None:
            return None
        out = e_op(r, out)
    return out


def saturate_e(r: int, word: Sequence[int]) -> Word:
    """Apply ``e_r`` as many times as there are unmatched ``r + 1``."""
    _, lone = unmatched(r, word)
    out = list(word)
    for pos in lone:
        out[pos] = r
    return tuple(out)


def saturate_f(r: int, word: Sequence[int]) -> Word:
    lone, _ = unmatched(r, word)
    out = list(word)
    for pos in lone:
        out[pos] = r + 1
    return tuple(out)


def upsilon(r: int, w: Biword) -> Biword:
    return Biword(w.top, saturate_e(r, w.bottom))


def upsilon_bar(r: int, w: Biword) -> Biword:
    return Biword(w.top, saturate_f(r, w.bottom))


def upsilon_star(r: int, w: Biword) -> Biword:
    """``upsilon`` acting on the top row, through the transposed biword."""
    return transpose_biword(upsilon(r, transpose_biword(w)))


def upsilon_ssaf(r: int, F: Ssaf) -> Ssaf:
    """Saturating ``e_r`` on an SSAF, computed on the column word of its SSYT."""
    P = psi_inverse(F)
    return psi(schensted_insert(saturate_e(r, column_word(P))), F.n)


def fits(w: Biword, cells: set) -> bool:
    return set(cells_from_biword(w)) <= set(cells)


@dataclass
class CornerReport:
    r: int
    shape: Composition
    precondition: bool
    corner: tuple[int, int]
    clause_a: Optional[bool] = None
    clause_b: Optional[bool] = None
    clause_c: Optional[bool] = None
    clause_d: Optional[bool] = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.precondition and all(
            v is not False for v in (self.clause_a, self.clause_b, self.clause_c, self.clause_d)
        )

    def to_json(self) -> dict:
        return {
            "r": self.r, "shape": list(self.shape), "precondition": self.precondition,
            "corner": list(self.corner), "a": self.clause_a, "b": self.clause_b,
            "c": self.clause_c, "d": self.clause_d, "notes": self.notes,
        }


def transpose_shape(lam: Sequence[int]) -> Composition:
    lam = [v for v in lam if v]
    return tuple(sum(1 for v in lam if v > j) for j in range(max(lam, default=0)))


def _part(lam: Sequence[int], i: int) -> int:
    """1-based part, zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def check_corner_theorem(lam: Sequence[int], r: int, w: Biword, n: int) -> CornerReport:
    """Evaluate the four corner clauses for ``w`` inside the Ferrers shape ``lam``.

    Clauses whose hypotheses fail are left as None; a failed precondition is
    reported rather than raised.
    """
    lam = tuple(v for v in lam if v)
    corner = (r + 1, _part(lam, r + 1))
    report = CornerReport(r, lam, False, corner)
    cells = {(i, j) for i, length in enumerate(lam, start=1) for j in range(1, length + 1)}
    support = cells_from_biword(w)
    if not set(support) <= cells:
        report.notes.append("biword leaves the shape")
        return report
    if support.get(corner, 0) < 1:
        report.notes.append(f"corner cell {corner} not in the biword")
        return report
    report.precondition = True

    pair = phi(w, n)
    F, G = pair.insertion, pair.recording
    nu, beta = F.shape, G.shape
    UF = upsilon_ssaf(r, F)
    if nu[r - 1] < nu[r]:
        report.clause_a = UF.shape == simple_swap(r, nu)

    wbar = transpose_biword(w)
    UG = upsilon_ssaf(r, G)
    lhs1 = phi(upsilon(r, w), n)
    lhs2 = phi(upsilon(r, wbar), n)
    report.clause_b = (lhs1.insertion, lhs1.recording) == (UF, G) and (
        lhs2.insertion, lhs2.recording) == (UG, F)

    if _part(lam, r) == _part(lam, r + 1) > _part(lam, r + 2):
        report.clause_c = (
            nu[r - 1] < nu[r]
            and UF.shape == simple_swap(r, nu)
            and fits(upsilon(r, w), cells - {corner})
        )

    mu = transpose_shape(lam)
    if _part(mu, r) == _part(mu, r + 1) > _part(mu, r + 2):
        corner_d = (_part(mu, r + 1), r + 1)
        if support.get(corner_d, 0) < 1:
            report.notes.append(f"transpose corner {corner_d} not in the biword")
        else:
            mu_cells = {(j, i) for i, j in cells}
            report.clause_d = (
                beta[r - 1] < beta[r]
                and UG.shape == simple_swap(r, beta)
                and fits(upsilon(r, wbar), mu_cells - {(r + 1, corner_d[0])})
            )
    return report
