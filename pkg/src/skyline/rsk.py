"""RSK, reverse RSK and the SSAF analogue ``phi`` on biwords."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Biword, sort_to_partition
from .ssaf import NotInImage, Ssaf, psi, rho, rho_inverse
from .tableaux import Rssyt, Ssyt, _row_insert, complement_rows


@dataclass(frozen=True)
class SsafPair:
    insertion: Ssaf
    recording: Ssaf

    @property
    def key_pair(self):
        return self.insertion.shape, self.recording.shape

    def to_json(self) -> dict:
        return {"insertion": self.insertion.to_json(), "recording": self.recording.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> SsafPair:
        return cls(Ssaf.from_json(data["insertion"]), Ssaf.from_json(data["recording"]))


def rsk(w: Biword) -> tuple[Ssyt, Ssyt]:
    """Row-insert the bottom row; record each top letter where the shape grew."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for top, bottom in w.pairs:
        i = _row_insert(P, bottom)
        if i == len(Q):
            Q.append([])
        Q[i].append(top)
    return Ssyt(P), Ssyt(Q)


def star_biword(w: Biword, n: int) -> Biword:
    return Biword.from_pairs((n - t + 1, n - b + 1) for t, b in w.pairs)


def rrsk(w: Biword, n: int) -> tuple[Rssyt, Rssyt]:
    P, Q = rsk(star_biword(w, n))
    return Rssyt(complement_rows(P, n)), Rssyt(complement_rows(Q, n))


def phi(w: Biword, n: int) -> SsafPair:
    Pt, Qt = rrsk(w, n)
    return SsafPair(rho(Pt, n), rho(Qt, n))


def phi_via_psi(w: Biword, n: int) -> SsafPair:
    """Same map computed as RSK followed by ``psi`` on both tableaux."""
    P, Q = rsk(w)
    return SsafPair(psi(P, n), psi(Q, n))


def inverse_rsk(P: Ssyt, Q: Ssyt) -> Biword:
    if P.shape != Q.shape:
        raise NotInImage(f"tableaux of different shapes {P.shape} and {Q.shape}")
    Pm = [list(r) for r in P.rows]
    Qm = [list(r) for r in Q.rows]
    pairs = []
    while Qm:
        largest = max(v for r in Qm for v in r)
        # among equal maxima the rightmost (a horizontal strip) was created last
        i = max(
            (idx for idx, r in enumerate(Qm) if r[-1] == largest),
            key=lambda idx: len(Qm[idx]),
        )
        Qm[i].pop()
        x = Pm[i].pop()
        for row in reversed(Pm[:i]):
            # rightmost entry strictly smaller than x is bumped out
            pos = max(j for j, v in enumerate(row) if v < x)
            row[pos], x = x, row[pos]
        pairs.append((largest, x))
        Pm = [r for r in Pm if r]
        Qm = [r for r in Qm if r]
    biword = Biword.from_pairs(pairs)
    if rsk(biword) != (P, Q):
        raise NotInImage("reverse bumping is inconsistent with the recording tableau")
    return biword


def phi_inverse(pair: SsafPair) -> Biword:
    F, G = pair.insertion, pair.recording
    if F.n != G.n:
        raise NotInImage("SSAFs over different alphabets")
    n = F.n
    if sort_to_partition(F.shape) != sort_to_partition(G.shape):
        raise NotInImage(f"shapes {F.shape} and {G.shape} lie in different orbits")
    Pt, Qt = rho_inverse(F), rho_inverse(G)
    P = Ssyt(complement_rows(Pt, n))
    Q = Ssyt(complement_rows(Qt, n))
    return star_biword(inverse_rsk(P, Q), n)


def key_pair(w: Biword, n: int):
    return phi(w, n).key_pair
