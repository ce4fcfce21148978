"""Exact RSK analogue on semi-skyline augmented fillings and the Cauchy kernel checks built on it."""

from .core import Biword, NearStaircase, biword_from_cells, sort_to_partition, transpose_biword
from .rsk import SsafPair, phi, phi_inverse
from .ssaf import NotInImage, Ssaf, psi, psi_inverse, rho, rho_inverse
from .tableaux import Rssyt, Ssyt

__all__ = [
    "Biword", "NearStaircase", "NotInImage", "Rssyt", "Ssaf", "SsafPair", "Ssyt",
    "biword_from_cells", "phi", "phi_inverse", "psi", "psi_inverse", "rho", "rho_inverse",
    "sort_to_partition", "transpose_biword",
]
