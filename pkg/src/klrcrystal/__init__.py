"""Type A crystals, R-matrices, q-characters of homogeneous quiver Hecke modules
and Kazhdan-Lusztig graded decomposition numbers, in exact arithmetic."""

from .cartan import CartanA, DimensionError, RootVec, WeightVec, pair_form
from .laurent import Laurent, q
from .tableaux import ColumnTableau, SSYTab, StandardTab, YoungDiagram, col

__version__ = "0.1.0"

__all__ = [
    "CartanA",
    "ColumnTableau",
    "DimensionError",
    "Laurent",
    "RootVec",
    "SSYTab",
    "StandardTab",
    "WeightVec",
    "YoungDiagram",
    "col",
    "pair_form",
    "q",
]
