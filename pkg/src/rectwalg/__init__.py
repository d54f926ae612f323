"""Rectangular finite W-algebras of types B, C, D and their finite dimensional irreducibles."""

from .exact import Number, num
from .lie import Pyramid, SignData
from .tableaux import RowClass, Tableau, row_class, std_decision
from .series import FactoredSeries, lofa
from .classify import classify, c_action, orbit

__all__ = [
    "Number", "num", "Pyramid", "SignData", "RowClass", "Tableau", "row_class",
    "std_decision", "FactoredSeries", "lofa", "classify", "c_action", "orbit",
]
