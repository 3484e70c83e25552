"""Exact computation in the algebras S_1 and S_2 of one-sided inverses.

S_1 = K<x, y | yx = 1> and S_2 = S_1 (x) S_1.  The package provides normal
forms, the polynomial representations, Fredholm indices (symbolic and by
truncation), determinants, factorizations of units into explicit generator
words, and automorphism words.
"""

from .algebra import (
    Element1,
    Element2,
    eta,
    matrix_unit1,
    matrix_unit2,
    matrix_unit_factor,
    membership,
    theta,
    theta_inverse,
    theta_power,
    x1,
    x2,
    y1,
    y2,
)
from .automorphisms import Automorphism
from .errors import AlgebraError
from .index import ind_component, index1, index_block
from .parser import parse, parse_element
from .scalars import GF, QQ, use_field
from .units import det_block, detbar, full_factor_unit, unit_inverse

__version__ = "0.1.0"

__all__ = [
    "Element1", "Element2", "eta", "matrix_unit1", "matrix_unit2", "matrix_unit_factor",
    "membership", "theta", "theta_inverse", "theta_power", "x1", "x2", "y1", "y2",
    "AlgebraError", "parse", "parse_element", "GF", "QQ", "use_field",
    "Automorphism", "ind_component", "index1", "index_block",
    "det_block", "detbar", "full_factor_unit", "unit_inverse",
]
