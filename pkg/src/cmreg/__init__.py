"""Castelnuovo-Mumford regularity of monomial and homogeneous polynomial ideals."""

from .betti import BettiTable
from .field import QQ, FieldSpec
from .groebner import PolyIdeal, colon_ideal, intersect_poly, saturation
from .homology import betti_multigraded, regularity
from .monomial import MonomialIdeal, colon, ideal, ideal_sum, intersect, product
from .parser import ParseError, parse
from .poly import Polynomial, RingSpec
from .resolution import free_resolution, minimal_resolution, minimize, regularity_poly

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "FieldSpec", "MonomialIdeal", "ParseError", "PolyIdeal", "Polynomial", "QQ",
    "RingSpec", "betti_multigraded", "colon", "colon_ideal", "free_resolution", "ideal",
    "ideal_sum", "intersect", "intersect_poly", "minimal_resolution", "minimize", "parse",
    "product", "regularity", "regularity_poly", "saturation",
]
