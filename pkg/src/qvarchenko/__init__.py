"""Exact q-Varchenko matrices of symmetric hyperplane arrangements and their Smith normal forms."""

from .matrix import PolyMat, congruence, determinant
from .poly import PolyQ, PolyZ, parse_poly, render

__all__ = ["PolyMat", "PolyQ", "PolyZ", "congruence", "determinant", "parse_poly", "render"]
__version__ = "0.1.0"
