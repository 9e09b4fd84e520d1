"""Exact Groebner bases, Stanley-Reisner complexes and simplicial homology."""

from combalg.field import QQ, GF, Field, parse_field
from combalg.poly import Polynomial, PolynomialRing, Ideal, monomial_subalgebra_membership
from combalg.orders import MonomialOrder, compare, leading_term
from combalg.parse import parse_polynomial, format_polynomial
from combalg.simplicial import SimplicialComplex
from combalg.homology import reduced_betti, depth_sr, is_cohen_macaulay

__all__ = [
    "QQ",
    "GF",
    "Field",
    "parse_field",
    "Polynomial",
    "PolynomialRing",
    "Ideal",
    "monomial_subalgebra_membership",
    "MonomialOrder",
    "compare",
    "leading_term",
    "parse_polynomial",
    "format_polynomial",
    "SimplicialComplex",
    "reduced_betti",
    "depth_sr",
    "is_cohen_macaulay",
]

__version__ = "0.1.0"
