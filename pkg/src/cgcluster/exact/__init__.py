"""Exact rational / sparse polynomial arithmetic."""
from .linalg import (
    DimensionError,
    PolyMatrix,
    permutation_det,
    poly_det,
    rank_over_Z,
    rational_det,
    rational_inverse,
    solve_rational,
)
from .poly import ONE, ZERO, NotDivisible, Polynomial, X
from .ratfn import RationalFn
from .text import ParseError, format_poly, parse_poly
from .variables import REGISTRY, VarId, atom, chart, entry, param


def poly_divexact(a: Polynomial, b: Polynomial):
    """Exact quotient ``a/b`` or ``None`` when ``b`` does not divide ``a``."""
    try:
        return a.divexact(b)
    except NotDivisible:
        return None


poly_rank_over_Z = rank_over_Z

__all__ = [
    "DimensionError", "NotDivisible", "ONE", "ZERO", "ParseError", "PolyMatrix", "Polynomial",
    "REGISTRY", "RationalFn", "VarId", "X", "atom", "chart", "entry", "format_poly", "param",
    "parse_poly", "permutation_det", "poly_det", "poly_divexact", "poly_rank_over_Z",
    "rank_over_Z", "rational_det", "rational_inverse", "solve_rational",
]
