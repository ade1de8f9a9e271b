"""Exact arithmetic: Q(sqrt(d)) scalars, polynomials and linear algebra."""

from .linalg import (bareiss_det, det_exact, det_poly_matrix, mat_vec,
                     solve_cramer, solve_linear_exact)
from .poly import (Poly, exact_div, format_poly, poly_arith, poly_derivative,
                   poly_gcd, primitive_part, reduce_quadratic_ext)
from .quadext import (QuadExt, is_rational, make, radicand, scalar, sign,
                      split, sqrt_exact)

__all__ = [
    "QuadExt", "Poly", "make", "scalar", "sign", "split", "radicand",
    "is_rational", "sqrt_exact", "poly_arith", "poly_derivative",
    "reduce_quadratic_ext", "poly_gcd", "primitive_part", "exact_div",
    "format_poly", "solve_linear_exact", "solve_cramer", "det_exact",
    "det_poly_matrix", "bareiss_det", "mat_vec",
]
