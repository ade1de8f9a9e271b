"""Exact linear algebra over Q(sqrt(d)) and over polynomial rings."""

from __future__ import annotations

from fractions import Fraction

from ..errors import InvariantViolation, SingularSystem
from .poly import Poly, exact_div
from .quadext import scalar


def solve_linear_exact(A, rhs):
    """Solve ``A x = rhs`` by Gaussian elimination with exact scalars.

    Raises :class:`SingularSystem` (carrying the rank) when the solution is
    not unique.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(rhs) != n:
        raise ValueError("solve_linear_exact needs a square system")
    M = [[scalar(v) for v in row] + [scalar(b)] for row, b in zip(A, rhs)]
    rank = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(rank, n) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][col]
        M[rank] = [v * inv for v in M[rank]]
        for r in range(n):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
    if rank < n:
        raise SingularSystem(rank, n)
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = M[r][n]
    return x


def bareiss_det(M, divide):
    """Fraction-free determinant of a square matrix over an integral domain.

    ``divide(a, b)`` must return the exact quotient a/b.
    """
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((r for r in range(k + 1, n) if A[r][k]), None)
            if swap is None:
                return A[k][k] * 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = v if prev is None else divide(v, prev)
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def det_exact(M):
    """Determinant of a scalar matrix."""
    M = [[scalar(v) for v in row] for row in M]
    return scalar(bareiss_det(M, lambda a, b: a / b)) if M else Fraction(1)


def _poly_div(a, b):
    try:
        return exact_div(a, b)
    except ArithmeticError as exc:
        raise InvariantViolation("Bareiss division left a remainder") from exc


def det_poly_matrix(M):
    """Determinant of a square matrix of :class:`Poly` entries.

    >>> t = Poly.x()
    >>> det_poly_matrix([[t, Poly([1])], [Poly([2]), t]])
    Poly([Fraction(-2, 1), Fraction(0, 1), Fraction(1, 1)])
    """
    if not M:
        return Poly([1])
    P = [[e if isinstance(e, Poly) else Poly([e]) for e in row] for row in M]
    return bareiss_det(P, _poly_div)


def solve_cramer(A, rhs):
    """Cramer's rule; each unknown is a ratio of determinants."""
    n = len(A)
    D = det_exact(A)
    if not D:
        # report the rank through the elimination path
        solve_linear_exact(A, rhs)
        raise SingularSystem(n - 1, n)
    x = []
    for j in range(n):
        Aj = [[rhs[i] if c == j else A[i][c] for c in range(n)] for i in range(n)]
        x.append(scalar(det_exact(Aj) / D))
    return x


def mat_vec(A, x):
    return [scalar(sum((a * b for a, b in zip(row, x)), Fraction(0))) for row in A]
