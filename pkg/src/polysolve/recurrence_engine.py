"""Banded linear system for degree-m polynomial solutions.

Substituting ``y = r**s * sum(C_i r**i, i=0..m)`` into the equation and
collecting the coefficient of ``r**(l+s)`` gives one linear equation per
``l = 0..m+n-2``.  Row ``l`` of :class:`RecurrenceMatrix` holds the
coefficients of ``C_0..C_m`` in that equation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateSystem, InvalidExponent, InvariantViolation, SingularSystem
from .exact_core import scalar, solve_cramer, solve_linear_exact
from .ode_model import TheoremCase, indicial_polynomial, indicial_roots, theorem_case


def recurrence_entry(alpha, beta, tau, l, i, s):
    """Coefficient of ``C_i`` in the equation for ``r**(l+s)``.

    Works for any ring where the sequences live (scalars or Poly in an
    unknown); indices outside a sequence contribute zero.
    """
    def at(seq, k):
        return seq[k] if 0 <= k < len(seq) else 0

    e = i + s
    return at(alpha, l - i + 2) * (e * (e - 1)) + at(beta, l - i + 1) * e - at(tau, l - i)


@dataclass(frozen=True)
class RecurrenceMatrix:
    entries: tuple
    s: object
    case: TheoremCase
    m: int
    spec: object = field(repr=False)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return self.m + 1

    def entry(self, l, i):
        return self.entries[l][i]

    def coefficient_rows(self):
        """Rows used to solve for C_1..C_m.

        In Case3 row 0 is the indicial equation itself and is identically
        satisfied, so the solve uses rows 1..m instead.
        """
        start = 1 if self.case is TheoremCase.CASE3 else 0
        return range(start, start + self.m)

    def condition_rows(self):
        return range(self.m, self.m + self.spec.n - 1)

    def apply(self, coeffs):
        """Row residuals of the full matrix applied to ``coeffs``."""
        return [scalar(sum((a * c for a, c in zip(row, coeffs)), Fraction(0)))
                for row in self.entries]


@dataclass(frozen=True)
class ConditionReport:
    rows: tuple
    labels: tuple
    residuals: tuple

    @property
    def sufficient(self):
        return self.residuals[:-1]

    @property
    def necessary(self):
        return self.residuals[-1]

    def items(self):
        return list(zip(self.labels, self.rows, self.residuals))


@dataclass(frozen=True)
class PolySolutionCandidate:
    s: object
    m: int
    coeffs: tuple | None
    sufficient_residuals: tuple = ()
    necessary_residual: object = None
    is_solution: bool = False
    note: str | None = None
    error: str | None = None
    verified: bool | None = None

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)


def _check_exponent(spec, case, s):
    if not case.supported:
        # theorem_case already rejected; let indicial_roots raise the typed error
        indicial_roots(spec)
    if case is TheoremCase.CASE1:
        if s != 0:
            raise InvalidExponent("an ordinary point only admits s = 0")
        return
    if indicial_polynomial(spec)(s) != 0:
        raise InvalidExponent(f"s = {s} is not an indicial root")


def build_recurrence(spec, m, s=0):
    """Assemble the ``(m+n-1) x (m+1)`` system for exponent ``s``.

    >>> from polysolve.ode_model import OdeSpec
    >>> build_recurrence(OdeSpec(2, [1, 0, 0], [0, -2], [-4]), 0).entries
    ((Fraction(4, 1),),)
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    case = theorem_case(spec)
    s = scalar(s)
    _check_exponent(spec, case, s)
    n = spec.n
    entries = tuple(
        tuple(scalar(recurrence_entry(spec.alpha, spec.beta, spec.tau, l, i, s))
              for i in range(m + 1))
        for l in range(m + n - 1)
    )
    return RecurrenceMatrix(entries, s, case, m, spec)


def _coefficient_system(mat):
    rows = mat.coefficient_rows()
    A = [[mat.entries[l][i] for i in range(1, mat.m + 1)] for l in rows]
    rhs = [-mat.entries[l][0] for l in rows]
    return A, rhs


def _forward_substitute(A, rhs):
    """Solve a lower-triangular system, resolving zero pivots.

    A zero pivot with a consistent right-hand side leaves that coefficient
    free: it is set to 1 when it is the leading coefficient and to 0
    otherwise.
    """
    k = len(A)
    x = []
    for r in range(k):
        if any(A[r][c] for c in range(r + 1, k)):
            raise InvariantViolation("coefficient subsystem is not lower triangular")
        acc = rhs[r] - sum((A[r][c] * x[c] for c in range(r)), Fraction(0))
        if A[r][r]:
            x.append(scalar(acc / A[r][r]))
        elif acc:
            raise DegenerateSystem(f"row {r} has a zero pivot and an inconsistent right-hand side")
        else:
            x.append(Fraction(1) if r == k - 1 else Fraction(0))
    return x


def solve_coefficients(mat, method="elimination"):
    """Return ``[C_0, ..., C_m]`` with ``C_0 = 1``.

    ``method`` selects Gaussian elimination or Cramer's rule; both are exact
    and agree whenever the subsystem is nonsingular.
    """
    if mat.m == 0:
        return [Fraction(1)]
    solver = {"elimination": solve_linear_exact, "cramer": solve_cramer}[method]
    A, rhs = _coefficient_system(mat)
    try:
        x = solver(A, rhs)
    except SingularSystem as exc:
        if mat.case is TheoremCase.CASE1:
            raise DegenerateSystem(f"coefficient subsystem is singular (rank {exc.rank})") from exc
        x = _forward_substitute(A, rhs)
    return [Fraction(1)] + list(x)


def evaluate_conditions(mat, coeffs):
    """Residuals of rows ``m..m+n-2``: S1..S(n-2) then NC."""
    rows = tuple(mat.condition_rows())
    n = mat.spec.n
    labels = tuple(f"S{k + 1}" for k in range(n - 2)) + ("NC",)
    residuals = tuple(
        scalar(sum((mat.entries[l][i] * coeffs[i] for i in range(mat.m + 1)), Fraction(0)))
        for l in rows
    )
    return ConditionReport(rows, labels, residuals)


def necessary_condition_residual(spec, m, s=0):
    """``tau_{n-2} - alpha_n (m+s)(m+s-1) - beta_{n-1} (m+s)``."""
    n = spec.n
    e = m + scalar(s)
    return scalar(spec.tau[n - 2] - spec.alpha[n] * e * (e - 1) - spec.beta[n - 1] * e)


def candidate(spec, m, s=0, method="elimination"):
    """Build, solve and judge one ``(s, m)`` pair."""
    mat = build_recurrence(spec, m, s)
    coeffs = solve_coefficients(mat, method)
    report = evaluate_conditions(mat, coeffs)
    nc = necessary_condition_residual(spec, m, mat.s)
    lead = coeffs[-1]
    ok = not any(report.sufficient) and not report.necessary and not nc
    note = None
    if ok and not lead:
        note = "C_m vanishes: duplicate of a lower-degree solution"
    return PolySolutionCandidate(
        s=mat.s, m=m, coeffs=tuple(coeffs), sufficient_residuals=report.sufficient,
        necessary_residual=nc, is_solution=bool(ok and lead), note=note,
    )


def find_polynomial_solutions(spec, m_max, method="elimination"):
    """Scan every indicial root and every degree ``0..m_max``.

    Degenerate ``(s, m)`` pairs are reported with their ``error`` field set
    instead of aborting the scan.  Results are ordered by root, then degree.
    """
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    out = []
    for s in indicial_roots(spec).roots:
        for m in range(m_max + 1):
            try:
                out.append(candidate(spec, m, s, method))
            except DegenerateSystem as exc:
                out.append(PolySolutionCandidate(s=s, m=m, coeffs=None, error=str(exc)))
    return out


def solutions(cands):
    return [c for c in cands if c.is_solution]
