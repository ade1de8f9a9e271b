"""Independent checks: exact substitution and series comparison.

Nothing here uses the recurrence matrix.  ``residual_polynomial`` expands
``P y'' + Q y' - R y`` with plain polynomial arithmetic, so agreement with
the engine is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DomainError, InvalidExponent, PoleInParameters
from .exact_core import Poly, scalar
from .ode_model import TheoremCase, theorem_case

REL_TOL = 1e-12
ABS_TOL = 1e-14


@dataclass(frozen=True)
class ResidualReport:
    residual: Poly
    is_zero: bool


def _is_nonneg_int(s):
    return isinstance(s, Fraction) and s.denominator == 1 and s >= 0


def residual_polynomial(spec, s, coeffs):
    """Return ``B(r)`` with ``P y'' + Q y' - R y = r**(s-2) * B(r)`` for
    ``y = r**s * sum(C_i r**i)``.

    >>> from polysolve.ode_model import OdeSpec
    >>> residual_polynomial(OdeSpec(3, [0, 1, 1, 1], [1, 3, 2], [2, 2]), 0, [1, 2]).is_zero
    True
    """
    s = scalar(s)
    if not _is_nonneg_int(s) and theorem_case(spec) in (TheoremCase.CASE1, TheoremCase.UNSUPPORTED):
        raise InvalidExponent(f"exponent {s} needs a regular singular origin")
    y0 = Poly(coeffs)
    y1 = Poly([c * (i + s) for i, c in enumerate(y0.coeffs)])
    y2 = Poly([c * (i + s) * (i + s - 1) for i, c in enumerate(y0.coeffs)])
    r = Poly.x()
    B = spec.P * y2 + r * spec.Q * y1 - r * r * spec.R * y0
    return ResidualReport(B, not B.coeffs)


def verify_candidate(spec, cand, strict=True):
    """True iff the candidate is an exact degree-m solution.

    With ``strict`` (the default) a disagreement between this check and the
    engine's own verdict raises :class:`ConsistencyError`.
    """
    if cand.coeffs is None:
        if strict and cand.is_solution:
            raise ConsistencyError("solution flagged without coefficients")
        return False
    rep = residual_polynomial(spec, cand.s, cand.coeffs)
    expected = rep.is_zero and bool(cand.coeffs[-1])
    if strict and expected != cand.is_solution:
        raise ConsistencyError(
            f"engine says is_solution={cand.is_solution} at s={cand.s}, m={cand.m}; "
            f"substitution gives residual {rep.residual}")
    return expected and cand.is_solution


def _prefactor(x, lam):
    if isinstance(lam, Fraction) and lam.denominator == 1:
        if x == 0 and lam < 0:
            raise DomainError("x**lambda diverges at x = 0")
        return float(x) ** int(lam)
    if x < 0:
        raise DomainError("x**lambda is not real for negative x")
    return float(x) ** float(lam)


def _upper_factor(rep, k):
    if rep.upper_params is not None:
        out = Fraction(1)
        for a in rep.upper_params:
            out = out * (k + a)
        return scalar(out)
    return scalar(rep.upper_poly(Fraction(k)))


def hypergeometric_term_ratios(rep, count):
    """Exact ratios ``t_{k+1}/t_k`` (without the ``x**h`` factor) for
    ``k = 0..count-1``, built only from the parameters.
    """
    out = []
    for k in range(count):
        den = Fraction(k + 1)
        for b in rep.lower_params:
            den = den * (k + b)
        den = scalar(den)
        num = _upper_factor(rep, k)
        if not den:
            if not num:
                out.append(None)
                continue
            raise PoleInParameters(f"lower parameter hits a non-positive integer at k={k}")
        out.append(scalar(rep.argument_scale * num / den))
    return out


def _hyp_partial_sums(rep, x, terms, exact=False):
    """Partial sums of the series factor from the term-ratio recurrence,
    either exactly (``x`` rational) or in double precision.
    """
    if exact:
        z, term, total = scalar(rep.argument_scale * x ** rep.power_h), Fraction(1), Fraction(0)
    else:
        z, term, total = rep.argument_scale_float * x ** rep.power_h, 1.0, 0.0
    sums = []
    for k in range(terms):
        total = scalar(total + term) if exact else total + term
        sums.append(total)
        if not term:
            continue
        den = Fraction(k + 1)
        for b in rep.lower_params:
            den = den * (k + b)
        den = scalar(den)
        num = _upper_factor(rep, k)
        if not den:
            if not num:
                term = 0 * term
                continue
            raise PoleInParameters(f"lower parameter hits a non-positive integer at k={k}")
        term = scalar(term * num / den * z) if exact else term * float(num) / float(den) * z
    return sums


def hypergeometric_partial_sum(rep, x, terms):
    """``x**lambda * sum(t_k x**(h k), k < terms)`` in double precision."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    return _prefactor(x, rep.prefactor_exponent) * _hyp_partial_sums(rep, x, terms)[-1]


def compare_series(rec, rep, x, terms, exact=True):
    """Largest gap between the partial sums of the two-term recurrence and
    of the hypergeometric form, over 1..terms terms.

    Both representations share the factor ``x**lambda``, so the comparison
    is made on the series factors alone.  The recurrence side is summed
    exactly.  The hypergeometric side is built from its parameters by the
    term-ratio recurrence, exactly at the rational point ``x`` by default or
    in double precision with ``exact=False``; partial sums are rounded to
    float only for the comparison.
    """
    from .scheffe import series_coefficients

    if rec.lam != rep.prefactor_exponent or rec.h != rep.power_h:
        raise ValueError("recurrence and hypergeometric form belong to different branches")
    h = rec.h
    xq = Fraction(x)
    coeffs = series_coefficients(rec, h * (terms - 1))
    hyp = [float(v) for v in _hyp_partial_sums(rep, xq if exact else float(x), terms, exact)]
    worst, total, power = 0.0, Fraction(0), Fraction(1)
    for k in range(terms):
        total = scalar(total + coeffs[h * k] * power)
        power *= xq ** h
        worst = max(worst, abs(float(total) - hyp[k]))
    return worst


def within_tolerance(deviation, reference):
    return deviation <= max(REL_TOL * abs(reference), ABS_TOL)
