from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from polysolve import fixtures
from polysolve.errors import DomainError, InvalidSpec
from polysolve.exact_core import make
from polysolve.ode_model import TheoremCase, theorem_case
from polysolve.recurrence_engine import build_recurrence, candidate, necessary_condition_residual

fr = st.fractions(min_value=-6, max_value=6, max_denominator=4)
pos = st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=4)


def _coeffs(expr, r, count):
    poly = sympy.Poly(sympy.expand(expr), r)
    return tuple(Fraction(str(poly.coeff_monomial(r ** k))) for k in range(count))


class TestHeun:
    @given(fr, fr, fr, fr, fr, fr, fr)
    def test_expanded_matches_general_heun(self, a, g, d, eps, al, be, q):
        assume(a not in (0, 1))
        r = sympy.Symbol("r")
        A, G, D, Ep, Al, Be, Q = (sympy.Rational(x.numerator, x.denominator) for x in (a, g, d, eps, al, be, q))
        # y'' + (g/r + d/(r-1) + eps/(r-a)) y' + (al be r - q)/(r (r-1)(r-a)) y = 0, cleared
        P = r * (r - 1) * (r - A)
        Qc = sympy.cancel(P * (G / r + D / (r - 1) + Ep / (r - A)))
        R = -(Al * Be * r - Q)
        spec = fixtures.build_heun(fixtures.HeunParams(a, g, d, eps, al, be, q), alpha2="expanded")
        assert spec.alpha == _coeffs(P, r, 4)
        assert spec.beta == _coeffs(Qc, r, 3)
        assert spec.tau == _coeffs(R, r, 2)

    @given(fr, fr, fr, fr, fr, fr, fr)
    def test_table_mapping(self, c, g, d, eps, al, be, q):
        spec = fixtures.build_heun(fixtures.HeunParams(c, g, d, eps, al, be, q))
        assert spec.n == 3
        assert spec.alpha == (0, c, -(1 - c), 1)
        assert spec.beta == (g * c, -(c * (d + g) + eps + g), d + eps + g)
        assert spec.tau == (q, -al * be)

    def test_table_variant_differs_only_in_alpha2(self):
        p = fixtures.HeunParams(Fraction(1, 3), 1, 2, 3, 4, 5, 6)
        table, expanded = fixtures.build_heun(p), fixtures.build_heun(p, alpha2="expanded")
        assert table.alpha[2] == -(1 - p.c) and expanded.alpha[2] == -(1 + p.c)
        assert (table.beta, table.tau) == (expanded.beta, expanded.tau)
        assert fixtures.build_heun(fixtures.HeunParams(1, 1, 1, 1, 1, 1, 1)).alpha[2] == 0

    def test_case_and_fuchsian(self):
        p = fixtures.HeunParams(2, 1, 1, 1, 1, 1, 0)
        assert theorem_case(fixtures.build_heun(p)) is TheoremCase.CASE2
        assert p.fuchsian

    @given(fr, fr, fr, fr, fr)
    def test_degree_one_needs_tau1_equal_beta2(self, g, d, eps, al, be):
        p = fixtures.HeunParams(2, g, d, eps, al, be, 0)
        spec = fixtures.build_heun(p)
        assert necessary_condition_residual(spec, 1) == spec.tau[1] - spec.beta[2]

    def test_bad_variant(self):
        with pytest.raises(KeyError):
            fixtures.build_heun(fixtures.HeunParams(2, 1, 1, 1, 1, 1, 1), alpha2="other")


class TestDirac:
    @given(pos, fr, fr, pos, pos, pos, st.integers(0, 4))
    def test_rows_match_five_term_recurrence(self, E, l, g, Z, e, B, m):
        M = E + 1
        p = fixtures.DiracParams(E, M, l, g, Z, e, B)
        mat = build_recurrence(fixtures.build_dirac(p), m)
        w = E + M
        for ell in range(m + 3):
            want = {
                ell - 2: E ** 2 - M ** 2 - B * e * (l + g + ell - Fraction(1, 2)),
                ell - 1: Z * e ** 2 * (3 * E - M) - B * e ** 3 * Z * (l + g + ell + Fraction(3, 2)) / w,
                ell: (2 * ell + 1) * g + ell * (ell - 1) - l - p.a * e ** 2 * Z / w - Fraction(1, 2),
                ell + 1: e ** 2 * Z * (1 + ell) * (1 + 2 * g + ell) / w,
            }
            for i in range(m + 1):
                assert mat.entry(ell, i) == want.get(i, 0)

    @given(pos, fr, fr, pos, pos, pos, pos, st.integers(0, 5))
    def test_necessary_condition_is_energy_relation(self, E, l, g, Z, e, B, M, m):
        spec = fixtures.build_dirac(fixtures.DiracParams(E, M, l, g, Z, e, B))
        assert necessary_condition_residual(spec, m) == e * B * (m + l + g + Fraction(3, 2)) + M ** 2 - E ** 2

    def test_energy_levels(self):
        E = fixtures.dirac_energy(1, 2, 0, Fraction(1, 2), 1, 1)
        assert E == make(0, 1, 7)
        spec = fixtures.build_dirac(fixtures.DiracParams(E, 1, 0, Fraction(1, 2), 1, 1, 2))
        assert necessary_condition_residual(spec, 1) == 0
        with pytest.raises(DomainError):
            fixtures.dirac_energy(1, 1, -10, 0, 1, 0)

    def test_common_root_solution(self):
        p = fixtures.DiracParams(E=2, **fixtures.DIRAC_COMMON_ROOT)
        assert candidate(fixtures.build_dirac(p), 0).is_solution

    def test_parametric_instantiates(self):
        pspec = fixtures.build_dirac_parametric(**fixtures.DIRAC_COMMON_ROOT)
        E = Fraction(3)
        concrete = fixtures.build_dirac(fixtures.DiracParams(E=E, **fixtures.DIRAC_COMMON_ROOT))
        inst = pspec.instantiate(E)
        w = E + fixtures.DIRAC_COMMON_ROOT["M"]
        for name in ("alpha", "beta", "tau"):
            assert getattr(inst, name) == tuple(w * v for v in getattr(concrete, name))

    def test_rejects_vanishing_e_plus_m(self):
        with pytest.raises(InvalidSpec):
            fixtures.DiracParams(-1, 1, 0, 0, 1, 1, 1)


class TestInvSqrt:
    @given(fr, pos, st.integers(0, 6))
    def test_necessary_condition(self, l, lam, m):
        spec = fixtures.build_invsqrt(fixtures.InvSqrtParams(l, -lam))
        assert necessary_condition_residual(spec, m) == 4 * (l + 1) + 2 * m - lam ** 2

    def test_on_branch_holds(self):
        for m in range(5):
            p = fixtures.InvSqrtParams.on_nc_branch(Fraction(1, 2), m)
            assert necessary_condition_residual(fixtures.build_invsqrt(p), m) == 0

    def test_lambda_sign(self):
        with pytest.raises(InvalidSpec):
            fixtures.InvSqrtParams(0, 1)


def test_simple_specs():
    assert fixtures.hermite_spec(3).tau == (-6,)
    assert fixtures.cauchy_euler_spec().alpha == (0, 0, 1)
    assert theorem_case(fixtures.heun_example_spec()) is TheoremCase.CASE2
