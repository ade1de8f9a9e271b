"""Acceptance criteria 1-11, one test each, at the stated tolerances."""

import random
from fractions import Fraction

import pytest

from helpers import rand_q
from oracles import binomial_row, leibniz_det, ode_residual, poly_add, poly_mul
from polysolve import fixtures
from polysolve.conditions import invsqrt_nonexistence
from polysolve.errors import DegenerateSystem, NoRealIndicialRoot
from polysolve.exact_core import Poly
from polysolve.ode_model import (OdeSpec, SingularityClass, TheoremCase, classify_origin,
                                 count_classes, indicial_roots, theorem_case)
from polysolve.recurrence_engine import (build_recurrence, candidate, evaluate_conditions,
                                         find_polynomial_solutions, necessary_condition_residual,
                                         solve_coefficients)
from polysolve.scheffe import (detect_scheffe, generic_families, hypergeometric_params,
                               indicial_roots_scheffe, series_coefficients, termination_degree,
                               two_term_recurrence)
from polysolve.verifier import compare_series, residual_polynomial, verify_candidate


def _random_spec(rng, n, case=None):
    while True:
        alpha = [rand_q(rng) for _ in range(n + 1)]
        beta = [rand_q(rng) for _ in range(n)]
        tau = [rand_q(rng) for _ in range(n - 1)]
        if case == "case1":
            alpha[0] = rand_q(rng, nonzero=True)
        elif case == "case2":
            alpha[0] = 0
            alpha[1] = rand_q(rng, nonzero=True)
        elif case == "case3":
            alpha[0] = alpha[1] = beta[0] = 0
            alpha[2] = rand_q(rng, nonzero=True)
        if alpha[n] or beta[n - 1]:
            return OdeSpec(n, alpha, beta, tau)


# -- 1 ------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_c01_necessary_condition_identity():
    rng = random.Random(1)
    for n in range(2, 7):
        for m in range(9):
            for _ in range(100):
                spec = _random_spec(rng, n)
                a, b, t = spec.alpha, spec.beta, spec.tau
                expected = t[n - 2] - a[n] * m * (m - 1) - b[n - 1] * m
                assert necessary_condition_residual(spec, m, 0) == expected


# -- 2 ------------------------------------------------------------------------

def _worked_n4(a, b, t, m):
    """Displayed determinants for the n = 4 worked example, entry by entry."""
    if m == 1:
        S1 = [[-t[0], b[0]], [-t[1], b[1] - t[0]]]
        S2 = [[-t[0], b[0]], [-t[2], b[2] - t[1]]]
        nc = b[3] - t[2]  # tau_2 = beta_3, written as an expression
        return S1, S2, nc
    if m == 2:
        top = [[-t[0], b[0], 2 * a[0]], [-t[1], b[1] - t[0], 2 * (a[1] + b[0])]]
        S1 = top + [[-t[2], b[2] - t[1], 2 * (a[2] + b[1]) - t[0]]]
        S2 = top + [[0, b[3] - t[2], 2 * (a[3] + b[2]) - t[1]]]
        nc = 2 * a[4] + 2 * b[3] - t[2]
        return S1, S2, nc
    top = [[-t[0], b[0], 2 * a[0], 0],
           [-t[1], b[1] - t[0], 2 * (a[1] + b[0]), 6 * a[0]],
           [-t[2], b[2] - t[1], 2 * (a[2] + b[1]) - t[0], 3 * (2 * a[1] + b[0])]]
    S1 = top + [[0, b[3] - t[2], 2 * (a[3] + b[2]) - t[1], 6 * a[2] + 3 * b[1] - t[0]]]
    S2 = top + [[0, 0, 2 * (a[4] + b[3]) - t[2], 6 * a[3] + 3 * b[2] - t[1]]]
    nc = 6 * a[4] + 3 * b[3] - t[2]
    return S1, S2, nc


@pytest.mark.criterion(2)
def test_c02_n4_worked_conditions():
    rng = random.Random(2)
    for m in (1, 2, 3):
        done = 0
        while done < 50:
            spec = _random_spec(rng, 4, "case1")
            a, b, t = spec.alpha, spec.beta, spec.tau
            mat = build_recurrence(spec, m)
            A = [[mat.entries[l][i] for i in range(1, m + 1)] for l in range(m)]
            det_a = leibniz_det(A)
            if not det_a:
                continue
            coeffs = solve_coefficients(mat)
            report = evaluate_conditions(mat, coeffs)
            S1, S2, nc = _worked_n4(a, b, t, m)
            # the scalar relating each displayed determinant to the engine
            # residual is (-1)^m det(A), nonzero by construction
            scale = (-1) ** m * det_a
            assert report.labels == ("S1", "S2", "NC")
            assert leibniz_det(S1) == scale * report.residuals[0]
            assert leibniz_det(S2) == scale * report.residuals[1]
            assert report.residuals[2] == nc * coeffs[m]
            assert necessary_condition_residual(spec, m) == -nc
            if m == 1:
                assert coeffs[1] == t[0] / b[0]
            done += 1


# -- 3, 4 ---------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_c03_heun_fixture():
    spec = OdeSpec(3, [0, 1, 1, 1], [1, 3, 2], [2, 2])
    sols = [c for c in find_polynomial_solutions(spec, 6) if c.is_solution]
    assert len(sols) == 1
    (sol,) = sols
    assert (sol.s, sol.m, sol.coeffs) == (0, 1, (1, 2))
    assert residual_polynomial(spec, 0, sol.coeffs).is_zero
    assert verify_candidate(spec, sol)


@pytest.mark.criterion(4)
def test_c04_hermite_fixture():
    spec = OdeSpec(2, [1, 0, 0], [0, -2], [-4])
    sols = [c for c in find_polynomial_solutions(spec, 6) if c.is_solution]
    assert [(c.m, c.coeffs) for c in sols] == [(2, (1, 0, -2))]
    assert residual_polynomial(spec, 0, sols[0].coeffs).is_zero
    assert ode_residual([1], [0, -2], [-4], [1, 0, -2]) == []


# -- 5 ------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_c05_invsqrt_nonexistence():
    l = 0
    for m in range(7):
        p = fixtures.InvSqrtParams.on_nc_branch(l, m)
        spec = fixtures.build_invsqrt(p)
        assert necessary_condition_residual(spec, m) == 0
        delta = invsqrt_nonexistence(l, m)
        assert delta != 0
        if m == 1:
            assert delta == 84
        cand = candidate(spec, m)
        assert not cand.is_solution
        assert not verify_candidate(spec, cand)
        # neither indicial branch yields a solution up to a generous degree
        assert not [c for c in find_polynomial_solutions(spec, m + 4) if c.is_solution]


# -- 6 ------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_c06_dirac_necessary_condition():
    rng = random.Random(6)
    draws = 0
    while draws < 20:
        e, B, M, Z = (rand_q(rng, 1, 9, 4) for _ in range(4))
        l, gamma = rand_q(rng, -3, 6, 4), rand_q(rng, 1, 6, 4)
        try:
            energies = [fixtures.dirac_energy(e, B, l, gamma, M, m) for m in range(3)]
        except Exception:
            continue
        for m, E in enumerate(energies):
            on = fixtures.build_dirac(fixtures.DiracParams(E, M, l, gamma, Z, e, B))
            assert necessary_condition_residual(on, m) == 0
            for E_off in (E + Fraction(1, 7), rand_q(rng, 1, 20, 3)):
                if E_off + M == 0:
                    continue
                off = fixtures.build_dirac(fixtures.DiracParams(E_off, M, l, gamma, Z, e, B))
                closed = e * B * (m + l + gamma + Fraction(3, 2)) + M * M - E_off * E_off
                assert necessary_condition_residual(off, m) == closed
                assert (necessary_condition_residual(off, m) == 0) == (E_off * E_off == E * E)
        draws += 1


# -- 7 ------------------------------------------------------------------------

def _q(rng):
    return rand_q(rng, nonzero=True)


@pytest.mark.criterion(7)
def test_c07_scheffe_census():
    rng = random.Random(7)
    for _ in range(20):
        a0, a1, a2, a3, b0, b1, b2, g0, g1 = (_q(rng) for _ in range(9))
        families = [
            ((Poly([0, a1, a2]), Poly([b0, b1]), Poly([g0])), (1, 1)),
            ((Poly([a0, 0, a2]), Poly([0, b1]), Poly([g0])), (2, 2)),
            ((Poly([0, 0, a2, a3]), Poly([0, b1, b2]), Poly([g0, g1])), (0, 1)),
            ((Poly([0, a1, 0, a3]), Poly([b0, 0, b2]), Poly([0, g1])), (1, 2)),
            ((Poly([a0, 0, 0, a3]), Poly([0, 0, b2]), Poly([0, g1])), (2, 3)),
        ]
        for (p2, p1, p0), mh in families:
            form = detect_scheffe(p2, p1, p0)
            assert (form.m_shift, form.h) == mh
    for n in range(2, 6):
        temps = generic_families(n)
        assert len(temps) == n
        for tpl in temps:
            values = {name: _q(rng) for name in tpl.parameters}
            form = detect_scheffe(*tpl.instantiate(values))
            assert (form.m_shift, form.h) == (tpl.m_shift, tpl.h)
            assert form.h == n + form.m_shift - 2


# -- 8 ------------------------------------------------------------------------

def _series_instances(rng, kind, count):
    out = []
    while len(out) < count:
        if kind == "3.10":
            a1, a2, b0, b1, g0 = (_q(rng) for _ in range(5))
            polys = (Poly([0, a1, a2]), Poly([b0, b1]), Poly([g0]))
        else:
            a0, a2, b1, g0 = (_q(rng) for _ in range(4))
            polys = (Poly([a0, 0, a2]), Poly([0, b1]), Poly([g0]))
        form = detect_scheffe(*polys)
        try:
            reps = []
            for lam in indicial_roots_scheffe(form):
                rec = two_term_recurrence(form, lam)
                rep = hypergeometric_params(form, lam)
                series_coefficients(rec, 30 * form.h)
                reps.append((rec, rep))
        except Exception:
            continue
        out.append((form, reps))
    return out


@pytest.mark.criterion(8)
def test_c08_two_term_hypergeometric():
    rng = random.Random(8)
    checked = 0
    for kind in ("3.10", "3.12"):
        for form, reps in _series_instances(rng, kind, 20):
            for rec, rep in reps:
                scale = abs(rep.argument_scale)
                x = Fraction(1)
                while scale * x ** form.h > Fraction(1, 2):
                    x /= 2
                dev = compare_series(rec, rep, float(x), 30)
                assert dev <= 1e-12
                checked += 1
    assert checked >= 40
    # Legendre instance: the lambda = 1 branch is exactly u = r
    form = detect_scheffe(Poly([1, 0, -1]), Poly([0, -2]), Poly([2]))
    rec = two_term_recurrence(form, 1)
    coeffs = series_coefficients(rec, 40)
    assert coeffs == [1] + [0] * 40
    assert termination_degree(rec) == 2
    assert rec.lam + termination_degree(rec) - rec.h == 1


# -- 9 ------------------------------------------------------------------------

def _constructed(rng):
    """A spec with the known solution (r - a)^m, m >= 2."""
    while True:
        n = rng.randint(2, 4)
        m = rng.randint(2, 5)
        a = rand_q(rng, nonzero=True)
        Q = [rand_q(rng) for _ in range(n)]
        R = [rand_q(rng) for _ in range(n - 1)]
        # P m(m-1) = R (r-a)^2 - m Q (r-a)
        lin = [-a, Fraction(1)]
        rhs = poly_add(poly_mul(R, poly_mul(lin, lin)), [-m * c for c in poly_mul(Q, lin)])
        P = [c / (m * (m - 1)) for c in rhs] + [Fraction(0)] * (n + 1 - len(rhs))
        try:
            spec = OdeSpec(n, P[:n + 1], Q, R)
        except Exception:
            continue
        if theorem_case(spec) is TheoremCase.CASE1:
            return spec, m, a


@pytest.mark.criterion(9)
def test_c09_oracle_equivalence():
    rng = random.Random(9)
    instances = []
    while len(instances) < 100:
        n = rng.randint(2, 4)
        spec = _random_spec(rng, n, rng.choice(["case1", "case2", "case3"]))
        try:
            roots = indicial_roots(spec).roots
        except NoRealIndicialRoot:
            continue
        instances.append((spec, rng.randint(0, 4), rng.choice(roots), None))
    while len(instances) < 200:
        spec, m, a = _constructed(rng)
        instances.append((spec, m, Fraction(0), a))
    found = 0
    for spec, m, s, a in instances:
        results = []
        for method in ("elimination", "cramer"):
            try:
                results.append(candidate(spec, m, s, method))
            except DegenerateSystem:
                results.append(None)
        elim, cram = results
        assert (elim is None) == (cram is None)
        if elim is None:
            continue
        assert elim.coeffs == cram.coeffs
        assert elim.is_solution == cram.is_solution
        exact = residual_polynomial(spec, s, elim.coeffs).is_zero and elim.coeffs[-1] != 0
        assert exact == elim.is_solution
        verify_candidate(spec, elim)
        if a is not None:
            assert elim.is_solution
            assert list(elim.coeffs) == binomial_row(a, m)
            found += 1
    assert found >= 90


# -- 10 -----------------------------------------------------------------------

@pytest.mark.criterion(10)
def test_c10_cauchy_euler_grid():
    for a2 in range(-5, 6):
        if not a2:
            continue
        for b1 in range(-5, 6):
            for t0 in range(-5, 6):
                spec = OdeSpec(2, [0, 0, a2], [0, b1], [t0])
                try:
                    roots = indicial_roots(spec).roots
                except NoRealIndicialRoot:
                    # complex exponents are outside the real-root scan
                    continue
                reported = {(c.s, c.m) for c in find_polynomial_solutions(spec, 4) if c.is_solution}
                expected = {(s, m) for s in roots for m in range(5)
                            if a2 * (m + s) * (m + s - 1) + b1 * (m + s) - t0 == 0}
                assert reported == expected


# -- 11 -----------------------------------------------------------------------

def _expected_class(case):
    return {TheoremCase.CASE1: SingularityClass.ORDINARY,
            TheoremCase.CASE2: SingularityClass.REGULAR_SINGULAR,
            TheoremCase.CASE3: SingularityClass.REGULAR_SINGULAR,
            TheoremCase.UNSUPPORTED: SingularityClass.IRREGULAR}[case]


@pytest.mark.criterion(11)
def test_c11_classification_census():
    for n in range(2, 11):
        assert sum(count_classes(n)) == 2 ** (n + 1) - 1
    for n in range(2, 6):
        for b0 in (0, 1):
            tally = {cls: 0 for cls in SingularityClass}
            for mask in range(1, 2 ** (n + 1)):
                alpha = [(mask >> k) & 1 for k in range(n + 1)]
                beta = [b0] + [0] * (n - 2) + [1]
                spec = OdeSpec(n, alpha, beta, [0] * (n - 1))
                verdict = classify_origin(spec)
                assert verdict is _expected_class(theorem_case(spec))
                tally[verdict] += 1
            if b0 == 0:
                assert (tally[SingularityClass.ORDINARY], tally[SingularityClass.REGULAR_SINGULAR],
                        tally[SingularityClass.IRREGULAR]) == count_classes(n)
