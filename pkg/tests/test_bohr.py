import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bohrlab.bohr import (BASE_SLACK, algebra_properties_check, bohr_operator,
                          bohr_radius_solve, cauchy_tail_bound,
                          classical_bohr_check, littlewood_check,
                          main_theorem_check, polynomial_sup,
                          shift_polynomial, von_neumann_check)
from bohrlab.errors import BracketError, DomainError, HypothesisViolation
from bohrlab.generators import (identity_schwarz, make_large_function,
                                random_mobius_bounded, random_schwarz)
from bohrlab.geometry import boundary_distance
from bohrlab.modular import E_PI
from bohrlab.series import TruncatedSeries, geometric_series


# -- majorant operator -------------------------------------------------------


def test_operator_oracle():
    f = TruncatedSeries([1.0, -2.0, 4.0j])
    assert bohr_operator(f, 0.5) == pytest.approx(1 + 1 + 1)
    assert bohr_operator(f, 0.5, from_degree=1) == pytest.approx(2.0)


def test_operator_validation():
    f = TruncatedSeries([1.0])
    with pytest.raises(DomainError):
        bohr_operator(f, 1.0)
    with pytest.raises(DomainError):
        bohr_operator(f, 0.5, from_degree=2)


@given(st.floats(0, 0.9), st.lists(st.floats(-3, 3), min_size=1, max_size=6))
@settings(max_examples=50, deadline=None)
def test_operator_monotone_in_r(r, coeffs):
    f = TruncatedSeries(coeffs)
    assert bohr_operator(f, r) <= bohr_operator(f, 0.95) + 1e-12


def test_tail_bound_dominates_geometric_tail():
    # f = 1/(1-z): the degree->order tail at r is r^{order+1}/(1-r).
    order, r, rho = 10, 0.2, 0.5

    def f_eval(z):
        return 1.0 / (1.0 - z)

    true_tail = r ** (order + 1) / (1 - r)
    bound = cauchy_tail_bound(f_eval, rho, order, r)
    assert true_tail <= bound
    assert bound < 1e-3


def test_tail_bound_validation():
    with pytest.raises(DomainError):
        cauchy_tail_bound(lambda z: z, 0.2, 4, 0.5)


# -- radius solver -----------------------------------------------------------


def test_radius_recovers_exp_minus_pi():
    res = bohr_radius_solve()
    assert abs(res.radius - math.exp(-math.pi)) < 1e-9
    assert abs(res.residual) < 1e-12


def test_radius_bad_bracket():
    with pytest.raises(BracketError):
        bohr_radius_solve(bracket=(0.2, 0.3))
    with pytest.raises(DomainError):
        bohr_radius_solve(order=50)


# -- subordination / coefficient domination ----------------------------------


def test_littlewood_identity_is_tight():
    rep = littlewood_check(identity_schwarz(), 40)
    assert rep.passed
    assert rep.max_ratio == pytest.approx(1.0, abs=1e-12)


def test_littlewood_random_schwarz():
    for seed in range(6):
        phi = random_schwarz(seed, 1 + seed % 4)
        rep = littlewood_check(phi, 64, kmax=40)
        assert rep.passed, phi.text()
        assert rep.max_ratio <= 1.0 + BASE_SLACK


# -- the main inequality -----------------------------------------------------


def test_main_check_passes_for_central_spec():
    spec = make_large_function(0.0, 1.0, math.pi, identity_schwarz(), 64)
    rep = main_theorem_check(spec)
    assert rep.passed
    assert rep.rhs == pytest.approx(0.5, abs=1e-12)


def test_main_check_fails_near_puncture():
    # With a small covering parameter the base point sits close to an
    # omitted value and the coefficient sum overshoots the distance: the
    # asserted inequality is genuinely false there, and the check must
    # report that rather than mask it.
    spec = make_large_function(0.0, 1.0, 1.0, identity_schwarz(), 64)
    rep = main_theorem_check(spec)
    assert not rep.passed
    assert rep.lhs > (rep.rhs + rep.rhs_error) * 1.2


def test_main_check_rejects_large_radius():
    spec = make_large_function(0.0, 1.0, math.pi, identity_schwarz(), 64)
    with pytest.raises(DomainError):
        main_theorem_check(spec, r=0.1)


def test_main_check_scale_invariance():
    spec = make_large_function(0.0, 1.0, math.pi, identity_schwarz(), 64)
    rep1 = main_theorem_check(spec)
    rep2 = main_theorem_check(spec.scaled(3.0))
    assert rep2.lhs == pytest.approx(3 * rep1.lhs, rel=1e-10)
    assert rep2.rhs == pytest.approx(3 * rep1.rhs, rel=1e-10)


# -- polynomial calculus -----------------------------------------------------


def test_shift_polynomial_oracle():
    # p(w) = w^2, shifted by c: c^2 + 2cw + w^2
    p = TruncatedSeries([0.0, 0.0, 1.0])
    s = shift_polynomial(p, 3.0)
    assert np.allclose(s.coeffs, [9.0, 6.0, 1.0])


def test_polynomial_sup_oracle():
    p = TruncatedSeries([1.0, 1.0])
    assert polynomial_sup(p) == pytest.approx(2.0, rel=1e-6)


def test_von_neumann_normalized_spec():
    spec = make_large_function(0.0, 1.0, math.pi, identity_schwarz(), 64)
    m = bohr_operator(spec.series, E_PI)
    d = boundary_distance(spec).value
    spec = spec.scaled(0.3 / max(m, d))
    for p in (TruncatedSeries([0.0, 1.0]), TruncatedSeries([0.0, 0.0, 1.0]),
              TruncatedSeries([0.5, -0.25, 0.125])):
        rep = von_neumann_check(spec, p)
        assert rep.passed, rep


def test_von_neumann_hypothesis_guard():
    spec = make_large_function(0.0, 1.0, math.pi, identity_schwarz(), 64)
    with pytest.raises(HypothesisViolation):
        von_neumann_check(spec.scaled(10.0), TruncatedSeries([0.0, 1.0]))


# -- classical sanity and algebra -------------------------------------------


def test_classical_bohr_on_mobius():
    for seed in range(10):
        rep = classical_bohr_check(random_mobius_bounded(seed))
        assert rep.passed
        assert rep.lhs <= 1.0 + BASE_SLACK


def test_classical_bohr_is_sharp_near_one():
    # f = (c - z)/(1 - c z) with c -> 1 pushes M(f)(1/3) to 1.
    c = 0.995
    num = TruncatedSeries([c, -1.0])
    den = TruncatedSeries([1.0, -c]).reciprocal(200)
    f = num.mul(den, 200)
    rep = classical_bohr_check(f)
    assert rep.passed
    assert rep.lhs > 0.99


@given(st.lists(st.floats(-2, 2), min_size=1, max_size=6),
       st.lists(st.floats(-2, 2), min_size=1, max_size=6),
       st.floats(0.05, 0.9))
@settings(max_examples=60, deadline=None)
def test_algebra_properties(a, b, r):
    f, g = TruncatedSeries(a), TruncatedSeries(b)
    for rep in algebra_properties_check(f, g, r):
        assert rep.passed, rep
