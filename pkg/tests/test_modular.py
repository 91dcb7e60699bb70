import math

import mpmath
import numpy as np
import pytest

from bohrlab.errors import DomainError
from bohrlab.modular import (E_HALF_PI, E_PI, CoveringParameter, a_coeffs,
                             collision_search, j_coeffs_exact, j_deriv,
                             j_eval, j_max_modulus, j_series,
                             minus_j_minus_series, q_argument, q_eval,
                             q_series, univalence_probe)

# Degree <= 5 coefficients frozen from the exact integer computation.
J_EXACT_PREFIX = (0, 16, -128, 704, -3072, 11488)
A_EXACT_PREFIX = (1, 8, 44, 192, 718)


def mp_lambda(z):
    """Independent oracle: the elliptic lambda in the nome, via theta
    functions (theta2/theta3)^4 at q = z."""
    q = mpmath.mpc(z)
    return complex((mpmath.jtheta(2, 0, q) / mpmath.jtheta(3, 0, q)) ** 4)


# -- coefficients ------------------------------------------------------------


def test_exact_prefix():
    assert j_coeffs_exact(5) == J_EXACT_PREFIX


def test_exact_sign_alternation():
    c = j_coeffs_exact(21)
    assert c[0] == 0
    for n in range(1, 22):
        assert (-1) ** (n + 1) * c[n] > 0


def test_exact_caps():
    with pytest.raises(DomainError):
        j_coeffs_exact(22)
    with pytest.raises(DomainError):
        j_coeffs_exact(0)


def test_float_series_matches_exact():
    js = j_series(21)
    assert np.allclose(js.coeffs.real, j_coeffs_exact(21), rtol=1e-13)
    assert np.all(js.coeffs.imag == 0)


def test_a_prefix_and_shape():
    ac = a_coeffs(100)
    assert ac.a_exact[:5] == A_EXACT_PREFIX
    a = ac.a_float
    assert np.all(a > 0)
    assert np.all(np.diff(a) > 0)
    assert np.all(np.diff(a, 2) >= 0)


def test_majorant_series_positive():
    m = minus_j_minus_series(40)
    assert m[0] == 0
    assert np.all(m.coeffs[1:].real > 0)


# -- evaluation --------------------------------------------------------------


def test_special_values():
    assert complex(j_eval(E_PI)) == pytest.approx(0.5, abs=1e-12)
    assert abs(complex(j_eval(-E_PI))) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("z", [0.1, -0.3, 0.2 + 0.4j, -0.55j, 0.6 - 0.1j])
def test_eval_against_theta_oracle(z):
    assert complex(j_eval(z)) == pytest.approx(mp_lambda(z), rel=1e-12,
                                               abs=1e-12)


def test_eval_matches_series_near_zero():
    js = j_series(48)
    for z in (0.05, 0.1j, -0.08 + 0.06j):
        assert complex(j_eval(z)) == pytest.approx(js.eval(z), abs=1e-14)


def test_eval_rejects_boundary():
    with pytest.raises(DomainError):
        j_eval(1.0)
    with pytest.raises(DomainError):
        j_eval(np.array([0.5, 1.0 + 0j]))


def test_deriv_against_mpmath():
    for z in (0.1, 0.3 - 0.2j, -0.4j):
        expect = complex(mpmath.diff(lambda w: (mpmath.jtheta(2, 0, w)
                                                / mpmath.jtheta(3, 0, w)) ** 4,
                                     mpmath.mpc(z)))
        assert complex(j_deriv(z)) == pytest.approx(expect, rel=1e-9)


def test_deriv_at_zero():
    assert complex(j_deriv(0.0)) == pytest.approx(16.0, abs=1e-14)


def test_max_modulus_on_negative_axis():
    for r in (0.1, 0.3, E_PI):
        m, angle = j_max_modulus(r, 4096)
        assert angle == pytest.approx(np.pi, abs=2 * np.pi / 4096 * 1.001)
        assert m == pytest.approx(abs(complex(j_eval(-r))), rel=1e-9)


# -- the covering map --------------------------------------------------------


def test_covering_parameter_positive():
    with pytest.raises(DomainError):
        CoveringParameter(0.0)
    with pytest.raises(DomainError):
        q_eval(-1.0, 0.1)


def test_q_argument_lands_in_punctured_disk():
    rng = np.random.default_rng(3)
    z = 0.95 * np.sqrt(rng.random(200)) * np.exp(2j * np.pi * rng.random(200))
    w = q_argument(2.0, z)
    assert np.all(np.abs(w) < 1)
    assert np.all(np.abs(w) > 0)


def test_q_omits_zero_and_one():
    rng = np.random.default_rng(4)
    z = 0.9 * np.sqrt(rng.random(500)) * np.exp(2j * np.pi * rng.random(500))
    w = q_eval(math.pi, z)
    assert np.abs(w).min() > 0
    assert np.abs(w - 1.0).min() > 0


def test_q_series_matches_pointwise():
    alpha = math.pi
    qs = q_series(alpha, 64)
    assert qs[0] == pytest.approx(complex(j_eval(math.exp(-alpha))),
                                  abs=1e-13)
    for z in (0.05, -0.1j, 0.08 + 0.04j):
        assert qs.eval(z) == pytest.approx(complex(q_eval(alpha, z)),
                                           abs=1e-10)


def test_q_series_validation():
    with pytest.raises(DomainError):
        q_series(1.0, 0)
    with pytest.raises(DomainError):
        q_series(1.0, 64, nodes=100)


# -- injectivity -------------------------------------------------------------


def test_probe_below_univalence_radius():
    rep = univalence_probe(0.9 * E_HALF_PI, 20_000, seed=1)
    assert rep.collision_count == 0
    assert rep.min_ratio > 0


def test_known_collision_pair():
    # J takes equal values at +/- i e^{-pi/2}: the univalence radius is
    # attained on the imaginary axis.
    gap = abs(complex(j_eval(1j * E_HALF_PI)) - complex(j_eval(-1j * E_HALF_PI)))
    assert gap < 1e-13


def test_collision_search_above_radius():
    rep = collision_search(0.35, seed=3)
    assert rep.found
    assert rep.value_gap < 1e-8
    assert rep.separation >= 0.02
