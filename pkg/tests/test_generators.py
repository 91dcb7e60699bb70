import numpy as np
import pytest

from bohrlab.errors import DegenerateSpec, DomainError
from bohrlab.generators import (Factor, SchwarzFunction, identity_schwarz,
                                make_large_function, random_large_function,
                                random_mobius_bounded, random_polynomial,
                                random_schwarz)


def disk_points(seed, n=200, rmax=0.95):
    rng = np.random.default_rng(seed)
    return rmax * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


# -- factors -----------------------------------------------------------------


def test_factor_validation():
    with pytest.raises(DomainError):
        Factor("power", 1.0)
    with pytest.raises(DomainError):
        Factor("contraction", 1.5)
    with pytest.raises(DomainError):
        Factor("blaschke", 1.0 + 0j)
    with pytest.raises(DomainError):
        Factor("frob")


def test_factor_series_matches_eval():
    z = disk_points(0, 50, 0.5)
    for f in (Factor("rotation", 1.3), Factor("power", 3),
              Factor("contraction", 0.5), Factor("blaschke", 0.3 + 0.2j)):
        s = f.series(24)
        assert np.allclose(s.eval(z), f.eval(z), atol=1e-9), f.kind


def test_factor_deriv_matches_finite_difference():
    h = 1e-7
    for f in (Factor("power", 2), Factor("blaschke", 0.4 - 0.1j)):
        for z in (0.2, 0.1 + 0.3j):
            fd = (f.eval(z + h) - f.eval(z - h)) / (2 * h)
            assert complex(f.deriv(z)) == pytest.approx(fd, rel=1e-5)


# -- Schwarz compositions ----------------------------------------------------


def test_schwarz_lemma_sampled():
    for seed in range(8):
        phi = random_schwarz(seed, 1 + seed % 4)
        z = disk_points(seed + 100)
        w = phi.eval(z)
        assert np.all(np.abs(w) <= np.abs(z) + 1e-12)
        assert complex(phi.eval(0.0)) == 0


def test_schwarz_series_matches_eval():
    phi = random_schwarz(11, 3)
    s = phi.series(32)
    z = disk_points(5, 50, 0.4)
    assert np.allclose(s.eval(z), phi.eval(z), atol=1e-8)


def test_schwarz_determinism_and_text():
    a, b = random_schwarz(42, 4), random_schwarz(42, 4)
    assert a.text() == b.text()
    assert a.text() != random_schwarz(43, 4).text()


def test_inner_detection():
    assert identity_schwarz().is_inner
    assert not SchwarzFunction((Factor("contraction", 0.5),)).is_inner
    assert random_schwarz(1, 3, inner_only=True).is_inner


# -- large-function specs ----------------------------------------------------


def test_spec_omits_its_two_values():
    spec = random_large_function(9, order=48)
    z = disk_points(9, 400)
    w = spec.eval(z)
    assert np.abs(w - spec.a).min() > 0
    assert np.abs(w - spec.b).min() > 0


def test_spec_series_matches_eval():
    spec = random_large_function(21, order=64)
    for z in (0.05, -0.02 + 0.03j):
        assert spec.series.eval(z) == pytest.approx(complex(spec.eval(z)),
                                                    abs=1e-9)


def test_spec_f0_consistency():
    spec = random_large_function(13, order=48)
    assert spec.f0 == pytest.approx(complex(spec.eval(0.0)), abs=1e-13)
    assert spec.series[0] == pytest.approx(spec.f0, abs=1e-12)


def test_spec_degenerate_rejected():
    with pytest.raises(DegenerateSpec):
        make_large_function(1.0, 1.0, 2.0, identity_schwarz(), 16)


def test_spec_transforms():
    spec = random_large_function(5, order=32)
    t = spec.translated(1 + 2j)
    assert t.f0 == pytest.approx(spec.f0 + 1 + 2j, abs=1e-12)
    s = spec.scaled(2.0)
    assert s.f0 == pytest.approx(2 * spec.f0, abs=1e-12)
    with pytest.raises(DegenerateSpec):
        spec.scaled(0.0)


def test_spec_text_roundtrip_fields():
    spec = random_large_function(3, order=32)
    txt = spec.text()
    assert "alpha=" in txt and "phi=[" in txt and "order=32" in txt


# -- auxiliary draws ---------------------------------------------------------


def test_random_polynomial_caps_degree():
    with pytest.raises(DomainError):
        random_polynomial(0, 17)
    p = random_polynomial(0, 5)
    assert p.order == 5
    assert np.abs(p.coeffs).max() <= 1.0


def test_random_mobius_is_bounded():
    f = random_mobius_bounded(8, order=64)
    z = disk_points(8, 300, 0.95)
    assert np.abs(f.eval(z)).max() < 1.0 + 1e-6
