import json
import math

import numpy as np
import pytest

from parroll.arma import (ArmaFilter, FitOptions, characteristic_poles, fit_arma,
                          is_stable, relative_l2_residual)
from parroll.spectra import SpectrumSamples, default_grid, sample_arma, sample_effective

# roots of the stock coefficient polynomial, frozen from a 50-digit
# multiprecision solve
STOCK_POLES = [
    complex(-0.23789958213454046, -0.42786405568805574),
    complex(-0.23789958213454046, +0.42786405568805574),
    complex(-0.09237229438281358, -0.4271928161637487),
    complex(-0.09237229438281358, +0.4271928161637487),
    complex(-0.0837281234826462, -0.5466131157221829),
    complex(-0.0837281234826462, +0.5466131157221829),
]


def test_poles_of_stock_filter(filt):
    poles = characteristic_poles(filt)
    assert np.allclose(poles, STOCK_POLES, rtol=0, atol=1e-9)
    assert np.all(poles.real < 0)


def test_pole_polynomial_residual(filt):
    coeffs = np.concatenate(([1.0], filt.alpha))
    for p in characteristic_poles(filt):
        assert abs(np.polyval(coeffs, p)) < 1e-9 * max(1.0, np.abs(coeffs).max())


def test_poles_repeated_real_root():
    # (x + 1)^6
    f = ArmaFilter(alpha=(6.0, 15.0, 20.0, 15.0, 6.0, 1.0), k=1.0)
    poles = characteristic_poles(f)
    assert np.allclose(poles, -1.0, atol=5e-3)  # sextuple roots are ill-conditioned
    assert is_stable(f)


def test_poles_sixth_roots_of_minus_one():
    f = ArmaFilter(alpha=(0.0, 0.0, 0.0, 0.0, 0.0, 1.0), k=1.0)
    poles = characteristic_poles(f)
    expected = sorted((np.exp(1j * math.pi * (2 * k + 1) / 6) for k in range(6)),
                      key=lambda z: (z.real, z.imag))
    assert np.allclose(poles, expected, atol=1e-12)
    assert not is_stable(f)


def test_poles_sorted_and_conjugate_closed(rng):
    for _ in range(20):
        alpha = tuple(rng.normal(0, 1, size=6))
        f = ArmaFilter(alpha=alpha, k=1.0)
        poles = characteristic_poles(f)
        order = np.lexsort((poles.imag, poles.real))
        assert np.array_equal(order, np.arange(6))
        assert np.allclose(np.sort_complex(poles.conj()), np.sort_complex(poles))


def test_poles_to_polynomial_round_trip(rng):
    for _ in range(20):
        poly = np.array([1.0])
        for _ in range(3):
            z, w0 = rng.uniform(0.05, 1.0), rng.uniform(0.1, 2.0)
            poly = np.convolve(poly, [1.0, 2 * z * w0, w0 * w0])
        f = ArmaFilter(alpha=tuple(poly[1:]), k=1.0)
        back = np.poly(characteristic_poles(f)).real
        assert np.allclose(back, poly, rtol=0, atol=1e-9 * max(1.0, np.abs(poly).max()))


def test_filter_validation():
    with pytest.raises(ValueError):
        ArmaFilter(alpha=(1.0, 2.0), k=1.0)
    with pytest.raises(ValueError):
        ArmaFilter(alpha=(0.0,) * 6, k=-1.0)
    with pytest.raises(ValueError):
        ArmaFilter(alpha=(math.nan,) + (0.0,) * 5, k=1.0)
    # degenerate unforced filter is allowed
    ArmaFilter(alpha=(6.0, 15.0, 20.0, 15.0, 6.0, 1.0), k=0.0)


def test_fit_round_trip_quick(filt):
    target = sample_arma(filt)
    report = fit_arma(target, FitOptions(seed=7, n_starts=6))
    for got, want in zip(report.filter.alpha, filt.alpha):
        assert got == pytest.approx(want, rel=1e-3)
    assert report.filter.k == pytest.approx(filt.k, rel=1e-3)
    assert is_stable(report.filter)
    assert report.residual < 1e-6


def test_fit_rejects_degenerate_targets():
    grid = default_grid(64)
    with pytest.raises(ValueError):
        fit_arma(SpectrumSamples(grid, np.zeros(64)))
    with pytest.raises(ValueError):
        fit_arma(SpectrumSamples(grid[:16], np.ones(16)))


def test_fit_effective_wave_beats_stock_filter(sea, ship, filt):
    target = sample_effective(sea, ship.length)
    report = fit_arma(target, FitOptions(seed=3))
    assert is_stable(report.filter)
    stock = relative_l2_residual(filt, target, band=(0.2, 2.0))
    assert report.residual <= stock
    assert relative_l2_residual(report.filter, target, band=(0.2, 1.5)) < 0.15


def test_fit_monotone_gain(filt):
    base = sample_arma(filt)
    scaled = SpectrumSamples(base.omega, 4.0 * base.density)
    r1 = fit_arma(base, FitOptions(seed=11, n_starts=6))
    r2 = fit_arma(scaled, FitOptions(seed=11, n_starts=6))
    assert r2.filter.k == pytest.approx(2.0 * r1.filter.k, rel=1e-4)
    for a, b in zip(r2.filter.alpha, r1.filter.alpha):
        assert a == pytest.approx(b, rel=1e-4)


def test_fit_always_stable_randomized(rng):
    grid = default_grid(128)
    for _ in range(3):
        # lumpy positive target not in the model family
        dens = (np.exp(-(grid - rng.uniform(0.4, 0.8)) ** 2 / 0.02)
                + 0.3 * np.exp(-(grid - rng.uniform(1.0, 1.6)) ** 2 / 0.05))
        report = fit_arma(SpectrumSamples(grid, dens),
                          FitOptions(seed=int(rng.integers(1 << 30)), n_starts=4,
                                     max_iter=800, polish_rounds=1))
        assert is_stable(report.filter)


def test_fit_report_json(tmp_path, filt):
    report = fit_arma(sample_arma(filt), FitOptions(seed=5, n_starts=4))
    path = tmp_path / "fit.json"
    report.to_json(path)
    data = json.loads(open(path).read())
    assert set(data) == {"alpha", "k", "residual", "poles"}
    assert len(data["alpha"]) == 6
    assert len(data["poles"]) == 6
    assert all(re < 0 for re, _ in data["poles"])
    back = ArmaFilter(alpha=tuple(data["alpha"]), k=data["k"])
    assert is_stable(back)
