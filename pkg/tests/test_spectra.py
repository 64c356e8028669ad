import math

import numpy as np
import pytest
from scipy import integrate

from parroll.arma import ArmaFilter
from parroll.spectra import (SeaState, SpectrumSamples, arma_density, default_grid,
                             effective_density, grim_transfer, ittc_density,
                             sample_arma, sample_effective, sample_ittc,
                             spectral_moment)

# frozen by direct evaluation of the density formula on a calculator
ITTC_AT_0P6 = 3.269509902243172


def test_ittc_hand_value(sea):
    assert ittc_density(0.6, sea) == pytest.approx(ITTC_AT_0P6, rel=1e-12)


def test_ittc_vanishes_at_both_ends(sea):
    assert ittc_density(1e-3, sea) < 1e-300
    assert ittc_density(50.0, sea) < 1e-6
    assert ittc_density(50.0, sea) > 0.0


def test_ittc_rejects_nonpositive_frequency(sea):
    with pytest.raises(ValueError):
        ittc_density(0.0, sea)
    with pytest.raises(ValueError):
        ittc_density(np.array([0.5, -1.0]), sea)


def test_ittc_zeroth_moment_encodes_wave_height(sea):
    # independent quadrature oracle
    ref, _ = integrate.quad(lambda w: ittc_density(w, sea), 0.1, 3.0, limit=200)
    target = (sea.h13 / 4.0) ** 2
    assert ref == pytest.approx(target, rel=5e-3)
    m0 = spectral_moment(sample_ittc(sea, np.linspace(0.1, 3.0, 512)), 0)
    assert m0 == pytest.approx(target, rel=0.01)
    assert m0 == pytest.approx(ref, rel=2e-3)


def test_seastate_validation():
    with pytest.raises(ValueError):
        SeaState(t01=0.0, h13=5.0)
    with pytest.raises(ValueError):
        SeaState(t01=9.99, h13=-1.0)
    with pytest.raises(ValueError):
        SeaState(t01=9.99, h13=5.0, chi=7.0)


def test_grim_zero_frequency():
    assert grim_transfer(0.0, math.pi, 262.0) == 0.0


def test_grim_beam_seas_is_zero():
    # cos(pi/2) is ~6e-17 in floats, so "zero" here means below 1e-25
    w = np.linspace(0.1, 3.0, 64)
    assert np.all(np.abs(grim_transfer(w, math.pi / 2, 262.0)) < 1e-25)


def test_grim_removable_singularity_limit():
    # |u| = pi at omega = sqrt(2 pi g / (L cos chi)); the limit value is 1
    L, g = 262.0, 9.81
    w_star = math.sqrt(2.0 * math.pi * g / L)
    assert grim_transfer(w_star, math.pi, L, g) == pytest.approx(1.0, abs=1e-12)


def test_grim_continuity_across_singular_band():
    L, g = 262.0, 9.81
    w_star = math.sqrt(2.0 * math.pi * g / L)
    # frequencies giving |u| - pi = -1e-6 and +1e-6
    for du in (-1e-6, 1e-6):
        u = math.pi + du
        w = math.sqrt(2.0 * g * u / L)
        assert grim_transfer(w, math.pi, L, g) == pytest.approx(1.0, abs=1e-6)
    # the series patch agrees with the direct formula at the band edges
    for du in (-2e-4, -0.5e-4, 0.5e-4, 2e-4):
        u = math.pi + du
        direct = 2.0 * (-u) * math.sin(-u) / (math.pi ** 2 - u ** 2)
        w = math.sqrt(2.0 * g * u / L)
        assert grim_transfer(w, math.pi, L, g) == pytest.approx(direct, rel=1e-8)


def test_effective_density_is_product(sea):
    w = 0.6
    h = grim_transfer(w, sea.chi, 262.0)
    assert effective_density(w, sea, 262.0) == pytest.approx(h * h * ITTC_AT_0P6, rel=1e-12)


def test_effective_density_beam_seas_zero(sea):
    beam = SeaState(t01=sea.t01, h13=sea.h13, chi=math.pi / 2)
    w = np.linspace(0.1, 3.0, 128)
    assert np.all(effective_density(w, beam, 262.0) < 1e-40)


def test_effective_variance_against_reference(sea):
    ref, _ = integrate.quad(lambda w: effective_density(w, sea, 262.0), 0.2, 2.0, limit=400)
    assert ref == pytest.approx(0.786, rel=0.10)
    samples = sample_effective(sea, 262.0)
    assert spectral_moment(samples, 0) == pytest.approx(ref, rel=5e-3)


def test_arma_density_zero_at_origin(filt):
    assert arma_density(0.0, filt) == 0.0


def test_arma_density_hand_value(filt):
    # independent evaluation of the rational spectrum at omega = 0.5
    w = 0.5
    a = filt.alpha
    re = -w ** 6 + a[1] * w ** 4 - a[3] * w ** 2 + a[5]
    im = a[0] * w ** 5 - a[2] * w ** 3 + a[4] * w
    expected = filt.k ** 2 * w ** 6 / (re ** 2 + im ** 2)
    assert arma_density(w, filt) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(4.774640226628899, rel=1e-12)


def test_arma_density_is_even(filt):
    w = np.linspace(0.0, 3.0, 101)
    assert np.array_equal(arma_density(w, filt), arma_density(-w, filt))


def test_arma_density_unstable_denominator_error():
    marginal = ArmaFilter(alpha=(0.0, 2.0, 0.0, 1.0, 0.0, 0.0), k=1.0)
    # denominator (-w^6 + 2 w^4 - w^2)^2 vanishes at w = 1
    with pytest.raises(ZeroDivisionError):
        arma_density(1.0, marginal)


def test_arma_peak_near_effective_peak(sea, filt):
    grid = default_grid()
    s6 = arma_density(grid, filt)
    seff = effective_density(grid, sea, 262.0)
    w6 = grid[np.argmax(s6)]
    weff = grid[np.argmax(seff)]
    assert 0.45 <= w6 <= 0.65
    assert abs(w6 - weff) < 0.1


def test_spectral_moment_trivial_cases():
    flat = SpectrumSamples(np.linspace(1.0, 2.0, 32), np.ones(32))
    assert spectral_moment(flat, 0) == pytest.approx(1.0, rel=1e-12)
    zero = SpectrumSamples(np.linspace(1.0, 2.0, 32), np.zeros(32))
    assert spectral_moment(zero, 0) == 0.0
    with pytest.raises(ValueError):
        spectral_moment(flat, -1)


def test_spectrum_samples_invariants():
    with pytest.raises(ValueError):
        SpectrumSamples(np.array([1.0, 0.5]), np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        SpectrumSamples(np.array([0.0, 1.0]), np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        SpectrumSamples(np.array([1.0, 2.0]), np.array([1.0, -1.0]))
    with pytest.raises(ValueError):
        SpectrumSamples(np.array([1.0, 2.0]), np.array([1.0]))


def test_spectrum_csv_round_trip(tmp_path, sea):
    samples = sample_ittc(sea)
    path = tmp_path / "spec.csv"
    samples.to_csv(path)
    back = SpectrumSamples.from_csv(path)
    assert np.array_equal(back.omega, samples.omega)
    assert np.array_equal(back.density, samples.density)
    assert open(path).readline().strip() == "omega,density"


def test_densities_nonnegative_randomized(rng):
    for _ in range(25):
        sea = SeaState(t01=rng.uniform(4.0, 16.0), h13=rng.uniform(0.5, 10.0),
                       chi=rng.uniform(0.0, 2.0 * math.pi))
        grid = default_grid(128)
        assert np.all(ittc_density(grid, sea) >= 0.0)
        assert np.all(effective_density(grid, sea, rng.uniform(50.0, 400.0)) >= 0.0)
        # stable filter synthesized from three damped quadratics
        poly = np.array([1.0])
        for _ in range(3):
            z, w0 = rng.uniform(0.05, 1.0), rng.uniform(0.1, 2.0)
            poly = np.convolve(poly, [1.0, 2 * z * w0, w0 * w0])
        f = ArmaFilter(alpha=tuple(poly[1:]), k=rng.uniform(0.01, 1.0))
        assert np.all(arma_density(grid, f) >= 0.0)


def test_effective_bounded_by_transfer_sup(sea):
    grid = default_grid()
    h = grim_transfer(grid, sea.chi, 262.0)
    bound = float(np.max(h * h)) * ittc_density(grid, sea)
    assert np.all(effective_density(grid, sea, 262.0) <= bound + 1e-15)


def test_sample_builders_default_grid(sea, filt):
    assert sample_ittc(sea).omega.shape == (512,)
    assert sample_arma(filt).omega.shape == (512,)
