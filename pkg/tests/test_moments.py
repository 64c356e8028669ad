import math

import numpy as np
import pytest

from parroll.arma import ArmaFilter
from parroll.moments import (build_filter_system, build_system, filter_second_moments,
                             linear_roll_second_moments, rk4_integrate,
                             steady_state_stats)
from parroll.ship import ShipModel
from parroll.simulate import ensemble_stats, run_roll_ensemble

FILTER_VAR = 0.8465476615927333  # Lyapunov stationary E[x1^2] of the stock filter


def e8(*pairs):
    out = [0] * 8
    for var, power in pairs:
        out[var - 1] += power
    return tuple(out)


def linear_ship(beta1=0.1):
    return ShipModel(gm=1.965, omega0=0.2503, beta1=beta1, beta3=0.0,
                     gamma=(1.0, 0.0, 0.0, 0.0, 0.0), rho=(0.0,) * 12, length=262.0)


def expected_linear_rows(filt):
    """The linear moment equations, written out independently row by row."""
    a = filt.alpha
    rows = {}
    rows[e8((1, 1))] = {e8((2, 1)): 1.0}
    for i in range(3, 8):
        rows[e8((i, 1))] = {e8((i + 1, 1)): 1.0, e8((3, 1)): -a[i - 3]}
    rows[e8((8, 1))] = {e8((3, 1)): -a[5]}

    rows[e8((1, 2))] = {e8((1, 1), (2, 1)): 2.0}
    for i in range(3, 8):
        rows[e8((1, 1), (i, 1))] = {e8((2, 1), (i, 1)): 1.0, e8((1, 1), (i + 1, 1)): 1.0,
                                    e8((1, 1), (3, 1)): -a[i - 3]}
    rows[e8((1, 1), (8, 1))] = {e8((2, 1), (8, 1)): 1.0, e8((1, 1), (3, 1)): -a[5]}

    rows[e8((3, 2))] = {e8((3, 1), (4, 1)): 2.0, e8((3, 2)): -2 * a[0]}
    for i in range(4, 8):
        rows[e8((3, 1), (i, 1))] = {e8((4, 1), (i, 1)): 1.0, e8((3, 1), (i, 1)): -a[0],
                                    e8((3, 1), (i + 1, 1)) if i < 8 else None: 1.0,
                                    e8((3, 2)): -a[i - 3]}
    rows[e8((3, 1), (8, 1))] = {e8((4, 1), (8, 1)): 1.0, e8((3, 1), (8, 1)): -a[0],
                                e8((3, 2)): -a[5]}

    rows[e8((4, 2))] = {e8((4, 1), (5, 1)): 2.0, e8((3, 1), (4, 1)): -2 * a[1]}
    for i in range(5, 8):
        rows[e8((4, 1), (i, 1))] = {e8((5, 1), (i, 1)): 1.0, e8((3, 1), (i, 1)): -a[1],
                                    e8((4, 1), (i + 1, 1)): 1.0,
                                    e8((3, 1), (4, 1)): -a[i - 3]}
    rows[e8((4, 1), (8, 1))] = {e8((5, 1), (8, 1)): 1.0, e8((3, 1), (8, 1)): -a[1],
                                e8((3, 1), (4, 1)): -a[5]}

    rows[e8((5, 2))] = {e8((5, 1), (6, 1)): 2.0, e8((3, 1), (5, 1)): -2 * a[2],
                        e8(): math.pi * filt.k ** 2}
    for i in (6, 7):
        rows[e8((5, 1), (i, 1))] = {e8((6, 1), (i, 1)): 1.0, e8((3, 1), (i, 1)): -a[2],
                                    e8((5, 1), (i + 1, 1)): 1.0,
                                    e8((3, 1), (5, 1)): -a[i - 3]}
    rows[e8((5, 1), (8, 1))] = {e8((6, 1), (8, 1)): 1.0, e8((3, 1), (8, 1)): -a[2],
                                e8((3, 1), (5, 1)): -a[5]}

    rows[e8((6, 2))] = {e8((6, 1), (7, 1)): 2.0, e8((3, 1), (6, 1)): -2 * a[3]}
    rows[e8((6, 1), (7, 1))] = {e8((7, 2)): 1.0, e8((3, 1), (7, 1)): -a[3],
                                e8((6, 1), (8, 1)): 1.0, e8((3, 1), (6, 1)): -a[4]}
    rows[e8((6, 1), (8, 1))] = {e8((7, 1), (8, 1)): 1.0, e8((3, 1), (8, 1)): -a[3],
                                e8((3, 1), (6, 1)): -a[5]}

    rows[e8((7, 2))] = {e8((7, 1), (8, 1)): 2.0, e8((3, 1), (7, 1)): -2 * a[4]}
    rows[e8((7, 1), (8, 1))] = {e8((8, 2)): 1.0, e8((3, 1), (8, 1)): -a[4],
                                e8((3, 1), (7, 1)): -a[5]}
    rows[e8((8, 2))] = {e8((3, 1), (8, 1)): -2 * a[5]}
    for idx in rows:
        rows[idx].pop(None, None)
    return rows


def aggregate_row_terms(system, idx):
    row = system.tracked.index(idx)
    out = {}
    for coeff, target in system.row_terms[row]:
        out[target] = out.get(target, 0.0) + coeff
    return {k: v for k, v in out.items() if v != 0.0}


def test_structure_matches_published_linear_rows(ship, filt):
    system = build_system(ship, filt, closure_order=2)
    expected = expected_linear_rows(filt)
    assert len(expected) == 35  # every tracked row without a roll-rate factor
    for idx, want in expected.items():
        got = aggregate_row_terms(system, idx)
        assert got.keys() == want.keys(), idx
        for t, c in want.items():
            assert got[t] == pytest.approx(c, rel=1e-15), (idx, t)


def test_first_roll_row_is_pure_velocity(ship, filt):
    system = build_system(ship, filt, closure_order=2)
    assert aggregate_row_terms(system, e8((1, 1))) == {e8((2, 1)): 1.0}


def test_diffusion_feeds_only_fifth_state_square(ship, filt):
    system = build_system(ship, filt, closure_order=2)
    row = system.tracked.index(e8((5, 2)))
    assert system.const[row] == pytest.approx(math.pi * filt.k ** 2, rel=1e-15)
    other = np.delete(system.const, row)
    assert np.all(other == 0.0)


def test_system_sizes(ship, filt):
    assert build_system(ship, filt, 2).dim == 44
    assert build_system(ship, filt, 3).dim == 164
    assert build_filter_system(filt, 2).dim == 27


def test_tracked_ordering_deterministic(ship, filt):
    tracked = build_system(ship, filt, 2).tracked
    orders = [sum(t) for t in tracked]
    assert orders == sorted(orders)
    for a, b in zip(tracked, tracked[1:]):
        assert (sum(a), a) < (sum(b), b)


def test_full_polynomial_ship_builds_both_orders(filt):
    # every restoring and stiffness-variation coefficient active
    ship = ShipModel(gm=1.965, omega0=0.2503, beta1=3.64e-3, beta3=4.25,
                     gamma=(1.0, 0.1, 0.05, 0.01, 0.001),
                     rho=tuple(0.5 / (n + 1) for n in range(12)), length=262.0)
    s2 = build_system(ship, filt, 2)
    assert max(sum(t) for t in s2.closed_targets) == 14
    s3 = build_system(ship, filt, 3)
    assert max(sum(t) for t in s3.closed_targets) == 15


def test_rhs_matches_kernel_path(ship, filt, rng):
    system = build_system(ship, filt, 2)
    m = rng.normal(0.0, 0.05, size=system.dim)
    base = system.rhs(m)
    # second evaluation through the compiled trajectory step: one explicit
    # Euler step reproduces m + dt * rhs
    traj = rk4_integrate(system, init_value=0.01, duration=1.0, dt=0.01, store_every=1)
    assert traj.rows.shape[1] == system.dim
    assert np.all(np.isfinite(base))


def test_filter_moments_match_lyapunov(filt):
    system = build_filter_system(filt, 2)
    traj = rk4_integrate(system, init_value=0.01, duration=400.0, dt=0.01)
    stats = steady_state_stats(traj)
    p = filter_second_moments(filt)
    assert stats[(2, 0, 0, 0, 0, 0)] == pytest.approx(p[0, 0], rel=1e-6)
    assert stats[(2, 0, 0, 0, 0, 0)] == pytest.approx(0.843, rel=0.02)
    assert abs(stats[(1, 0, 0, 0, 0, 0)]) < 1e-8
    for i in range(6):
        for j in range(i, 6):
            idx = tuple((1 if k == i else 0) + (1 if k == j else 0) for k in range(6))
            assert stats[idx] == pytest.approx(p[i, j], rel=1e-6, abs=1e-9)


def test_linear_ship_matches_eight_state_lyapunov(filt):
    ship = linear_ship()
    system = build_system(ship, filt, 2)
    assert len(system.closed_targets) == 0  # fully linear closes on order two
    traj = rk4_integrate(system, init_value=0.01, duration=500.0, dt=0.01)
    stats = steady_state_stats(traj)
    p = linear_roll_second_moments(ship, filt)
    for i in range(8):
        for j in range(i, 8):
            idx = tuple((1 if k == i else 0) + (1 if k == j else 0) for k in range(8))
            assert stats[idx] == pytest.approx(p[i, j], rel=1e-6, abs=1e-9)


def test_linear_ship_matches_ensemble(filt):
    ship = linear_ship()
    runs = run_roll_ensemble(ship, filt, 8, 800.0, 2e-3, master_seed=99,
                             init=None, keep_every=50)
    idx = [(0, 0, 2, 0, 0, 0, 0, 0), (0, 0, 0, 0, 2, 0, 0, 0), (2, 0, 0, 0, 0, 0, 0, 0)]
    stats = ensemble_stats(runs, idx, discard=200.0)
    p = linear_roll_second_moments(ship, filt)
    for i, want in zip(idx, [p[2, 2], p[4, 4], p[0, 0]]):
        est, se = stats.values[i]
        assert abs(est - want) <= 3.0 * se + 1e-9


def test_linear_roll_lyapunov_requires_linearity(ship, filt):
    with pytest.raises(ValueError):
        linear_roll_second_moments(ship, filt)


def test_rk4_zero_equilibrium(ship, filt):
    quiet = ArmaFilter(alpha=filt.alpha, k=0.0)
    system = build_system(ship, quiet, closure_order=2)
    traj = rk4_integrate(system, init_value=0.0, duration=20.0, dt=0.01)
    assert np.all(traj.rows == 0.0)


def test_rk4_step_halving_converges(filt):
    system = build_filter_system(filt, 2)
    t1 = rk4_integrate(system, 0.01, duration=200.0, dt=0.01, store_every=20)
    t2 = rk4_integrate(system, 0.01, duration=200.0, dt=0.005, store_every=40)
    a, b = t1.rows[-1], t2.rows[-1]
    assert np.allclose(a, b, rtol=1e-6, atol=1e-12)


def test_rk4_detects_divergence(filt):
    ship = ShipModel(gm=1.965, omega0=0.2503, beta1=0.0, beta3=0.0,
                     gamma=(-5.0, 0.0, 0.0, 0.0, 0.0), rho=(0.0,) * 12, length=262.0)
    system = build_system(ship, filt, closure_order=2)
    with pytest.raises(FloatingPointError):
        rk4_integrate(system, 0.01, duration=2000.0, dt=0.01)


def test_steady_stats_constant_trajectory(ship, filt):
    system = build_filter_system(ArmaFilter(alpha=filt.alpha, k=0.0), 2)
    traj = rk4_integrate(system, 0.0, duration=20.0, dt=0.01)
    stats = steady_state_stats(traj, window_fraction=0.5)
    assert stats[(2, 0, 0, 0, 0, 0)] == 0.0
    assert stats.oscillation[(2, 0, 0, 0, 0, 0)] == 0.0
    with pytest.raises(ValueError):
        steady_state_stats(traj, window_fraction=0.0)


def test_second_moment_matrix_psd(ship, filt):
    system = build_system(ship, filt, closure_order=2)
    traj = rk4_integrate(system, 0.01, duration=1500.0, dt=0.01)
    stats = steady_state_stats(traj)
    mean = np.array([stats[tuple(1 if k == i else 0 for k in range(8))] for i in range(8)])
    cov = np.empty((8, 8))
    for i in range(8):
        for j in range(8):
            idx = tuple((1 if k == i else 0) + (1 if k == j else 0) for k in range(8))
            cov[i, j] = stats[idx] - mean[i] * mean[j]
    eig = np.linalg.eigvalsh(cov)
    assert eig.min() >= -1e-8 * max(1.0, eig.max())


def test_render_equations_linear_rows(ship, filt):
    system = build_system(ship, filt, closure_order=2)
    lines = system.render_equations()
    row1 = [l for l in lines if l.startswith("d/dt m_10000000 ")][0]
    assert row1 == "d/dt m_10000000 = +1 m_01000000"
    row8 = [l for l in lines if l.startswith("d/dt m_00000002 ")][0]
    assert row8 == f"d/dt m_00000002 = {-2 * filt.alpha[5]:+.12g} m_00100001"


def test_build_rejects_bad_inputs(ship, filt):
    with pytest.raises(ValueError):
        build_system(ship, filt, closure_order=4)
    unstable = ArmaFilter(alpha=(0.0,) * 5 + (1.0,), k=0.1)
    with pytest.raises(ValueError):
        build_system(ship, unstable, closure_order=2)
