"""Closed moment ODE systems for the roll/filter dynamics.

For a drift that is polynomial in the state and a constant diffusion, the
time derivative of any moment E[X^C] is a combination of other moments:
each drift monomial coeff * X^delta in the i-th component contributes
C_i * coeff * m[C - e_i + delta], and a diffusion entry q on the diagonal
of b b^T contributes (q/2) C_i (C_i - 1) m[C - 2 e_i].  Moments above the
chosen closure order are replaced by their cumulant-neglect polynomials,
which closes the hierarchy; the closed right-hand side is compiled to flat
arrays and integrated with a fixed-step fourth-order Runge-Kutta scheme.

Tracked indices are ordered by (order, lexicographic), giving 8 + 36 = 44
equations at closure order 2 and 164 at order 3 for the 8-state system.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy import linalg

from .arma import ArmaFilter, is_stable
from .closure import _closure_polynomial_uncapped, multi_indices
from .ship import ShipModel


@dataclass
class MomentSystem:
    """Compiled closed moment ODE system d m / dt = A m + B g(m) + c."""

    tracked: list
    closure_order: int
    nvars: int
    amat: np.ndarray
    bmat: np.ndarray
    const: np.ndarray
    closed_targets: list
    coeffs: np.ndarray
    tgt_start: np.ndarray
    mono_start: np.ndarray
    fvar: np.ndarray
    fpow: np.ndarray
    row_terms: list  # per row: list of (coefficient, target index) before closure
    row_const: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.tracked)

    def index(self, idx) -> int:
        return self.tracked.index(tuple(idx))

    def rhs(self, m: np.ndarray) -> np.ndarray:
        m = np.asarray(m, dtype=float)
        closed = np.empty(len(self.closed_targets))
        _eval_closed(m, self.coeffs, self.tgt_start, self.mono_start,
                     self.fvar, self.fpow, closed)
        out = self.amat @ m + self.const
        if closed.size:
            out += self.bmat @ closed
        return out

    def render_equations(self) -> list:
        """Human-readable per-row equations in raw (pre-closure) moments."""
        lines = []
        for row, idx in enumerate(self.tracked):
            name = "m_" + "".join(map(str, idx))
            bits = []
            if self.row_const[row]:
                bits.append(f"{self.row_const[row]:+.12g}")
            for coeff, target in sorted(self.row_terms[row], key=lambda t: t[1]):
                tname = "m_" + "".join(map(str, target))
                bits.append(f"{coeff:+.12g} {tname}")
            lines.append(f"d/dt {name} = " + (" ".join(bits) if bits else "0"))
        return lines


@dataclass
class MomentTrajectory:
    """Stored rows of the tracked-moment vector over time."""

    dt: float
    rows: np.ndarray
    tracked: list
    t0: float = 0.0

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.rows.shape[0])

    def column(self, idx) -> np.ndarray:
        return self.rows[:, self.tracked.index(tuple(idx))]


@dataclass
class SteadyStats:
    """Windowed time averages of the tracked moments plus their swing."""

    values: dict
    oscillation: dict
    window: tuple

    def __getitem__(self, idx) -> float:
        return self.values[tuple(idx)]


def _drift_monomials_roll(ship: ShipModel, filt: ArmaFilter):
    """Monomial drift of the 8-state system: (coeff, exponent delta) per var."""
    nv = 8

    def e(*pairs):
        d = [0] * nv
        for var, power in pairs:
            d[var] += power
        return tuple(d)

    w0sq = ship.omega0 ** 2
    drift = [[] for _ in range(nv)]
    drift[0].append((1.0, e((1, 1))))
    d2 = drift[1]
    d2.append((-ship.beta1, e((1, 1))))
    if ship.beta3:
        d2.append((-ship.beta3, e((1, 3))))
    for n, g in enumerate(ship.gamma):
        if g:
            d2.append((-w0sq * g, e((0, 2 * n + 1))))
    for n, r in enumerate(ship.rho):
        if r:
            d2.append((-w0sq * r / ship.gm, e((0, 1), (2, n + 1))))
    for i in range(2, 7):
        drift[i].append((1.0, e((i + 1, 1))))
        drift[i].append((-filt.alpha[i - 2], e((2, 1))))
    drift[7].append((-filt.alpha[5], e((2, 1))))
    return drift


def _drift_monomials_filter(filt: ArmaFilter):
    nv = 6
    drift = [[] for _ in range(nv)]
    for i in range(nv):
        d = [0] * nv
        d[0] = 1
        if i < nv - 1:
            up = [0] * nv
            up[i + 1] = 1
            drift[i].append((1.0, tuple(up)))
        drift[i].append((-filt.alpha[i], tuple(d)))
    return drift


def _assemble(nvars: int, drift, q_diag, closure_order: int) -> MomentSystem:
    tracked = multi_indices(nvars, closure_order, min_order=1)
    tid = {idx: i for i, idx in enumerate(tracked)}
    n = len(tracked)
    amat = np.zeros((n, n))
    const = np.zeros(n)
    row_terms = [[] for _ in range(n)]
    nonlinear = {}

    def add(row, coeff, target):
        row_terms[row].append((coeff, target))
        if sum(target) == 0:
            const[row] += coeff
        elif target in tid:
            amat[row, tid[target]] += coeff
        else:
            nonlinear.setdefault(target, []).append((row, coeff))

    for row, c_idx in enumerate(tracked):
        for i in range(nvars):
            ci = c_idx[i]
            if not ci:
                continue
            for coeff, delta in drift[i]:
                target = list(c_idx)
                target[i] -= 1
                for j, d in enumerate(delta):
                    target[j] += d
                add(row, ci * coeff, tuple(target))
            if ci >= 2 and q_diag[i]:
                target = list(c_idx)
                target[i] -= 2
                add(row, 0.5 * q_diag[i] * ci * (ci - 1), tuple(target))

    closed_targets = sorted(nonlinear)
    bmat = np.zeros((n, len(closed_targets)))
    for j, t in enumerate(closed_targets):
        for row, coeff in nonlinear[t]:
            bmat[row, j] += coeff

    coeffs, tgt_start, mono_start, fvar, fpow = [], [0], [0], [], []
    for t in closed_targets:
        poly = _closure_polynomial_uncapped(t, closure_order)
        for coeff, mono in poly.terms:
            coeffs.append(float(coeff))
            for idx, power in mono:
                fvar.append(tid[idx])
                fpow.append(power)
            mono_start.append(len(fvar))
        tgt_start.append(len(coeffs))

    row_const = const.copy()
    return MomentSystem(
        tracked=tracked, closure_order=closure_order, nvars=nvars,
        amat=amat, bmat=bmat, const=const, closed_targets=closed_targets,
        coeffs=np.asarray(coeffs), tgt_start=np.asarray(tgt_start, dtype=np.int64),
        mono_start=np.asarray(mono_start, dtype=np.int64),
        fvar=np.asarray(fvar, dtype=np.int64), fpow=np.asarray(fpow, dtype=np.int64),
        row_terms=row_terms, row_const=row_const,
    )


def build_system(ship: ShipModel, filt: ArmaFilter, closure_order: int = 2) -> MomentSystem:
    """Closed moment equations of the full 8-state roll/filter system.

    The white-noise drive contributes pi k^2 to the second moment of the
    fifth state only (and the corresponding diffusion terms of higher rows
    at closure order 3).
    """
    if closure_order not in (2, 3):
        raise ValueError("closure order must be 2 or 3")
    if not is_stable(filt):
        raise ValueError("filter is not stable")
    q = [0.0] * 8
    q[4] = np.pi * filt.k ** 2
    return _assemble(8, _drift_monomials_roll(ship, filt), q, closure_order)


def build_filter_system(filt: ArmaFilter, closure_order: int = 2) -> MomentSystem:
    """Closed moment equations of the 6-state filter alone (linear)."""
    if closure_order not in (2, 3):
        raise ValueError("closure order must be 2 or 3")
    if not is_stable(filt):
        raise ValueError("filter is not stable")
    q = [0.0] * 6
    q[2] = np.pi * filt.k ** 2
    return _assemble(6, _drift_monomials_filter(filt), q, closure_order)


@njit(cache=True, nogil=True)
def _eval_closed(m, coeffs, tgt_start, mono_start, fvar, fpow, out):
    for j in range(out.shape[0]):
        acc = 0.0
        for t in range(tgt_start[j], tgt_start[j + 1]):
            prod = coeffs[t]
            for f in range(mono_start[t], mono_start[t + 1]):
                v = m[fvar[f]]
                for _ in range(fpow[f]):
                    prod *= v
            acc += prod
        out[j] = acc


@njit(cache=True, nogil=True)
def _rhs_sparse(stage, closed, const, a_start, a_col, a_val, b_start, b_col, b_val, out):
    n = stage.shape[0]
    for i in range(n):
        acc = const[i]
        for e in range(a_start[i], a_start[i + 1]):
            acc += a_val[e] * stage[a_col[e]]
        for e in range(b_start[i], b_start[i + 1]):
            acc += b_val[e] * closed[b_col[e]]
        out[i] = acc


@njit(cache=True, nogil=True)
def _rk4_loop(m, n_steps, dt, store_every, a_start, a_col, a_val, b_start, b_col,
              b_val, const, coeffs, tgt_start, mono_start, fvar, fpow, rows):
    n = m.shape[0]
    nt = tgt_start.shape[0] - 1
    closed = np.empty(nt)
    k = np.empty((4, n))
    stage = np.empty(n)
    wrote = 0
    for it in range(n_steps):
        for s in range(4):
            if s == 0:
                for i in range(n):
                    stage[i] = m[i]
            elif s == 1 or s == 2:
                for i in range(n):
                    stage[i] = m[i] + 0.5 * dt * k[s - 1, i]
            else:
                for i in range(n):
                    stage[i] = m[i] + dt * k[2, i]
            _eval_closed(stage, coeffs, tgt_start, mono_start, fvar, fpow, closed)
            _rhs_sparse(stage, closed, const, a_start, a_col, a_val,
                        b_start, b_col, b_val, k[s])
        for i in range(n):
            m[i] += dt / 6.0 * (k[0, i] + 2.0 * k[1, i] + 2.0 * k[2, i] + k[3, i])
        if (it + 1) % store_every == 0:
            bad = False
            for i in range(n):
                if not np.isfinite(m[i]):
                    bad = True
            if bad:
                return wrote, it + 1
            for i in range(n):
                rows[wrote, i] = m[i]
            wrote += 1
    return wrote, -1


def _to_csr(dense: np.ndarray):
    n = dense.shape[0]
    start = np.zeros(n + 1, dtype=np.int64)
    cols, vals = [], []
    for i in range(n):
        nz = np.nonzero(dense[i])[0]
        cols.extend(nz.tolist())
        vals.extend(dense[i, nz].tolist())
        start[i + 1] = len(cols)
    return start, np.asarray(cols, dtype=np.int64), np.asarray(vals, dtype=float)


def rk4_integrate(system: MomentSystem, init_value: float = 0.01, duration: float = 2000.0,
                  dt: float = 0.01, store_every: int = 10) -> MomentTrajectory:
    """Fixed-step classical Runge-Kutta trajectory from a uniform initial value.

    Every tracked moment starts at `init_value`; rows are stored every
    `store_every` steps.  Raises on non-finite state with the failure time.
    """
    if not dt > 0:
        raise ValueError("dt must be > 0")
    n_steps = int(round(duration / dt))
    if n_steps < store_every:
        raise ValueError("duration too short for the storage stride")
    m = np.full(system.dim, float(init_value))
    rows = np.empty((n_steps // store_every, system.dim))
    a_start, a_col, a_val = _to_csr(system.amat)
    b_start, b_col, b_val = _to_csr(system.bmat) if system.bmat.size else (
        np.zeros(system.dim + 1, dtype=np.int64), np.empty(0, dtype=np.int64), np.empty(0))
    wrote, bad_step = _rk4_loop(m, n_steps, dt, store_every, a_start, a_col, a_val,
                                b_start, b_col, b_val, system.const, system.coeffs,
                                system.tgt_start, system.mono_start, system.fvar,
                                system.fpow, rows)
    if bad_step >= 0:
        raise FloatingPointError(f"moment integration lost finiteness at t = {bad_step * dt:.6g} s")
    return MomentTrajectory(dt=dt * store_every, rows=rows[:wrote], tracked=system.tracked,
                            t0=dt * store_every)


def steady_state_stats(traj: MomentTrajectory, window_fraction: float = 0.5) -> SteadyStats:
    """Averages over the trailing window, plus max-minus-min oscillation size."""
    if not 0.0 < window_fraction <= 1.0:
        raise ValueError("window_fraction must lie in (0, 1]")
    n = traj.rows.shape[0]
    start = int(np.floor(n * (1.0 - window_fraction)))
    if start >= n:
        raise ValueError("steady-state window is empty")
    tail = traj.rows[start:]
    times = traj.times
    values = {}
    osc = {}
    for j, idx in enumerate(traj.tracked):
        col = tail[:, j]
        values[idx] = float(col.mean())
        osc[idx] = float(col.max() - col.min())
    return SteadyStats(values=values, oscillation=osc,
                       window=(float(times[start]), float(times[-1])))


def filter_second_moments(filt: ArmaFilter) -> np.ndarray:
    """Stationary second-moment matrix of the 6-state filter, by solving the
    algebraic Lyapunov equation A P + P A^T + Q = 0 (independent of the
    moment-ODE route)."""
    if not is_stable(filt):
        raise ValueError("filter is not stable")
    a = _filter_amat(filt)
    q = np.zeros((6, 6))
    q[2, 2] = np.pi * filt.k ** 2
    return linalg.solve_continuous_lyapunov(a, -q)


def linear_roll_second_moments(ship: ShipModel, filt: ArmaFilter) -> np.ndarray:
    """Stationary second moments of the 8-state system for a fully linear
    ship (no cubic damping, linear-only restoring, no stiffness variation)."""
    if ship.beta3 != 0.0 or any(ship.gamma[1:]) or any(ship.rho):
        raise ValueError("ship is not linear; the Lyapunov route does not apply")
    if not is_stable(filt):
        raise ValueError("filter is not stable")
    a = np.zeros((8, 8))
    a[0, 1] = 1.0
    a[1, 0] = -ship.omega0 ** 2 * ship.gamma[0]
    a[1, 1] = -ship.beta1
    a[2:8, 2:8] = _filter_amat(filt)
    q = np.zeros((8, 8))
    q[4, 4] = np.pi * filt.k ** 2
    return linalg.solve_continuous_lyapunov(a, -q)


def _filter_amat(filt: ArmaFilter) -> np.ndarray:
    a = np.zeros((6, 6))
    for i in range(5):
        a[i, i + 1] = 1.0
    a[:, 0] -= np.asarray(filt.alpha)
    return a
