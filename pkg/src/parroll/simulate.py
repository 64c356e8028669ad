"""Time-domain synthesis: superposition waves, SDE paths, ensemble statistics.

Every stochastic routine takes an `RngSpec`; a (master_seed, stream) pair
pins the random stream of one realization exactly, so results are
bit-identical no matter how realizations are grouped, chunked, or spread
over worker threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy import signal

from ._em import em_filter_chunk, em_roll_chunk
from .arma import ArmaFilter, is_stable
from .ship import ShipModel
from .spectra import SpectrumSamples

#: Any state component beyond this magnitude counts as numerical blow-up.
BLOWUP_GUARD = 1e6

_CHUNK_STEPS = 200_000


class BlowUpError(RuntimeError):
    """Path integration diverged; carries the time of the first offense."""

    def __init__(self, time: float):
        super().__init__(f"state exceeded {BLOWUP_GUARD:g} at t = {time:.6g} s")
        self.time = time


@dataclass(frozen=True)
class RngSpec:
    """Seed and realization index identifying one random stream."""

    master_seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.master_seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(ss))


@dataclass
class TimeSeries:
    """Uniformly sampled series; values are (n,) scalars or (n, width) rows.

    Sample i sits at time t0 + i * dt.
    """

    dt: float
    values: np.ndarray
    t0: float = 0.0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if not self.dt > 0:
            raise ValueError("dt must be > 0")
        if self.values.shape[0] == 0:
            raise ValueError("series must be nonempty")

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.values.shape[0])

    @property
    def width(self) -> int:
        return 1 if self.values.ndim == 1 else self.values.shape[1]

    def column(self, j: int) -> np.ndarray:
        return self.values if self.values.ndim == 1 else self.values[:, j]

    def to_csv(self, path, header: list[str] | None = None) -> None:
        import csv

        w = self.width
        if header is None:
            header = ["t", "zeta"] if w == 1 else ["t"] + [f"x{j + 1}" for j in range(w)]
        with open(path, "w", newline="\n") as f:
            wr = csv.writer(f, lineterminator="\n")
            wr.writerow(header)
            vals = self.values.reshape(-1, w)
            for t, row in zip(self.times, vals):
                wr.writerow([repr(float(t))] + [repr(float(v)) for v in row])


@dataclass
class EnsembleStats:
    """Time-and-ensemble monomial averages with between-realization errors."""

    values: dict  # multi-index tuple -> (estimate, standard error)
    n_realizations: int
    discard: float

    def estimate(self, index: tuple) -> float:
        return self.values[tuple(index)][0]

    def stderr(self, index: tuple) -> float:
        return self.values[tuple(index)][1]

    def to_json_dict(self) -> dict:
        out = {}
        for idx, (est, se) in sorted(self.values.items()):
            key = "m_" + "".join(str(c) for c in idx)
            out[key] = {"estimate": est, "stderr": se}
        return {"moments": out, "realizations": self.n_realizations, "discard_s": self.discard}

    def to_json(self, path) -> None:
        with open(path, "w", newline="\n") as f:
            json.dump(self.to_json_dict(), f, indent=1)
            f.write("\n")


def superpose_series(spectrum: SpectrumSamples, duration: float, dt: float,
                     rng: RngSpec, n_components: int = 512) -> TimeSeries:
    """Synthesize a Gaussian sea as a cosine sum with random phases.

    Component frequencies are n equally spaced points spanning the sample
    grid; amplitudes are sqrt(2 S(w_i) dw) with S interpolated linearly, so
    the expected sample variance equals sum S(w_i) dw.
    """
    if not duration > dt > 0:
        raise ValueError("need duration > dt > 0")
    if n_components < 8:
        raise ValueError("need at least 8 components")
    w = np.linspace(spectrum.omega[0], spectrum.omega[-1], n_components)
    dw = (spectrum.omega[-1] - spectrum.omega[0]) / (n_components - 1)
    dens = np.interp(w, spectrum.omega, spectrum.density)
    amp = np.sqrt(2.0 * dens * dw)
    phases = rng.generator().uniform(0.0, 2.0 * np.pi, size=n_components)

    n = int(round(duration / dt))
    out = np.empty(n)
    chunk = max(1, (1 << 22) // n_components)
    for i0 in range(0, n, chunk):
        t = dt * np.arange(i0, min(i0 + chunk, n))
        out[i0:i0 + len(t)] = np.cos(np.outer(t, w) + phases) @ amp
    return TimeSeries(dt=dt, values=out, t0=0.0)


def _run_em(kernel_args_builder, width, duration, dt, rng, keep_every, init):
    n_steps = int(round(duration / dt))
    if n_steps < 1:
        raise ValueError("duration shorter than one step")
    n_keep = n_steps // keep_every
    if n_keep < 1:
        raise ValueError("keep_every exceeds the number of steps")
    state = np.zeros((1, width))
    if init is not None:
        init = np.asarray(init, dtype=float)
        if init.shape != (width,):
            raise ValueError(f"init must have shape ({width},)")
        state[0] = init
    out = np.empty((n_keep, 1, width))
    gen = rng.generator()
    step0 = 0
    while step0 < n_steps:
        m = min(_CHUNK_STEPS, n_steps - step0)
        noise = gen.standard_normal(m)[None, :]
        step0 = kernel_args_builder(state, noise, out, step0)
    return TimeSeries(dt=dt * keep_every, values=out[:, 0, :], t0=dt * keep_every)


def simulate_filter(filt: ArmaFilter, duration: float, dt: float, rng: RngSpec,
                    keep_every: int = 1) -> TimeSeries:
    """Euler-Maruyama path of the 6-state filter; column 0 is the wave.

    Noise sqrt(pi) k dW enters the third state.  Requires a stable filter.
    """
    if not is_stable(filt):
        raise ValueError("filter is not stable; refusing to integrate")
    alpha = np.asarray(filt.alpha)

    def step(state, noise, out, step0):
        em_filter_chunk(state, alpha, filt.k, dt, noise, keep_every, out, step0)
        return step0 + noise.shape[1]

    return _run_em(step, 6, duration, dt, rng, keep_every, None)


def simulate_roll(ship: ShipModel, filt: ArmaFilter, duration: float, dt: float,
                  rng: RngSpec, init=None, keep_every: int = 1) -> TimeSeries:
    """Euler-Maruyama path of the 8-state roll/filter system.

    Columns: roll angle, roll rate, then the six filter states (wave first).
    Raises `BlowUpError` when any component passes the guard threshold.
    """
    if not is_stable(filt):
        raise ValueError("filter is not stable; refusing to integrate")
    alpha = np.asarray(filt.alpha)
    gamma = np.asarray(ship.gamma)
    rho = np.asarray(ship.rho)
    w0sq = ship.omega0 ** 2

    def step(state, noise, out, step0):
        _, bad = em_roll_chunk(state, alpha, filt.k, dt, noise, keep_every, out, step0,
                               ship.beta1, ship.beta3, w0sq, ship.gm, gamma, rho,
                               BLOWUP_GUARD)
        if bad >= 0:
            raise BlowUpError(bad * dt)
        return step0 + noise.shape[1]

    return _run_em(step, 8, duration, dt, rng, keep_every, init)


def ensemble_stats(runs: list[TimeSeries], indices: list[tuple], discard: float) -> EnsembleStats:
    """Average monomials x1^c1 ... xw^cw over time (after `discard` seconds
    of transient) and over realizations; the standard error comes from the
    spread of per-realization time averages."""
    if not runs:
        raise ValueError("need at least one realization")
    width = runs[0].width
    dt = runs[0].dt
    for r in runs:
        if r.width != width or abs(r.dt - dt) > 1e-12 * dt:
            raise ValueError("all realizations must share dt and width")
    indices = [tuple(int(c) for c in idx) for idx in indices]
    for idx in indices:
        if len(idx) != width or any(c < 0 for c in idx):
            raise ValueError(f"bad multi-index {idx} for width-{width} series")

    per_run = np.empty((len(runs), len(indices)))
    for i, run in enumerate(runs):
        keep = run.times > discard
        if not np.any(keep):
            raise ValueError("discard window leaves no samples")
        vals = run.values.reshape(run.values.shape[0], width)[keep]
        for j, idx in enumerate(indices):
            mono = np.ones(vals.shape[0])
            for col, c in enumerate(idx):
                if c:
                    mono = mono * vals[:, col] ** c
            per_run[i, j] = mono.mean()

    est = per_run.mean(axis=0)
    if len(runs) > 1:
        se = per_run.std(axis=0, ddof=1) / np.sqrt(len(runs))
    else:
        se = np.zeros(len(indices))
    values = {idx: (float(e), float(s)) for idx, e, s in zip(indices, est, se)}
    return EnsembleStats(values=values, n_realizations=len(runs), discard=discard)


def periodogram(series: TimeSeries, nperseg: int | None = None, column: int = 0) -> SpectrumSamples:
    """Welch one-sided spectral density over angular frequency [rad/s].

    Satisfies Parseval approximately: the trapezoid integral of the
    estimate matches the sample variance to within a few percent.
    """
    x = series.column(column)
    n = x.shape[0]
    if nperseg is None:
        nperseg = min(4096, n // 2)
    if nperseg < 16 or n < 3 * nperseg // 2:
        raise ValueError("series too short for the requested segmentation")
    fs = 1.0 / series.dt
    f, p = signal.welch(x, fs=fs, window="hann", nperseg=nperseg, detrend="constant")
    return SpectrumSamples(2.0 * np.pi * f[1:], p[1:] / (2.0 * np.pi))


def run_filter_ensemble(filt: ArmaFilter, n_realizations: int, duration: float, dt: float,
                        master_seed: int, keep_every: int = 100, threads: int = 1) -> list[TimeSeries]:
    """Independent filter paths on streams 0..n-1, optionally thread-parallel."""
    return _parallel_runs(
        lambda r: simulate_filter(filt, duration, dt, RngSpec(master_seed, r), keep_every),
        n_realizations, threads)


def run_roll_ensemble(ship: ShipModel, filt: ArmaFilter, n_realizations: int, duration: float,
                      dt: float, master_seed: int, init=None, keep_every: int = 100,
                      threads: int = 1) -> list[TimeSeries]:
    """Independent roll paths on streams 0..n-1, optionally thread-parallel."""
    return _parallel_runs(
        lambda r: simulate_roll(ship, filt, duration, dt, RngSpec(master_seed, r), init, keep_every),
        n_realizations, threads)


def _parallel_runs(make, n, threads):
    if threads <= 1 or n <= 1:
        return [make(r) for r in range(n)]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(make, range(n)))
