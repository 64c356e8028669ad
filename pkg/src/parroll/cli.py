"""Command-line pipeline: config in, deterministic data artifacts out.

    parroll <spectrum|fit-filter|simulate|moments|fit-pdf|export-closures|validate>
            --config cfg.json [--seed N] [--out DIR] ...

Exit codes: 0 success, 2 config error, 3 numerical failure, 4 validation
failure.  All CSV files use a header row, '.' decimals, LF line endings and
shortest round-trip float formatting, so a given (config, seed, version)
produces byte-identical data files regardless of the worker-thread count
(capped by the PARROLL_THREADS environment variable).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import os
import sys
import time
import warnings
from dataclasses import dataclass

import numpy as np

from . import __version__
from .arma import ArmaFilter, FitError, FitOptions, fit_arma, is_stable
from .closure import closure_polynomial
from .moments import build_system, rk4_integrate, steady_state_stats
from .pdf import MomentTargets, PdfFitOptions, fit_pdf, pdf_density, targets_from_moments
from .ship import ShipModel, delta_gm, example_ship
from .simulate import (BlowUpError, RngSpec, ensemble_stats, periodogram,
                       run_roll_ensemble, simulate_filter, superpose_series)
from .spectra import (SeaState, default_grid, example_sea, sample_arma,
                      sample_effective, sample_ittc)


class ConfigError(ValueError):
    """Invalid run configuration; message carries the offending field path."""


@dataclass
class RunConfig:
    sea: SeaState
    ship: ShipModel
    filter: ArmaFilter | None
    seed: int
    realizations: int
    duration: float
    dt: float
    dt_superposition: float
    discard: float
    closure_order: int
    grid_n: int
    grid_lo: float
    grid_hi: float
    outputs: str
    window_fraction: float = 0.5
    moment_duration: float = 2000.0
    moment_dt: float = 0.01

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        def section(name, required=True):
            if name not in raw:
                if required:
                    raise ConfigError(f"{name}: missing section")
                return None
            if not isinstance(raw[name], dict):
                raise ConfigError(f"{name}: expected an object")
            return raw[name]

        def num(sec, secname, key, default=None, kind=float):
            if key not in sec:
                if default is None:
                    raise ConfigError(f"{secname}.{key}: missing")
                return default
            try:
                return kind(sec[key])
            except (TypeError, ValueError) as e:
                raise ConfigError(f"{secname}.{key}: {e}") from None

        sea_d = section("sea")
        try:
            sea = SeaState(t01=num(sea_d, "sea", "t01"), h13=num(sea_d, "sea", "h13"),
                           chi=num(sea_d, "sea", "chi", math.pi),
                           fn=num(sea_d, "sea", "fn", 0.0))
        except ValueError as e:
            raise ConfigError(f"sea: {e}") from None

        ship_d = section("ship")
        try:
            ship = ShipModel.from_dict(ship_d)
        except (KeyError, ValueError, TypeError) as e:
            raise ConfigError(f"ship: {e}") from None

        filt = None
        if raw.get("filter") is not None:
            try:
                filt = ArmaFilter.from_dict(raw["filter"])
            except (KeyError, ValueError, TypeError) as e:
                raise ConfigError(f"filter: {e}") from None
            if filt.k > 0 and not is_stable(filt):
                raise ConfigError("filter: supplied coefficients are not stable")

        run = section("run")
        grid = run.get("grid", {})
        cfg = cls(
            sea=sea, ship=ship, filter=filt,
            seed=num(run, "run", "seed", 12345, int),
            realizations=num(run, "run", "realizations", 100, int),
            duration=num(run, "run", "duration", 3600.0),
            dt=num(run, "run", "dt", 1e-3),
            dt_superposition=num(run, "run", "dt_superposition", 0.02),
            discard=num(run, "run", "discard", 500.0),
            closure_order=num(run, "run", "closure_order", 2, int),
            grid_n=num(grid, "run.grid", "n", 512, int),
            grid_lo=num(grid, "run.grid", "lo", 0.05),
            grid_hi=num(grid, "run.grid", "hi", 3.0),
            outputs=str(raw.get("outputs", "out")),
            window_fraction=num(run, "run", "window_fraction", 0.5),
            moment_duration=num(run, "run", "moment_duration", 2000.0),
            moment_dt=num(run, "run", "moment_dt", 0.01),
        )
        if cfg.closure_order not in (2, 3):
            raise ConfigError(f"run.closure_order: must be 2 or 3, got {cfg.closure_order}")
        if not cfg.duration > cfg.dt > 0:
            raise ConfigError("run: need duration > dt > 0")
        if not 0 <= cfg.discard < cfg.duration:
            raise ConfigError("run: need 0 <= discard < duration")
        if cfg.realizations < 1:
            raise ConfigError("run.realizations: must be >= 1")
        if not (cfg.grid_n >= 2 and 0 < cfg.grid_lo < cfg.grid_hi):
            raise ConfigError("run.grid: need n >= 2 and 0 < lo < hi")
        return cfg

    def to_dict(self) -> dict:
        return {
            "sea": {"t01": self.sea.t01, "h13": self.sea.h13, "chi": self.sea.chi,
                    "fn": self.sea.fn},
            "ship": self.ship.to_dict(),
            "filter": self.filter.to_dict() if self.filter else None,
            "run": {"seed": self.seed, "realizations": self.realizations,
                    "duration": self.duration, "dt": self.dt,
                    "dt_superposition": self.dt_superposition, "discard": self.discard,
                    "closure_order": self.closure_order,
                    "window_fraction": self.window_fraction,
                    "moment_duration": self.moment_duration, "moment_dt": self.moment_dt,
                    "grid": {"n": self.grid_n, "lo": self.grid_lo, "hi": self.grid_hi}},
            "outputs": self.outputs,
        }

    def grid(self) -> np.ndarray:
        return default_grid(self.grid_n, self.grid_lo, self.grid_hi)

    def require_filter(self) -> ArmaFilter:
        if self.filter is None:
            raise ConfigError("filter: this command needs filter coefficients "
                              "(run fit-filter first or add them to the config)")
        return self.filter


def default_config() -> dict:
    """A complete runnable configuration for the stock ship and sea state."""
    sea = example_sea()
    return {
        "sea": {"t01": sea.t01, "h13": sea.h13, "chi": sea.chi, "fn": sea.fn},
        "ship": example_ship().to_dict(),
        "filter": {"alpha": [0.828, 0.935, 0.424, 0.227, 0.0490, 0.0140], "k": 0.0459},
        "run": {"seed": 12345, "realizations": 100, "duration": 3600.0, "dt": 1e-3,
                "dt_superposition": 0.02, "discard": 500.0, "closure_order": 2,
                "grid": {"n": 512, "lo": 0.05, "hi": 3.0}},
        "outputs": "out",
    }


class Emitter:
    """Writes artifacts under the output directory and records the manifest."""

    def __init__(self, cfg: RunConfig, command: str):
        self.cfg = cfg
        self.command = command
        self.files: list[str] = []
        self.t0 = time.perf_counter()
        os.makedirs(cfg.outputs, exist_ok=True)

    def path(self, name: str) -> str:
        p = os.path.join(self.cfg.outputs, name)
        self.files.append(p)
        return p

    def write_csv(self, name: str, header: list, columns: list) -> str:
        p = self.path(name)
        with open(p, "w", newline="\n") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(header)
            for row in zip(*columns):
                w.writerow([repr(float(v)) for v in row])
        return p

    def write_json(self, name: str, payload: dict) -> str:
        p = self.path(name)
        with open(p, "w", newline="\n") as f:
            json.dump(payload, f, indent=1, sort_keys=True)
            f.write("\n")
        return p

    def write_text(self, name: str, text: str) -> str:
        p = self.path(name)
        with open(p, "w", newline="\n") as f:
            f.write(text)
        return p

    def finish(self) -> list:
        digest = hashlib.sha256(
            json.dumps(self.cfg.to_dict(), sort_keys=True).encode()).hexdigest()
        manifest = {
            "command": self.command,
            "config_sha256": digest,
            "version": __version__,
            "wall_time_s": time.perf_counter() - self.t0,
            "files": sorted(os.path.relpath(p, self.cfg.outputs) for p in self.files),
        }
        p = os.path.join(self.cfg.outputs, "manifest.json")
        with open(p, "w", newline="\n") as f:
            json.dump(manifest, f, indent=1, sort_keys=True)
            f.write("\n")
        return self.files


def _threads() -> int:
    env = os.environ.get("PARROLL_THREADS", "")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"PARROLL_THREADS: not an integer: {env!r}") from None
    return min(8, os.cpu_count() or 1)


def _hist_csv(em: Emitter, name: str, data: np.ndarray, bins: int = 80):
    hist, edges = np.histogram(data, bins=bins, density=True)
    em.write_csv(name, ["bin_left", "bin_right", "density"],
                 [edges[:-1], edges[1:], hist])


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_spectrum(cfg: RunConfig) -> list:
    em = Emitter(cfg, "spectrum")
    grid = cfg.grid()
    sw = sample_ittc(cfg.sea, grid)
    em.write_csv("spectrum_wave.csv", ["omega", "density"], [sw.omega, sw.density])
    seff = sample_effective(cfg.sea, cfg.ship.length, grid)
    em.write_csv("spectrum_effective.csv", ["omega", "density"], [seff.omega, seff.density])
    if cfg.filter is not None:
        s6 = sample_arma(cfg.filter, grid)
        em.write_csv("spectrum_filter.csv", ["omega", "density"], [s6.omega, s6.density])
    return em.finish()


def cmd_fit_filter(cfg: RunConfig) -> list:
    em = Emitter(cfg, "fit-filter")
    grid = cfg.grid()
    target = sample_effective(cfg.sea, cfg.ship.length, grid)
    report = fit_arma(target, FitOptions(seed=cfg.seed))
    em.write_json("filter_fit.json", report.to_json_dict())
    fitted = sample_arma(report.filter, grid)
    em.write_csv("filter_fit_overlay.csv", ["omega", "target", "fitted"],
                 [grid, target.density, fitted.density])
    return em.finish()


def cmd_simulate(cfg: RunConfig, threads: int | None = None) -> list:
    em = Emitter(cfg, "simulate")
    threads = _threads() if threads is None else threads
    filt = cfg.require_filter()
    grid = cfg.grid()
    seff = sample_effective(cfg.sea, cfg.ship.length, grid)
    curve = cfg.ship.gm_curve()

    # superposition ensemble of effective-wave records
    sup_runs = []
    for r in range(cfg.realizations):
        sup_runs.append(superpose_series(seff, cfg.duration, cfg.dt_superposition,
                                         RngSpec(cfg.seed, r), n_components=cfg.grid_n))
    sup_stats = ensemble_stats(sup_runs, [(1,), (2,)], discard=cfg.discard)
    em.write_json("stats_superposition.json", sup_stats.to_json_dict())
    wave0 = sup_runs[0]
    em.write_csv("wave_superposition.csv", ["t", "zeta"], [wave0.times, wave0.values])
    em.write_csv("gm_superposition.csv", ["t", "dgm"],
                 [wave0.times, delta_gm(np.clip(wave0.values, -curve.zeta_max,
                                                curve.zeta_max), curve)])

    # one finely stored filter path for spectrum analysis
    fine = simulate_filter(filt, min(cfg.duration, 20000.0), 0.01, RngSpec(cfg.seed + 1, 0))
    per = periodogram(fine, nperseg=min(1 << 14, fine.values.shape[0] // 2))
    em.write_csv("periodogram_sde.csv", ["omega", "density"], [per.omega, per.density])
    per_sup = periodogram(wave0, nperseg=min(1 << 14, wave0.values.shape[0] // 2))
    em.write_csv("periodogram_superposition.csv", ["omega", "density"],
                 [per_sup.omega, per_sup.density])

    # roll ensemble by Euler-Maruyama
    keep = max(1, int(round(0.1 / cfg.dt)))
    init = np.zeros(8)
    init[0] = math.radians(5.0)
    runs = run_roll_ensemble(cfg.ship, filt, cfg.realizations, cfg.duration, cfg.dt,
                             master_seed=cfg.seed + 2, init=init, keep_every=keep,
                             threads=threads)
    idx = [(1, 0, 0, 0, 0, 0, 0, 0), (2, 0, 0, 0, 0, 0, 0, 0),
           (0, 1, 0, 0, 0, 0, 0, 0), (0, 2, 0, 0, 0, 0, 0, 0),
           (0, 0, 1, 0, 0, 0, 0, 0), (0, 0, 2, 0, 0, 0, 0, 0),
           (3, 0, 0, 0, 0, 0, 0, 0), (4, 0, 0, 0, 0, 0, 0, 0)]
    stats = ensemble_stats(runs, idx, discard=cfg.discard)
    em.write_json("stats_sde.json", stats.to_json_dict())
    roll0 = runs[0]
    em.write_csv("roll_sde.csv", ["t"] + [f"x{j + 1}" for j in range(8)],
                 [roll0.times] + [roll0.values[:, j] for j in range(8)])
    em.write_csv("gm_sde.csv", ["t", "dgm"],
                 [roll0.times, delta_gm(np.clip(roll0.values[:, 2], -curve.zeta_max,
                                                curve.zeta_max), curve)])

    pooled_x1 = np.concatenate([r.values[r.times > cfg.discard, 0] for r in runs])
    _hist_csv(em, "hist_x1.csv", pooled_x1)
    pooled_gm = delta_gm(np.clip(
        np.concatenate([r.values[r.times > cfg.discard, 2] for r in runs]),
        -curve.zeta_max, curve.zeta_max), curve)
    _hist_csv(em, "hist_gm.csv", pooled_gm)
    return em.finish()


def cmd_moments(cfg: RunConfig, closure: int | None = None, duration: float | None = None,
                dt: float | None = None, window: float | None = None) -> list:
    em = Emitter(cfg, "moments")
    filt = cfg.require_filter()
    order = cfg.closure_order if closure is None else closure
    if order not in (2, 3):
        raise ConfigError(f"closure order must be 2 or 3, got {order}")
    system = build_system(cfg.ship, filt, closure_order=order)
    traj = rk4_integrate(system, init_value=0.01,
                         duration=cfg.moment_duration if duration is None else duration,
                         dt=cfg.moment_dt if dt is None else dt, store_every=10)
    names = ["m_" + "".join(map(str, idx)) for idx in traj.tracked]
    em.write_csv("moments_trajectory.csv", ["t"] + names,
                 [traj.times] + [traj.rows[:, j] for j in range(len(names))])
    stats = steady_state_stats(traj, cfg.window_fraction if window is None else window)
    payload = {
        "closure_order": order,
        "window": {"t_start": stats.window[0], "t_end": stats.window[1]},
        "steady": {n: stats.values[idx] for n, idx in zip(names, traj.tracked)},
        "oscillation": {n: stats.oscillation[idx] for n, idx in zip(names, traj.tracked)},
    }
    em.write_json("moments_steady.json", payload)
    return em.finish()


def cmd_fit_pdf(cfg: RunConfig, targets_from: str = "moments",
                targets_file: str | None = None, kind: str = "both") -> list:
    em = Emitter(cfg, "fit-pdf")
    if targets_from == "moments":
        filt = cfg.require_filter()
        system = build_system(cfg.ship, filt, closure_order=cfg.closure_order)
        traj = rk4_integrate(system, init_value=0.01, duration=cfg.moment_duration,
                             dt=cfg.moment_dt, store_every=10)
        stats = steady_state_stats(traj, cfg.window_fraction)
        m1 = stats.values[(1, 0, 0, 0, 0, 0, 0, 0)]
        m2 = stats.values[(2, 0, 0, 0, 0, 0, 0, 0)]
        targets = targets_from_moments(m1, m2)
    elif targets_from == "sde":
        filt = cfg.require_filter()
        keep = max(1, int(round(0.1 / cfg.dt)))
        init = np.zeros(8)
        init[0] = math.radians(5.0)
        runs = run_roll_ensemble(cfg.ship, filt, cfg.realizations, cfg.duration, cfg.dt,
                                 master_seed=cfg.seed + 2, init=init, keep_every=keep,
                                 threads=_threads())
        idx = [tuple([n] + [0] * 7) for n in range(1, 5)]
        stats = ensemble_stats(runs, idx, discard=cfg.discard)
        targets = MomentTargets(*(stats.estimate(i) for i in idx))
        pooled = np.concatenate([r.values[r.times > cfg.discard, 0] for r in runs])
        _hist_csv(em, "hist_x1.csv", pooled)
    elif targets_from == "file":
        if not targets_file:
            raise ConfigError("fit-pdf --targets-from file needs --targets-file")
        with open(targets_file) as f:
            raw_t = json.load(f)
        try:
            targets = MomentTargets(m1=float(raw_t["m1"]), m2=float(raw_t["m2"]),
                                    m3=float(raw_t["m3"]), m4=float(raw_t["m4"]))
        except (KeyError, ValueError, TypeError) as e:
            raise ConfigError(f"targets file: {e}") from None
    else:
        raise ConfigError(f"unknown targets source {targets_from!r}")

    xs = np.linspace(-math.pi / 2, math.pi / 2, 721)
    kinds = ("type1", "type2") if kind == "both" else (kind,)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        for k in kinds:
            fit = fit_pdf(targets, k, PdfFitOptions(seed=cfg.seed))
            payload = fit.model.to_json_dict()
            payload["residual"] = fit.residual
            payload["targets"] = {"m1": targets.m1, "m2": targets.m2,
                                  "m3": targets.m3, "m4": targets.m4}
            em.write_json(f"pdf_{k}.json", payload)
            em.write_csv(f"pdf_{k}.csv", ["x", "p"], [xs, pdf_density(xs, fit.model)])
    return em.finish()


def cmd_export_closures(cfg: RunConfig) -> list:
    em = Emitter(cfg, "export-closures")
    lines = []
    for target in sorted(EXP_TARGETS):
        poly = closure_polynomial(target, closure_order=2)
        name = "m_" + ",".join(map(str, target))
        lines.append(f"{name} = {poly}")
    em.write_text("closures.txt", "\n".join(lines) + "\n")
    return em.finish()


EXP_TARGETS = ([(n,) for n in range(3, 11)]
               + [(1, n) for n in range(2, 13)]
               + [(1, 1, n) for n in range(1, 13)])


def cmd_validate(cfg: RunConfig, only=None) -> tuple:
    from . import validate

    em = Emitter(cfg, "validate")
    results = validate.run_criteria(numbers=only)
    payload = {"criteria": [r.to_json_dict() for r in results],
               "passed": all(r.passed for r in results)}
    em.write_json("validation.json", payload)
    em.finish()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] criterion {r.number}: {r.name}")
    return results, payload["passed"]


# --------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parroll", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", required=True, help="path to the JSON run config")
        sp.add_argument("--seed", type=int, default=None, help="override run.seed")
        sp.add_argument("--out", default=None, help="override the output directory")

    common(sub.add_parser("spectrum", help="emit wave/effective/filter spectra"))
    common(sub.add_parser("fit-filter", help="fit the filter to the effective-wave spectrum"))

    sp = sub.add_parser("simulate", help="run superposition and SDE ensembles")
    common(sp)
    sp.add_argument("--realizations", type=int, default=None)
    sp.add_argument("--dt", type=float, default=None)
    sp.add_argument("--duration", type=float, default=None)
    sp.add_argument("--discard", type=float, default=None)

    sp = sub.add_parser("moments", help="integrate the closed moment equations")
    common(sp)
    sp.add_argument("--closure", type=int, choices=(2, 3), default=None)
    sp.add_argument("--duration", type=float, default=None)
    sp.add_argument("--dt", type=float, default=None)
    sp.add_argument("--window", type=float, default=None)

    sp = sub.add_parser("fit-pdf", help="fit both density shapes to moment targets")
    common(sp)
    sp.add_argument("--kind", choices=("type1", "type2", "both"), default="both")
    sp.add_argument("--targets-from", choices=("moments", "sde", "file"), default="moments")
    sp.add_argument("--targets-file", default=None)

    common(sub.add_parser("export-closures", help="dump the closure polynomials as text"))

    sp = sub.add_parser("validate", help="run the validation suite")
    common(sp)
    sp.add_argument("--only", type=int, nargs="+", default=None,
                    help="restrict to these criterion numbers")
    return p


def _load_config(args) -> RunConfig:
    try:
        with open(args.config) as f:
            raw = json.load(f)
    except OSError as e:
        raise ConfigError(f"config: {e}") from None
    except json.JSONDecodeError as e:
        raise ConfigError(f"config: invalid JSON: {e}") from None
    if args.seed is not None:
        raw.setdefault("run", {})["seed"] = args.seed
    if args.out is not None:
        raw["outputs"] = args.out
    for key in ("realizations", "dt", "duration", "discard"):
        v = getattr(args, key, None)
        if v is not None:
            raw.setdefault("run", {})[key] = v
    return RunConfig.from_dict(raw)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _load_config(args)
        if args.command == "spectrum":
            cmd_spectrum(cfg)
        elif args.command == "fit-filter":
            cmd_fit_filter(cfg)
        elif args.command == "simulate":
            cmd_simulate(cfg)
        elif args.command == "moments":
            cmd_moments(cfg, closure=args.closure, duration=args.duration,
                        dt=args.dt, window=args.window)
        elif args.command == "fit-pdf":
            cmd_fit_pdf(cfg, targets_from=args.targets_from,
                        targets_file=args.targets_file, kind=args.kind)
        elif args.command == "export-closures":
            cmd_export_closures(cfg)
        elif args.command == "validate":
            _, ok = cmd_validate(cfg, only=args.only)
            if not ok:
                return 4
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except (BlowUpError, FloatingPointError, FitError, ZeroDivisionError) as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
