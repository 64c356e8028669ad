"""Wave spectra and transfer functions on angular-frequency grids.

All spectra are one-sided densities over angular frequency omega [rad/s],
with units m^2 s, so that the zeroth spectral moment equals the process
variance in m^2.  Head seas correspond to a heading angle chi = pi.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

#: Standard gravity [m/s^2]; overridable per call.
G_STD = 9.81

#: Half-width of the band around |u| = pi where the longitudinal-average
#: transfer function switches to its local series expansion.
_SINGULAR_BAND = 1e-4


@dataclass(frozen=True)
class SeaState:
    """Two-parameter sea state.

    Parameters
    ----------
    t01 : float
        Mean wave period [s].
    h13 : float
        Significant wave height [m].
    chi : float
        Wave heading angle [rad]; pi means head seas.
    fn : float
        Froude number; forward speed is out of scope, so 0 everywhere.
    """

    t01: float
    h13: float
    chi: float = np.pi
    fn: float = 0.0

    def __post_init__(self):
        if not self.t01 > 0:
            raise ValueError(f"t01 must be > 0, got {self.t01}")
        if not self.h13 > 0:
            raise ValueError(f"h13 must be > 0, got {self.h13}")
        if not 0.0 <= self.chi < 2.0 * np.pi:
            raise ValueError(f"chi must lie in [0, 2*pi), got {self.chi}")


@dataclass
class SpectrumSamples:
    """A spectral density sampled on a strictly increasing positive grid."""

    omega: np.ndarray
    density: np.ndarray

    def __post_init__(self):
        self.omega = np.asarray(self.omega, dtype=float)
        self.density = np.asarray(self.density, dtype=float)
        if self.omega.ndim != 1 or self.omega.size == 0:
            raise ValueError("omega grid must be a nonempty 1-D array")
        if self.omega.shape != self.density.shape:
            raise ValueError("omega and density must have the same length")
        if not np.all(self.omega > 0.0):
            raise ValueError("all grid frequencies must be > 0")
        if not np.all(np.diff(self.omega) > 0.0):
            raise ValueError("grid frequencies must be strictly increasing")
        if not np.all(self.density >= 0.0):
            raise ValueError("spectral densities must be nonnegative")

    def moment(self, n: int) -> float:
        return spectral_moment(self, n)

    def to_csv(self, path) -> None:
        with open(path, "w", newline="\n") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(["omega", "density"])
            for om, s in zip(self.omega, self.density):
                w.writerow([repr(float(om)), repr(float(s))])

    @classmethod
    def from_csv(cls, path) -> "SpectrumSamples":
        with open(path, "r", newline="") as f:
            rows = list(csv.reader(f))
        if not rows or rows[0] != ["omega", "density"]:
            raise ValueError(f"{path}: expected header 'omega,density'")
        data = np.array([[float(a), float(b)] for a, b in rows[1:]])
        return cls(data[:, 0], data[:, 1])


def default_grid(n: int = 512, lo: float = 0.05, hi: float = 3.0) -> np.ndarray:
    """Uniform angular-frequency grid used by default, 512 points on [0.05, 3]."""
    if n < 2 or not 0 < lo < hi:
        raise ValueError("need n >= 2 and 0 < lo < hi")
    return np.linspace(lo, hi, n)


def example_sea() -> SeaState:
    """The stock head-sea state used throughout the tests: T01 9.99 s, H13 5 m."""
    return SeaState(t01=9.99, h13=5.0, chi=np.pi, fn=0.0)


def ittc_density(omega, sea: SeaState):
    """ITTC two-parameter wave spectrum S_w(omega) [m^2 s].

    S_w = 173 H13^2 / (T01^4 omega^5) * exp(-691 / (T01^4 omega^4)).
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0.0):
        raise ValueError("ittc_density requires omega > 0")
    t4 = sea.t01 ** 4
    out = 173.0 * sea.h13 ** 2 / (t4 * omega ** 5) * np.exp(-691.0 / (t4 * omega ** 4))
    return out if out.ndim else float(out)


def grim_transfer(omega, chi: float, length: float, g: float = G_STD):
    """Longitudinal-average (effective wave) transfer amplitude H(omega, chi).

    With u = omega^2 L cos(chi) / (2 g) this is 2 u sin(u) / (pi^2 - u^2);
    the imaginary part is identically zero.  The removable singularity at
    u = +-pi is evaluated by a local second-order expansion (limit value 1).
    """
    if length <= 0:
        raise ValueError("length must be > 0")
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0.0):
        raise ValueError("grim_transfer requires omega >= 0")
    u = omega ** 2 * length * np.cos(chi) / (2.0 * g)
    au = np.abs(u)
    delta = au - np.pi
    near = np.abs(delta) < _SINGULAR_BAND
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = 2.0 * u * np.sin(u) / (np.pi ** 2 - u ** 2)
    # 2u sin(u)/(pi^2-u^2) = 1 + d/(2 pi) - d^2 (1/6 + 1/(4 pi^2)) + O(d^3),
    # d = |u| - pi; even in u.
    series = 1.0 + delta / (2.0 * np.pi) - delta ** 2 * (1.0 / 6.0 + 1.0 / (4.0 * np.pi ** 2))
    out = np.where(near, series, direct)
    return out if out.ndim else float(out)


def effective_density(omega, sea: SeaState, length: float, g: float = G_STD):
    """Effective-wave spectrum |H(omega, chi)|^2 S_w(omega) [m^2 s]."""
    h = grim_transfer(omega, sea.chi, length, g)
    return h * h * ittc_density(omega, sea)


def arma_density(omega, filt):
    """Output spectrum of the sixth-order filter driven by unit white noise.

    S6 = k^2 w^6 / [(-w^6 + a2 w^4 - a4 w^2 + a6)^2 + (a1 w^5 - a3 w^3 + a5 w)^2],
    even in omega.  Raises if the denominator vanishes, which only happens
    for a marginally stable or unstable filter.
    """
    a1, a2, a3, a4, a5, a6 = filt.alpha
    w = np.asarray(omega, dtype=float)
    w2 = w * w
    re = ((-w2 + a2) * w2 - a4) * w2 + a6
    im = ((a1 * w2 - a3) * w2 + a5) * w
    den = re * re + im * im
    if np.any(den == 0.0):
        raise ZeroDivisionError("filter spectrum denominator vanished; filter is not strictly stable")
    out = filt.k ** 2 * w2 ** 3 / den
    return out if out.ndim else float(out)


def spectral_moment(samples: SpectrumSamples, n: int) -> float:
    """Trapezoid-rule spectral moment m_n = int omega^n S(omega) d omega."""
    if n < 0:
        raise ValueError("moment order must be >= 0")
    return float(np.trapezoid(samples.omega ** n * samples.density, samples.omega))


def sample_ittc(sea: SeaState, grid: np.ndarray | None = None) -> SpectrumSamples:
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    return SpectrumSamples(grid, ittc_density(grid, sea))


def sample_effective(sea: SeaState, length: float, grid: np.ndarray | None = None,
                     g: float = G_STD) -> SpectrumSamples:
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    return SpectrumSamples(grid, effective_density(grid, sea, length, g))


def sample_arma(filt, grid: np.ndarray | None = None) -> SpectrumSamples:
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    return SpectrumSamples(grid, arma_density(grid, filt))
