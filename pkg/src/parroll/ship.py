"""Ship restoring, damping, and metacentric-height variation polynomials.

The roll equation drift splits into G(x1, x2), collecting damping and the
calm-water restoring, and F(x3) x1, the parametric excitation driven by the
effective wave elevation x3:

    G(x1, x2) = b1 x2 + b3 x2^3 + w0^2 sum_n g_{2n-1} x1^(2n-1)   n = 1..5
    F(x3)     = (w0^2 / GM) sum_n r_n x3^n                        n = 1..12

G returns a moment per unit inertia [rad/s^2]; the cubic damping
coefficient b3 therefore carries s/rad^2.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ShipModel:
    """Roll-dynamics parameters of one loading condition.

    gamma are the odd-power restoring multipliers g1, g3, g5, g7, g9 of
    w0^2 * x1^(2n-1); rho are the twelve coefficients of the metacentric
    height variation polynomial in the effective wave elevation [m].
    """

    gm: float
    omega0: float
    beta1: float
    beta3: float
    gamma: tuple[float, ...]
    rho: tuple[float, ...]
    length: float
    fn: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(float(g) for g in self.gamma))
        object.__setattr__(self, "rho", tuple(float(r) for r in self.rho))
        if not self.gm > 0:
            raise ValueError(f"gm must be > 0, got {self.gm}")
        if not self.omega0 > 0:
            raise ValueError(f"omega0 must be > 0, got {self.omega0}")
        if self.beta1 < 0:
            raise ValueError(f"beta1 must be >= 0, got {self.beta1}")
        if len(self.gamma) != 5:
            raise ValueError(f"gamma must have exactly 5 entries, got {len(self.gamma)}")
        if len(self.rho) != 12:
            raise ValueError(f"rho must have exactly 12 entries, got {len(self.rho)}")
        if not self.length > 0:
            raise ValueError(f"length must be > 0, got {self.length}")

    def gm_curve(self, zeta_max: float = 4.0) -> "GmCurve":
        return GmCurve(rho=self.rho, zeta_max=zeta_max)

    def to_dict(self) -> dict:
        return {"gm": self.gm, "omega0": self.omega0, "beta1": self.beta1,
                "beta3": self.beta3, "gamma": list(self.gamma), "rho": list(self.rho),
                "length": self.length, "fn": self.fn}

    @classmethod
    def from_dict(cls, d: dict) -> "ShipModel":
        return cls(gm=float(d["gm"]), omega0=float(d["omega0"]), beta1=float(d["beta1"]),
                   beta3=float(d["beta3"]), gamma=tuple(d["gamma"]), rho=tuple(d["rho"]),
                   length=float(d["length"]), fn=float(d.get("fn", 0.0)))


@dataclass(frozen=True)
class GmCurve:
    """Metacentric-height variation vs wave elevation at amidship.

    Positive elevation means trough amidships, which raises GM for the
    stock ship.  There is no constant term, so the variation vanishes at
    zero elevation by construction.
    """

    rho: tuple[float, ...]
    zeta_max: float = 4.0

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(float(r) for r in self.rho))
        if len(self.rho) != 12:
            raise ValueError(f"rho must have exactly 12 entries, got {len(self.rho)}")
        if not self.zeta_max > 0:
            raise ValueError("zeta_max must be > 0")


def _horner_no_const(x, coeffs):
    """sum_n c_n x^n for n = 1..len(coeffs), by Horner."""
    acc = 0.0 * x
    for c in reversed(coeffs):
        acc = (acc + c) * x
    return acc


def damping_restoring_G(x1, x2, ship: ShipModel):
    """Damping plus calm-water restoring moment per unit inertia [rad/s^2]."""
    x1a = np.asarray(x1, dtype=float)
    x2a = np.asarray(x2, dtype=float)
    x1sq = x1a * x1a
    acc = 0.0 * x1a
    for g in reversed(ship.gamma):  # Horner in x1^2 over the odd powers
        acc = acc * x1sq + g
    # cube via products: pow() is not exactly odd, and G(-x) == -G(x) must hold
    out = ship.beta1 * x2a + ship.beta3 * (x2a * x2a * x2a) + ship.omega0 ** 2 * acc * x1a
    return out if out.ndim else float(out)


def parametric_F(x3, ship: ShipModel):
    """Parametric restoring-variation coefficient (w0^2/GM) sum r_n x3^n [1/s^2]."""
    out = ship.omega0 ** 2 / ship.gm * _horner_no_const(np.asarray(x3, dtype=float), ship.rho)
    return out if out.ndim else float(out)


def delta_gm(zeta, curve: GmCurve):
    """Metacentric-height variation [m] at wave elevation zeta [m].

    Evaluation is clamped to the fitted range [-zeta_max, zeta_max]; a
    warning is emitted when any input falls outside it.
    """
    z = np.asarray(zeta, dtype=float)
    if np.any(np.abs(z) > curve.zeta_max):
        warnings.warn(f"wave elevation outside fitted range +-{curve.zeta_max} m; clamping",
                      RuntimeWarning, stacklevel=2)
        z = np.clip(z, -curve.zeta_max, curve.zeta_max)
    out = _horner_no_const(z, curve.rho)
    return out if np.ndim(zeta) else float(out)


def gm_series(wave, curve: GmCurve):
    """Map a scalar wave-elevation series pointwise through the GM curve."""
    from .simulate import TimeSeries

    values = np.asarray(wave.values)
    if values.ndim != 1:
        raise ValueError("gm_series expects a scalar series")
    return TimeSeries(dt=wave.dt, values=np.asarray(delta_gm(values, curve)))


def example_ship() -> ShipModel:
    """The documented synthetic container ship used throughout the tests.

    Principal numbers follow a C11-class post-Panamax container ship:
    GM 1.965 m, natural roll period 25.1 s (omega0 = 2 pi / 25.1), linear
    and cubic damping 3.64e-3 and 4.25, length 262 m.  The restoring curve
    is linear to roughly 40 degrees with a mild hardening cubic; the GM
    variation polynomial is monotone over +-4 m with the crest side losing
    more GM than the trough side gains.
    """
    return ShipModel(
        gm=1.965,
        omega0=2.0 * math.pi / 25.1,
        beta1=3.64e-3,
        beta3=4.25,
        gamma=(1.0, 0.15, 0.0, 0.0, 0.0),
        rho=(0.55, -0.04, 0.006, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        length=262.0,
        fn=0.0,
    )
