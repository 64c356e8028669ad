"""Non-Gaussian roll-angle densities fitted to moment targets.

Two exponential-family shapes are supported on a symmetric finite support:

    type1:  C exp(-(d1 x + d2 x^2 + d3 x^3 + d4 x^4))
    type2:  C exp(-(d1|x| + d2|x|^2 + d3|x|^3 + d4|x|^4))

Fitting minimizes the scaled squared moment residuals

    sum_n l_n ( J_n / s_n )^2,    J_n = moment_n(model) - target_n,

with s_n = max(|target_n|, target_2^(n/2)).  A signed sum of the J_n is
not coercive, hence the squares.  Candidate coefficient subsets are tried
from smallest to largest and the smallest subset within one percent of the
best achievable residual wins, so targets generated by a family member
recover that member's coefficients instead of wandering on the
zero-residual manifold of the full four-parameter problem.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import integrate, optimize

#: Default symmetric support bound for roll-angle densities [rad].
DEFAULT_SUPPORT = math.pi / 2


@dataclass(frozen=True)
class PdfModel:
    """Normalized density of one of the two supported shapes."""

    kind: str
    d: tuple[float, float, float, float]
    c_norm: float
    support: float = DEFAULT_SUPPORT

    def __post_init__(self):
        if self.kind not in ("type1", "type2"):
            raise ValueError(f"kind must be 'type1' or 'type2', got {self.kind!r}")
        object.__setattr__(self, "d", tuple(float(x) for x in self.d))
        if len(self.d) != 4:
            raise ValueError("need exactly four coefficients")
        if not self.support > 0:
            raise ValueError("support bound must be > 0")
        if not (np.isfinite(self.c_norm) and self.c_norm > 0):
            raise ValueError("model is not normalized (c_norm must be positive)")

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "d": list(self.d), "C": self.c_norm,
                "support": self.support}


@dataclass(frozen=True)
class MomentTargets:
    """First four raw moments of the roll angle plus fit weights."""

    m1: float
    m2: float
    m3: float
    m4: float
    weights: tuple[float, float, float, float] = (1.0, 1.0, 1.0, 1.0)

    def __post_init__(self):
        if not self.m2 > 0:
            raise ValueError("second moment must be > 0")
        if self.m4 < self.m2 ** 2:
            raise ValueError("moment targets violate m4 >= m2^2")

    @property
    def moments(self) -> tuple:
        return (self.m1, self.m2, self.m3, self.m4)

    @property
    def scales(self) -> tuple:
        return tuple(max(abs(m), self.m2 ** (n / 2.0))
                     for n, m in zip(range(1, 5), self.moments))


def _exponent_poly(x, d, absolute: bool):
    z = np.abs(x) if absolute else np.asarray(x, dtype=float)
    return ((d[3] * z + d[2]) * z + d[1]) * z * z + d[0] * z


def _check_integrable(kind: str, d) -> None:
    """The exponent must grow to +inf in both tails of the real line."""
    if kind == "type2":
        lead = next((c for c in reversed(d) if c != 0.0), None)
    else:
        if d[3] != 0.0:
            lead = d[3]
        elif d[2] != 0.0:
            lead = None  # odd leading power diverges on one side
        else:
            lead = d[1] if d[1] != 0.0 else None
    if lead is None or lead <= 0.0:
        raise ValueError(f"coefficients {tuple(d)} do not define a decaying {kind} shape")


def pdf_density(x, model: PdfModel):
    """Density value(s) at x; identically zero outside the support."""
    xa = np.asarray(x, dtype=float)
    inside = np.abs(xa) <= model.support
    val = model.c_norm * np.exp(-_exponent_poly(xa, model.d, model.kind == "type2"))
    out = np.where(inside, val, 0.0)
    return out if out.ndim else float(out)


def normalize(kind: str, d, support: float = DEFAULT_SUPPORT) -> float:
    """Normalization constant 1 / integral of exp(-exponent) over the support."""
    _check_integrable(kind, d)
    d = tuple(float(x) for x in d)
    absolute = kind == "type2"
    f = lambda x: math.exp(-float(_exponent_poly(x, d, absolute)))
    if absolute:
        val, _ = integrate.quad(f, 0.0, support, epsabs=0.0, epsrel=1e-11, limit=200)
        val *= 2.0
    else:
        val, _ = integrate.quad(f, -support, support, epsabs=0.0, epsrel=1e-11, limit=200)
    if not (np.isfinite(val) and val > 0):
        raise ValueError("normalization integral failed")
    return 1.0 / val


def pdf_moment(model: PdfModel, n: int) -> float:
    """Raw moment E[x^n], n = 1..4, by adaptive quadrature."""
    if not 1 <= n <= 4:
        raise ValueError("moment order must be between 1 and 4")
    if model.kind == "type2" and n % 2 == 1:
        return 0.0  # even density
    absolute = model.kind == "type2"
    f = lambda x: x ** n * model.c_norm * math.exp(-float(_exponent_poly(x, model.d, absolute)))
    if absolute:
        val, _ = integrate.quad(f, 0.0, model.support, epsabs=1e-12, epsrel=1e-10, limit=200)
        return 2.0 * val
    val, _ = integrate.quad(f, -model.support, model.support, epsabs=1e-12, epsrel=1e-10,
                            limit=200)
    return float(val)


def targets_from_moments(m1: float, m2: float) -> MomentTargets:
    """Extend a mean and second moment to four targets by second-order
    cumulant neglect: m3 = 3 m1 m2 - 2 m1^3, m4 = 3 m2^2 - 2 m1^4."""
    if not m2 > m1 ** 2:
        raise ValueError("degenerate targets: variance m2 - m1^2 must be > 0")
    return MomentTargets(m1=m1, m2=m2, m3=3.0 * m1 * m2 - 2.0 * m1 ** 3,
                         m4=3.0 * m2 ** 2 - 2.0 * m1 ** 4)


@dataclass(frozen=True)
class PdfFitOptions:
    n_starts: int = 8
    seed: int = 0
    max_iter: int = 2000
    gl_nodes: int = 512
    support: float = DEFAULT_SUPPORT
    # candidate coefficient subsets, tried smallest first
    ladders: dict = field(default_factory=lambda: {
        "type1": ((2,), (1, 2), (2, 4), (1, 2, 4), (1, 2, 3, 4)),
        "type2": ((1,), (2,), (1, 2), (2, 4), (1, 2, 4), (1, 2, 3, 4)),
    })


@dataclass
class PdfFitResult:
    model: PdfModel
    residual: float
    residuals: tuple  # J_1..J_4
    active: tuple     # which of d1..d4 were optimized


@lru_cache(maxsize=8)
def _gl_nodes(n: int, a: float, b: float):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w


def _softplus(t):
    return float(np.logaddexp(0.0, t))


def _inv_softplus(y):
    return y + math.log(-math.expm1(-y)) if y > 0 else math.log(math.expm1(max(y, 1e-12)))


def _model_moments_fast(kind, d, support, nodes):
    """First four raw moments on cached Gauss-Legendre nodes.

    type2 integrands are folded onto [0, support] where |x| is smooth.
    """
    with np.errstate(over="ignore", invalid="ignore"):
        if kind == "type2":
            x, w = nodes["half"]
            f = w * np.exp(-_exponent_poly(x, d, True))
            q = 2.0 * f.sum()
            mom = [0.0, 2.0 * (f * x ** 2).sum() / q, 0.0, 2.0 * (f * x ** 4).sum() / q]
        else:
            x, w = nodes["full"]
            f = w * np.exp(-_exponent_poly(x, d, False))
            q = f.sum()
            mom = [(f * x ** n).sum() / q for n in range(1, 5)]
    return np.array(mom), q


def fit_pdf(targets: MomentTargets, kind: str,
            options: PdfFitOptions = PdfFitOptions()) -> PdfFitResult:
    """Fit one density shape to the moment targets.

    Deterministic for a fixed seed: every candidate subset is optimized by
    a multi-start simplex and the winner is the smallest subset whose
    residual is within one percent of the best found overall.
    """
    if kind not in ("type1", "type2"):
        raise ValueError(f"kind must be 'type1' or 'type2', got {kind!r}")
    t = np.asarray(targets.moments)
    s = np.asarray(targets.scales)
    l = np.asarray(targets.weights)
    if kind == "type2" and (abs(t[0]) / s[0] > 1e-3 or abs(t[2]) / s[2] > 1e-3):
        warnings.warn("type2 densities are even: nonzero odd-moment targets "
                      "cannot be matched and will stay as residuals",
                      RuntimeWarning, stacklevel=2)
    nodes = {
        "half": _gl_nodes(options.gl_nodes, 0.0, options.support),
        "full": _gl_nodes(options.gl_nodes, -options.support, options.support),
    }

    def unpack(theta, active):
        d = [0.0, 0.0, 0.0, 0.0]
        top = max(active)
        for th, a in zip(theta, active):
            d[a - 1] = _softplus(th) if a == top else float(th)
        return tuple(d)

    def objective(theta, active):
        d = unpack(theta, active)
        mom, q = _model_moments_fast(kind, d, options.support, nodes)
        if not np.isfinite(q) or q <= 0 or not np.all(np.isfinite(mom)):
            return 1e12
        J = mom - t
        return float(np.sum(l * (J / s) ** 2))

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(options.seed)))
    d2_gauss = 1.0 / (2.0 * targets.m2)
    d1_lap = math.sqrt(2.0 / targets.m2)

    candidates = []
    for active in options.ladders[kind]:
        top = max(active)
        theta0 = []
        for a in active:
            if a == 2:
                v = d2_gauss
            elif a == 1:
                v = d1_lap if kind == "type2" else 0.0
            else:
                v = 1e-3
            if a == top:
                theta0.append(_inv_softplus(max(v, 1e-3)))
            else:
                theta0.append(v)
        theta0 = np.asarray(theta0)
        n_starts = options.n_starts if len(active) >= 3 else max(3, options.n_starts // 2)
        best = None
        for start in range(n_starts):
            th = theta0 if start == 0 else theta0 + rng.normal(0.0, 1.0, size=len(active))
            res = optimize.minimize(objective, th, args=(active,), method="Nelder-Mead",
                                    options=dict(maxiter=options.max_iter, xatol=1e-12,
                                                 fatol=1e-15, adaptive=True))
            if best is None or res.fun < best.fun:
                best = res
        res = optimize.minimize(objective, best.x, args=(active,), method="Nelder-Mead",
                                options=dict(maxiter=2 * options.max_iter, xatol=1e-13,
                                             fatol=1e-16, adaptive=True))
        if res.fun < best.fun:
            best = res
        candidates.append((active, best))

    r_best = min(c[1].fun for c in candidates)
    tol = max(r_best * 1.01, r_best + 1e-10)
    active, best = next(c for c in candidates if c[1].fun <= tol)

    d = unpack(best.x, active)
    c_norm = normalize(kind, d, options.support)
    model = PdfModel(kind=kind, d=d, c_norm=c_norm, support=options.support)
    mom = np.array([pdf_moment(model, n) for n in range(1, 5)])
    J = mom - t
    residual = float(np.sum(l * (J / s) ** 2))
    return PdfFitResult(model=model, residual=residual, residuals=tuple(J), active=active)
