"""Parametric roll response in irregular longitudinal seas.

Pipeline pieces: wave and effective-wave spectra (`spectra`), stable
sixth-order filter fitting (`arma`), restoring/damping polynomials
(`ship`), superposition and Euler-Maruyama path synthesis (`simulate`),
moment-cumulant closure machinery (`closure`), closed moment ODE systems
(`moments`), and moment-matched roll-angle densities (`pdf`).  The `cli`
module glues them into the `parroll` command.
"""

__version__ = "0.1.0"

from .arma import ArmaFilter, characteristic_poles, example_filter, fit_arma, is_stable
from .closure import (ClosurePolynomial, CumulantSet, MomentSet, close_moment,
                      closure_polynomial, cumulants_to_moments, moments_to_cumulants)
from .moments import build_filter_system, build_system, rk4_integrate, steady_state_stats
from .pdf import MomentTargets, PdfModel, fit_pdf, normalize, pdf_density, pdf_moment
from .ship import GmCurve, ShipModel, damping_restoring_G, delta_gm, example_ship, parametric_F
from .simulate import (EnsembleStats, RngSpec, TimeSeries, ensemble_stats, periodogram,
                       simulate_filter, simulate_roll, superpose_series)
from .spectra import (SeaState, SpectrumSamples, arma_density, default_grid,
                      effective_density, example_sea, grim_transfer, ittc_density,
                      spectral_moment)
