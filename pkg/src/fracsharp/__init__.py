"""fracsharp: numerical verification of sharp weighted functional
inequalities for the fractional Laplacian.

The package exposes four layers:

* ``constants`` — closed-form sharp constants (gamma-function expressions),
* ``profiles`` — radial test profiles with exact Fourier transforms,
  moments, and power convolutions,
* ``functionals`` — weighted difference (Besov-type) energies and
  Monte-Carlo double integrals,
* ``verify`` — the check registry, sharpness probes, and the discrete
  rearrangement test, surfaced on the command line as ``fracsharp``.
"""

from .constants import (ConstantSpec, ConstantValue, constant_ids, cval,
                        eval_constant, validate_params)
from .errors import (ConsistencyError, ConvergenceError, DivergenceError,
                     DomainError, FracsharpError, ParameterError,
                     RegistryError, UnsupportedOrderError)
from .functionals import (BesovSpec, besov_p, besov_quadratic_weighted,
                          euclidean_profile_mc, mc_double,
                          second_difference_energy)
from .profiles import (RadialProfile, bessel_potential, fourier_radial,
                       lp_norm, multiplier, power_convolution, power_weighted,
                       spectral_moment, weighted_log_moment, weighted_moment,
                       weighted_p_moment)
from .quadrature import (QuadResult, halfspace_line_integral,
                         integrate_adaptive, sharp_constant_integral)
from .special import bessel_j, bessel_k, digamma, log_gamma, sphere_area
from .verify import (CheckReport, CheckSpec, check_ids, check_spec,
                     discrete_nsw_test, run_check, run_suite, sharpness_probe)

__version__ = "0.1.0"

__all__ = [
    "BesovSpec", "CheckReport", "CheckSpec", "ConsistencyError",
    "ConstantSpec", "ConstantValue", "ConvergenceError", "DivergenceError",
    "DomainError", "FracsharpError", "ParameterError", "QuadResult",
    "RadialProfile", "RegistryError", "UnsupportedOrderError",
    "bessel_j", "bessel_k", "bessel_potential", "besov_p",
    "besov_quadratic_weighted", "check_ids", "check_spec", "constant_ids",
    "cval", "digamma", "discrete_nsw_test", "euclidean_profile_mc",
    "eval_constant", "fourier_radial", "halfspace_line_integral",
    "integrate_adaptive", "log_gamma", "lp_norm", "mc_double", "multiplier",
    "power_convolution", "power_weighted", "run_check", "run_suite",
    "second_difference_energy", "sharp_constant_integral", "sharpness_probe",
    "special", "spectral_moment", "sphere_area", "validate_params",
    "weighted_log_moment", "weighted_moment", "weighted_p_moment",
    "__version__",
]
