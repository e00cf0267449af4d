"""Verification check registry.

Each named check computes both sides of one sharp identity or inequality on
configured radial profiles and emits a :class:`CheckReport` with a signed
relative margin.  The two sides of every check are computed by routes that
share no code path beyond the special-function layer, so a shared bug cannot
silently cancel.

Margin convention: ``margin = (lhs - rhs) / scale`` with
``scale = max(|lhs|, |rhs|, tiny)``.

* equality rows pass when ``|margin| <= tol``;
* inequality rows are oriented with the large side as ``lhs`` and pass when
  ``margin >= -tol`` (strict rows additionally require ``margin > 0``);
* residual rows treat ``lhs`` as the worst residual and pass when
  ``lhs <= tol``;
* monotonicity rows pass when every consecutive difference exceeds its
  summed error bars.

A non-converged quadrature produces a failing report whose notes flag
``status = "numerical"`` — never a claimed counterexample.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .constants import cval
from .errors import (ConvergenceError, DomainError, FracsharpError,
                     ParameterError, RegistryError)
from .functionals import (BesovSpec, besov_p, besov_quadratic_weighted,
                          second_difference_energy)
from .profiles import (RadialProfile, bessel_potential, fourier_radial,
                       hankel_point, log_moments, lp_norm, multiplier,
                       power_convolution, power_weighted, spectral_moment,
                       weighted_log_moment, weighted_moment, weighted_p_moment)
from .quadrature import (AngularKernel, QuadResult, Singularity,
                         angular_average, double_integral_diagonal,
                         halfspace_line_integral, integrate_adaptive,
                         sharp_constant_integral)
from .special import log_gamma, sphere_area

_TINY = 1e-300

LN2 = math.log(2.0)
LN_PI = math.log(math.pi)


# --------------------------------------------------------------------------
# report plumbing
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    """Registry row: relation kind, default tolerance and parameters."""

    id: str
    kind: str  # equality | inequality | inequality-strict | residual | monotonicity
    description: str
    tol: float
    defaults: Tuple[Tuple[str, object], ...] = ()

    def default_params(self) -> Dict[str, object]:
        return {k: v for k, v in self.defaults}


@dataclass
class CheckReport:
    id: str
    params: Dict[str, object]
    lhs: float
    rhs: float
    margin: float
    tol: float
    passed: bool
    evals: int = 0
    seed: Optional[int] = None
    notes: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {
            "id": self.id,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "tol": self.tol,
            "pass": self.passed,
            "evals": self.evals,
            "seed": self.seed,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=_json_default)


def _json_default(obj):
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON-serializable: {type(obj)!r}")


def _rel(lhs: float, rhs: float) -> float:
    return (lhs - rhs) / max(abs(lhs), abs(rhs), _TINY)


def _profile(cfg, n: int) -> RadialProfile:
    """Build a catalog profile from a {'kind': ..., params...} mapping."""
    if isinstance(cfg, RadialProfile):
        return cfg
    if not isinstance(cfg, dict) or "kind" not in cfg:
        raise ParameterError("profile", ["profile must be a RadialProfile or a "
                                        "mapping with a 'kind' entry"])
    kind = cfg["kind"]
    if kind == "gaussian":
        return RadialProfile.gaussian(cfg.get("a", 1.0), cfg.get("c", 1.0), n)
    if kind == "power_gaussian":
        return RadialProfile.power_gaussian(cfg.get("a", 1.0), cfg.get("c", 1.0),
                                            cfg.get("k", 1.0), n)
    if kind == "inverse_power":
        return RadialProfile.inverse_power(cfg.get("a", 1.0), cfg.get("s", 2.0), n)
    if kind == "sech_power":
        return RadialProfile.sech_power(cfg.get("a", 1.0), cfg.get("s", 1.0))
    raise ParameterError("profile", [f"unknown profile kind {kind!r}"])


def _profile_dict(cfg) -> Dict[str, object]:
    if isinstance(cfg, RadialProfile):
        return {"kind": cfg.kind, **dict(cfg.params)}
    return dict(cfg)


# --------------------------------------------------------------------------
# shared helpers
# --------------------------------------------------------------------------


def _sampled_convolution(f: RadialProfile, n: int, a: float,
                         pts: int = 240) -> RadialProfile:
    """Power convolution |x|^{-a} * f resampled onto a log grid.

    The pointwise convolution is an adaptive quadrature per radius; the
    resampled profile makes the downstream moment and difference-energy
    quadratures affordable while keeping the declared r^{-a} tail.
    """
    h = power_convolution(f, n, a)
    grid = np.geomspace(1e-4, 300.0, pts)
    vals = np.array([h.value(r) for r in grid])
    return RadialProfile.sampled(grid, vals, tail_exponent=-a, n=n)


def _sech_integral(m: float) -> float:
    """int_R sech^m(x) dx = sqrt(pi) Gamma(m/2)/Gamma((m+1)/2)."""
    return math.sqrt(math.pi) * math.exp(log_gamma(m / 2.0)
                                         - log_gamma((m + 1.0) / 2.0))


def _line_difference_energy(v: Callable[[float], float], n: int,
                            half_width: float, tol: float = 1e-9) -> QuadResult:
    """2 int_0^inf psi_{n/2,normalized}(e^w) int (v(u) - v(u-w))^2 du dw.

    This is the line reduction of the hyperbolic-kernel double integral
    int int |v(x)-v(y)|^2 phi[4 sinh^2((x-y)/2)] dx dy with the
    normalized-measure angular kernel of exponent n/2.
    """
    ker = AngularKernel(n, n / 2.0, "normalized")

    def inner(w: float) -> float:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", IntegrationWarning)
            val, _ = quad(lambda u: (v(u) - v(u - w)) ** 2,
                          -half_width, half_width + w,
                          epsabs=1e-14, epsrel=1e-10, limit=250)
        return val

    res = integrate_adaptive(
        lambda w: angular_average(ker, math.exp(w)) * inner(w),
        (0.0, 2.0 * half_width + 10.0), [Singularity(0.0, -1e-9)], tol=tol)
    return QuadResult(2.0 * res.value, 2.0 * res.abs_err, res.evals,
                      res.converged)


def _require_converged(*results: QuadResult) -> None:
    for r in results:
        if not r.converged:
            raise ConvergenceError("quadrature did not converge within budget")


# --------------------------------------------------------------------------
# check implementations (each returns a partial-report dict)
# --------------------------------------------------------------------------


def _check_gsr_identity(p, tol):
    n, alpha = int(p["n"]), float(p["alpha"])
    f = _profile(p["profile"], n)
    lhs = cval("pitt_C", n=n, alpha=alpha) * spectral_moment(f, n, alpha)
    g = power_weighted(f, (n - alpha) / 2.0)
    spec = BesovSpec(n=n, p=2.0, beta=alpha, lam=(n - alpha) / 2.0)
    # quadrature two decades tighter than the check tolerance is enough
    rem = besov_quadratic_weighted(g, spec,
                                   tol=max(1e-10, min(1e-7, 0.01 * tol)))
    _require_converged(rem)
    rhs = weighted_moment(f, n, alpha) + cval("gsr_D", n=n, alpha=alpha) * rem.value
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=rem.evals)


def _check_as_identity(p, tol):
    n, alpha = int(p["n"]), float(p["alpha"])
    f = _profile(p["profile"], n)
    lhs_q = besov_p(f, n, 2.0, alpha / 2.0,
                    tol=max(1e-10, min(1e-7, 0.01 * tol)))
    _require_converged(lhs_q)
    lhs = lhs_q.value
    rhs = cval("as_D", n=n, alpha=alpha) * spectral_moment(f, n, alpha)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=lhs_q.evals)


def _check_groundstate_thm1(p, tol):
    n, alpha, beta = int(p["n"]), float(p["alpha"]), float(p["beta"])
    f = _profile(p["profile"], n)
    C = cval("pitt_C", n=n, alpha=alpha)
    D = cval("as_D", n=n, alpha=beta)
    lhs = C * spectral_moment(f, n, alpha)
    h = f if alpha == beta else multiplier(f, n, (alpha - beta) / 2.0)
    g = power_weighted(h, (n - beta) / 2.0)
    spec = BesovSpec(n=n, p=2.0, beta=beta, lam=(n - beta) / 2.0)
    rem = besov_quadratic_weighted(g, spec)
    _require_converged(rem)
    rhs = weighted_moment(f, n, alpha) + (C / D) * rem.value
    notes = {"remainder": rem.value}
    if alpha == beta:
        notes["degenerate"] = "alpha = beta: inequality is the exact identity"
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=rem.evals,
                notes=notes)


def _check_pitt_spectral(p, tol):
    n, alpha = int(p["n"]), float(p["alpha"])
    f = _profile(p["profile"], n)
    C = cval("pitt_C", n=n, alpha=alpha)
    lhs = C * spectral_moment(f, n, alpha)
    rhs = weighted_moment(f, n, alpha)
    margin = _rel(lhs, rhs)
    return dict(lhs=lhs, rhs=rhs, margin=margin,
                notes={"ratio": rhs / lhs * C, "sharp_constant": C,
                       "gap": lhs - rhs,
                       "strict": "sharp constant is not attained; the gap "
                                 "must be strictly positive"})


def _check_hardy_classical(p, tol):
    n = int(p["n"])
    if n < 3:
        raise ParameterError("n", ["the classical gradient identity needs n >= 3"])
    f = _profile(p["profile"], n)
    grad_sq = 4.0 * math.pi ** 2 * spectral_moment(f, n, 2.0)
    hardy = ((n - 2.0) ** 2 / 4.0) * weighted_moment(f, n, 2.0)
    s = (n - 2.0) / 2.0
    if f.kind == "gaussian":
        a, c = f.p("a"), f.p("c")

        def hprime(r):
            return a * (s * r ** (s - 1.0)
                        - 2.0 * math.pi * c * r ** (s + 1.0)) \
                * math.exp(-math.pi * c * r * r)
    else:
        h = power_weighted(f, s)
        hprime = h.derivative
    lo, hi = f.log_window()
    rem_q = integrate_adaptive(lambda r: hprime(r) ** 2 * r,
                               (0.0, math.exp(hi)),
                               [Singularity(0.0, min(2.0 * s - 1.0, -1e-9))],
                               tol=1e-11)
    _require_converged(rem_q)
    lhs = grad_sq
    rhs = hardy + sphere_area(n) * rem_q.value
    const_residual = cval("pitt_C", n=n, alpha=2.0) / (4.0 * math.pi ** 2) \
        * (n - 2.0) ** 2 / 4.0 - 1.0
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=rem_q.evals,
                notes={"constant_identity_residual": const_residual})


def _check_sw_error_thm2(p, tol):
    n, alpha, beta = int(p["n"]), float(p["alpha"]), float(p["beta"])
    f = _profile(p["profile"], n)
    C = cval("pitt_C", n=n, alpha=alpha)
    D = cval("as_D", n=n, alpha=beta)
    d_a = cval("fourier_power_d", n=n, alpha=alpha)
    d_b = cval("fourier_power_d", n=n, alpha=beta)
    h_a = _sampled_convolution(f, n, n - alpha / 2.0)
    h_b = h_a if alpha == beta else _sampled_convolution(f, n, n - beta / 2.0)
    lhs = weighted_moment(f, n, 0.0)
    sw_term = (d_a / C) * weighted_moment(h_a, n, alpha)
    spec = BesovSpec(n=n, p=2.0, beta=beta, lam=(n - beta) / 2.0)
    g = power_weighted(h_b, (n - beta) / 2.0)
    rem = besov_quadratic_weighted(g, spec)
    rem_plain = besov_quadratic_weighted(h_b, spec)
    _require_converged(rem, rem_plain)
    rhs = sw_term + (d_b / D) * rem.value
    rhs_plain = sw_term + (d_b / D) * rem_plain.value
    notes = {
        "stein_weiss_term": sw_term,
        "besov_remainder_term": (d_b / D) * rem.value,
        "plain_difference_rhs": rhs_plain,
        "plain_difference_margin": _rel(lhs, rhs_plain),
        "convention_note":
            "the remainder uses the difference of g = |x|^{(n-b)/2} h "
            "(as in the representation it is derived from); with the "
            "difference of h itself, as displayed, the relation fails at a "
            "gaussian while the g-form is an exact equality at a = b; both "
            "margins are reported",
    }
    if alpha == beta:
        notes["degenerate"] = "a = b: the g-form inequality is an equality"
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=rem.evals,
                notes=notes)


def _check_monotonicity_cor(p, tol):
    n = int(p["n"])
    grid = [float(a) for a in p["grid"]]
    f = _profile(p["profile"], n)
    Sn = sphere_area(n)
    values, errors = [], []
    evals = 0
    for alpha in grid:
        h = _sampled_convolution(f, n, n - alpha / 2.0)
        coeff = cval("fourier_power_d", n=n, alpha=alpha) \
            / cval("pitt_C", n=n, alpha=alpha)
        res = integrate_adaptive(
            lambda r: r ** (n - 1.0 - alpha) * h.value(r) ** 2,
            (0.0, math.inf),
            [Singularity(0.0, min(n - 1.0 - alpha, -1e-9)),
             Singularity(math.inf, n - 1.0 - alpha - 2.0 * (n - alpha / 2.0))],
            tol=1e-6)
        _require_converged(res)
        values.append(coeff * Sn * res.value)
        errors.append(coeff * Sn * res.abs_err)
        evals += res.evals
    margins = []
    for i in range(len(grid) - 1):
        drop = values[i] - values[i + 1]
        bar = 3.0 * (errors[i] + errors[i + 1])
        margins.append(drop - bar)
    worst = min(margins)
    return dict(lhs=values[0], rhs=values[-1],
                margin=worst / max(abs(values[0]), _TINY), evals=evals,
                passed=all(m > 0.0 for m in margins),
                notes={"grid": grid, "values": values,
                       "error_bars_3x": [3.0 * (errors[i] + errors[i + 1])
                                         for i in range(len(grid) - 1)],
                       "consecutive_drops": [values[i] - values[i + 1]
                                             for i in range(len(grid) - 1)]})


def _check_recast_thm3(p, tol):
    n, alpha, beta = int(p["n"]), float(p["alpha"]), float(p["beta"])
    f = _profile(p["profile"], n)
    C = cval("pitt_C", n=n, alpha=alpha)
    D = cval("as_D", n=n, alpha=beta)
    h = f if alpha == beta else multiplier(f, n, (alpha - beta) / 2.0)
    lhs_q = besov_p(h, n, 2.0, beta / 2.0)
    _require_converged(lhs_q)
    lhs = (C / D) * lhs_q.value
    g = power_weighted(h, (n - beta) / 2.0)
    spec = BesovSpec(n=n, p=2.0, beta=beta, lam=(n - beta) / 2.0)
    rem = besov_quadratic_weighted(g, spec)
    _require_converged(rem)
    rhs = weighted_moment(f, n, alpha) + (C / D) * rem.value
    # independent spectral route: the unweighted double integral of h equals
    # D * int |xi|^beta |h_hat|^2 = D * int |xi|^alpha |f_hat|^2
    lhs_spectral = C * spectral_moment(f, n, alpha)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs),
                evals=lhs_q.evals + rem.evals,
                notes={"lhs_spectral_route": lhs_spectral,
                       "lhs_route_residual": _rel(lhs, lhs_spectral)})


def _check_log_uncertainty(p, tol):
    n = int(p["n"])
    f = _profile(p["profile"], n)
    spatial, spectral, _ = log_moments(f, n)
    l2sq = weighted_moment(f, n, 0.0)
    D = cval("logu_D", n=n)
    lhs = spatial + spectral - D * l2sq
    g = power_weighted(f, n / 2.0)
    spec = BesovSpec(n=n, p=2.0, beta=0.0, lam=n / 2.0)
    rem = besov_quadratic_weighted(g, spec, tol=1e-10)
    _require_converged(rem)
    rhs = 0.25 * math.exp(-(n / 2.0) * LN_PI + log_gamma(n / 2.0)) * rem.value
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=rem.evals,
                notes={"uncertainty_margin": lhs,
                       "uncertainty_note": "log-moment sum exceeds the psi(n/4)"
                                           " - ln(pi) bound by exactly the "
                                           "weighted |x-y|^{-n} functional"})


def _check_cor_thm_weighted_log(p, tol):
    n, beta = int(p["n"]), float(p["beta"])
    f = _profile(p["profile"], n)
    fhat = fourier_radial(f)
    C = cval("pitt_C", n=n, alpha=beta)
    lhs = C * weighted_log_moment(fhat, n, -beta) + weighted_log_moment(f, n, beta)
    K = cval("logu_E", n=n, p=2.0 * n / (n + beta))
    rhs = K * weighted_moment(f, n, beta)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs),
                notes={"bound_constant": K})


def _check_hls_entropy(p, tol):
    n = int(p["n"])
    f = _profile(p["profile"], n)
    l2sq = weighted_moment(f, n, 0.0)
    scale = 1.0 / math.sqrt(l2sq)
    cfg = dict(_profile_dict(p["profile"]))
    cfg["a"] = cfg.get("a", 1.0) * scale
    f = _profile(cfg, n)
    _, spectral, entropy = log_moments(f, n)
    lhs = (n / 2.0) * spectral
    rhs = entropy + cval("hls_B", n=n)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs),
                notes={"normalized_amplitude": cfg["a"],
                       "extremal_family": "a (1+|x|^2)^{-n/2} up to conformal "
                                          "automorphism"})


def _check_log_sobolev(p, tol):
    n = int(p["n"])
    f = _profile(p["profile"], n)
    l2sq = weighted_moment(f, n, 0.0)
    if abs(l2sq - 1.0) > 1e-12:
        raise ParameterError("profile", ["log_sobolev requires ||f||_2 = 1 "
                                         f"(got ||f||_2^2 = {l2sq})"])
    _, _, entropy = log_moments(f, n)
    grad_sq = 4.0 * math.pi ** 2 * spectral_moment(f, n, 2.0)
    lhs = entropy
    rhs = (n / 4.0) * math.log(2.0 / (math.pi * math.e * n) * grad_sq)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(rhs, lhs),
                notes={"gaussian_equality_value": (n / 4.0) * (LN2 - 1.0)})


def _check_besov_entropy(p, tol):
    n = int(p["n"])
    f = _profile(p["profile"], n)
    l2sq = weighted_moment(f, n, 0.0)
    if abs(l2sq - 1.0) > 1e-10:
        raise ParameterError("profile", ["besov_entropy requires ||f||_2 = 1"])
    g = power_weighted(f, n / 2.0)
    spec = BesovSpec(n=n, p=2.0, beta=0.0, lam=n / 2.0)
    rem = besov_quadratic_weighted(g, spec, tol=1e-10)
    _require_converged(rem)
    lhs = 0.25 * math.exp(-(n / 2.0) * LN_PI + log_gamma(n / 2.0)) * rem.value
    spatial, _, entropy = log_moments(f, n)
    ln_g_moment = entropy + (n / 2.0) * spatial
    rhs = (2.0 / n) * ln_g_moment + cval("besov_entropy_E", n=n)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=rem.evals)


def _check_thm4_line(p, tol):
    n = int(p["n"])
    Sn = sphere_area(n)
    sech_n = _sech_integral(float(n))
    E = cval("besov_entropy_E", n=n)
    width = 60.0 / n + 5.0

    def both_sides(amp_sq: float, corrected: bool):
        amp = math.sqrt(amp_sq)
        v = lambda x: amp * math.cosh(x) ** (-n / 2.0)
        dbl = _line_difference_energy(v, n, width)
        _require_converged(dbl)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", IntegrationWarning)
            ln_term, _ = quad(lambda x: math.log(v(x)) * v(x) ** 2,
                              -width, width, epsabs=1e-14, epsrel=1e-10,
                              limit=250)
        if corrected:
            lhs = (Sn / 2.0) * dbl.value
            rhs = (2.0 / n) * Sn * ln_term + E
        else:
            lhs = 0.25 * math.exp(-(n / 2.0) * LN_PI + log_gamma(n / 2.0)) \
                * dbl.value
            rhs = (2.0 / n) * ln_term + E
        return lhs, rhs, dbl.evals

    # convention A ("corrected"): surface-measure normalization with
    # S_n int v^2 = 1; exact equality at the (cosh x)^{-n/2} extremal
    lhs_c, rhs_c, evals = both_sides(1.0 / (Sn * sech_n), True)
    # convention B (as printed): plain ||v||_2 = 1 with the
    # (1/4) pi^{-n/2} Gamma(n/2) prefactor
    lhs_p, rhs_p, _ = both_sides(1.0 / sech_n, False)
    return dict(lhs=lhs_c, rhs=rhs_c, margin=_rel(lhs_c, rhs_c), evals=evals,
                notes={"printed_convention_lhs": lhs_p,
                       "printed_convention_rhs": rhs_p,
                       "printed_convention_margin": _rel(lhs_p, rhs_p),
                       "convention_note":
                           "the displayed normalization fails at its own "
                           "extremal; with surface-measure bookkeeping "
                           "(S_n/2 prefactor, S_n int v^2 = 1, S_n weight on "
                           "the entropy term) the relation is an exact "
                           "equality at v = A cosh^{-n/2}; both margins are "
                           "reported"})


def _check_thm6_embedding(p, tol):
    n, alpha = int(p["n"]), float(p["alpha"])
    f = _profile(p["profile"], n)
    p_dual = 2.0 * n / (n - alpha)
    wm = weighted_moment(f, n, alpha)
    g = power_weighted(f, (n - alpha) / 2.0)
    spec = BesovSpec(n=n, p=2.0, beta=alpha, lam=(n - alpha) / 2.0)
    rem_q = besov_quadratic_weighted(g, spec)
    _require_converged(rem_q)
    rem = cval("gsr_D", n=n, alpha=alpha) * rem_q.value
    fp2 = lp_norm(f, n, p_dual) ** 2
    C = cval("pitt_C", n=n, alpha=alpha)
    base = C * math.exp(log_gamma((n + alpha) / 2.0)
                        - log_gamma((n - alpha) / 2.0)
                        + (alpha / n) * (log_gamma(n / 2.0) - log_gamma(float(n))))
    K_derived = base * math.pi ** (-alpha / 2.0)
    lhs = wm + rem
    rhs = K_derived * fp2
    Sn = sphere_area(n)
    lhs_printed = wm + Sn * rem
    rhs_printed = base * fp2
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=rem_q.evals,
                notes={"printed_convention_lhs": lhs_printed,
                       "printed_convention_rhs": rhs_printed,
                       "printed_convention_margin": _rel(lhs_printed,
                                                         rhs_printed),
                       "spectral_route_lhs": C * spectral_moment(f, n, alpha),
                       "convention_note":
                           "the displayed constant exceeds the value derived "
                           "from the sharp fractional embedding by pi^{alpha/2}"
                           " while its remainder carries an extra surface-area"
                           " factor; both margins are reported and the pass "
                           "decision uses the derived convention"})


def _check_bbm_thm7(p, tol):
    n, beta = int(p["n"]), float(p["beta"])
    f = _profile(p["profile"], n)
    q = 2.0 * n / (n - 2.0 * beta)
    bq = besov_p(f, n, 2.0, beta)
    _require_converged(bq)
    lhs = cval("bbm_C", n=n, beta=beta) * bq.value
    rhs = lp_norm(f, n, q) ** 2
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=bq.evals,
                notes={"embedding_exponent": q})


def _check_fs_thm8(p, tol):
    n, pp, beta = int(p["n"]), float(p["p"]), float(p["beta"])
    f = _profile(p["profile"], n)
    bq = besov_p(f, n, pp, beta)
    Dq = sharp_constant_integral("euclidean_D", {"n": n, "p": pp, "beta": beta})
    _require_converged(bq, Dq)
    lhs = bq.value
    rhs = Dq.value * weighted_p_moment(f, n, pp * beta, pp)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs),
                evals=bq.evals + Dq.evals,
                notes={"sharp_constant": Dq.value})


def _check_halfspace_thm10_1d(p, tol):
    pp, beta = float(p["p"]), float(p["beta"])
    f = _profile(p["profile"], 1)
    R = math.exp(f.log_window()[1])
    fv = f.value

    def F(u, v):
        return abs(fv(u) - fv(v)) ** pp * abs(u - v) ** (-1.0 - pp * beta)

    dbl = double_integral_diagonal(F, pp - 1.0 - pp * beta, tol=1e-9,
                                   domain=(0.0, R))
    E = halfspace_line_integral(pp, beta)
    _require_converged(dbl, E)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        wmom, _ = quad(lambda y: fv(y) ** pp * y ** (-pp * beta), 0.0, R,
                       epsabs=1e-13, epsrel=1e-10, limit=250)
    lhs = dbl.value
    rhs = E.value * wmom
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs),
                evals=dbl.evals + E.evals,
                notes={"halfline_constant": E.value})


def _check_nagy_thm5(p, tol):
    s = float(p["s"])
    B = cval("nagy_B", s=s)
    int_q = _sech_integral(2.0 * s + 2.0)       # int |g|^{2+2/s}, g = sech^s
    int_2 = _sech_integral(2.0 * s)             # int |g|^2
    grad = s * s * (int_2 - int_q)              # int |g'|^2
    lhs = B * grad * int_2 ** (2.0 * s + 1.0)
    rhs = int_q ** (2.0 * s)
    notes = {"extremal": "g = cosh^{-s}"}
    if s == 0.5:
        notes["constant_residual_vs_4_over_pi_sq"] = \
            B - 4.0 / math.pi ** 2
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), notes=notes)


def _check_hprime_sobolev(p, tol):
    s = float(p["s"])
    A = cval("hprime_A", s=s)
    int_q = _sech_integral(2.0 * s + 2.0)
    int_2 = _sech_integral(2.0 * s)
    grad = s * s * (int_2 - int_q)
    lhs = s * s * int_2 + grad
    rhs = A * int_q ** (s / (s + 1.0))
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs),
                notes={"extremal": "g = cosh^{-s} attains equality"})


def _check_euler_lagrange(p, tol):
    s = float(p["s"])
    xs = np.linspace(-10.0, 10.0, 2001)
    sech = 1.0 / np.cosh(xs)
    tanh = np.tanh(xs)
    g = sech ** s
    # analytic second derivative of cosh^{-s}
    gpp = s * s * g * tanh ** 2 - s * g * sech ** 2
    resid = -gpp + s * s * g - s * (s + 1.0) * g ** (1.0 + 2.0 / s)
    max_analytic = float(np.max(np.abs(resid)))
    h = 1e-4
    gp2 = (np.cosh(xs + h) ** (-s) - 2.0 * g + np.cosh(xs - h) ** (-s)) / h ** 2
    resid_fd = -gp2 + s * s * g - s * (s + 1.0) * g ** (1.0 + 2.0 / s)
    max_fd = float(np.max(np.abs(resid_fd)))
    return dict(lhs=max_analytic, rhs=0.0, margin=max_analytic,
                passed=max_analytic <= tol and max_fd <= 1e-5,
                notes={"fd_max_residual": max_fd, "fd_step": h,
                       "fd_bound": 1e-5, "nonlinearity_coefficient": s * (s + 1.0)})


def _check_bessel_pair(p, tol):
    # (a) n=1, alpha=2: G_2 = (1/2) e^{-r}
    rs = np.linspace(0.01, 20.0, 200)
    res_a = max(abs(bessel_potential(1, 2.0, float(r), check=False)
                    - 0.5 * math.exp(-float(r))) for r in rs)
    # (b) n=3, alpha in {1, 2}: closed K-form vs heat-subordination route
    from .profiles import _bessel_potential_subordination
    res_b = 0.0
    for alpha in (1.0, 2.0):
        for r in (0.05, 0.5, 2.0, 10.0):
            c = bessel_potential(3, alpha, r, check=False)
            s = _bessel_potential_subordination(3, alpha, r)
            res_b = max(res_b, abs(c - s) / abs(c))
    # (c) n=3: Hankel transform of G_2 matches (1 + 4 pi^2 xi^2)^{-1}
    res_c = 0.0
    for xi in (0.05, 0.3, 1.0, 3.0):
        ft = hankel_point(lambda r: bessel_potential(3, 2.0, r, check=False),
                          3, xi, 60.0)
        target = 1.0 / (1.0 + 4.0 * math.pi ** 2 * xi * xi)
        res_c = max(res_c, abs(ft - target) / target)
    ratios = (res_a / 1e-10, res_b / 1e-8, res_c / 1e-7)
    worst = max(ratios)
    return dict(lhs=worst, rhs=1.0, margin=worst - 1.0, passed=worst <= 1.0,
                notes={"exp_kernel_abs_err_1d": res_a,
                       "subordination_rel_err_3d": res_b,
                       "fourier_pair_rel_err_3d": res_c,
                       "bounds": [1e-10, 1e-8, 1e-7]})


def _check_int1_gradient_limit(p, tol):
    n = int(p["n"])
    # coefficient of int |grad f|^2 in the second-difference energy is
    # stein_E(n, alpha) / (4 pi^2); extrapolate alpha -> 2^-
    hs = [10.0 ** (-k) for k in range(2, 7)]
    vals = [cval("stein_E", n=n, alpha=2.0 - h) / (4.0 * math.pi ** 2)
            for h in hs]
    # Richardson with step ratio 10 on a smooth (analytic) limit
    seq = list(vals)
    for level in range(1, len(seq)):
        seq = [(10.0 ** level * seq[i + 1] - seq[i]) / (10.0 ** level - 1.0)
               for i in range(len(seq) - 1)]
    derived = seq[0]
    closed = cval("stein_E", n=n, alpha=2.0) / (4.0 * math.pi ** 2)
    printed = (LN2 / n) * 2.0 * math.exp((n / 2.0) * LN_PI - log_gamma(n / 2.0))
    margin = _rel(derived, printed)
    return dict(lhs=derived, rhs=printed, margin=margin,
                passed=abs(margin) <= tol,
                notes={"extrapolation_vs_closed_form": _rel(derived, closed),
                       "ratio_to_printed": derived / printed,
                       "derived_coefficient":
                           "(ln 2 / n) * 8 pi^{n/2} / Gamma(n/2)",
                       "discrepancy_note":
                           "the extrapolated limit and its removable-"
                           "singularity closed form agree to machine "
                           "precision but are 4x the displayed gradient "
                           "coefficient (ln 2/n) 2 pi^{n/2}/Gamma(n/2); the "
                           "failure is recorded as an honest discrepancy, "
                           "not a numerical artifact"})


def _check_int2_hardy_rellich(p, tol):
    n, alpha = int(p["n"]), float(p["alpha"])
    if not (0.0 < alpha < min(4.0, float(n))):
        raise ParameterError("alpha", ["requires 0 < alpha < min(4, n)"])
    f = _profile(p["profile"], n)
    energy = second_difference_energy(f, n, alpha, route="direct")
    _require_converged(energy)
    lhs = energy.value
    coeff = cval("stein_E", n=n, alpha=alpha) / cval("pitt_C", n=n, alpha=alpha)
    rhs = coeff * weighted_moment(f, n, alpha)
    spectral = second_difference_energy(f, n, alpha, route="spectral").value
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs), evals=energy.evals,
                notes={"spectral_route_lhs": spectral,
                       "route_residual": _rel(lhs, spectral)})


def _check_lemma34_quadrature(p, tol):
    n, alpha, lam = int(p["n"]), float(p["alpha"]), float(p["lam"])
    e = (n + alpha) / 2.0
    ker = AngularKernel(n, e, "standard")

    def F(r: float) -> float:
        if r <= 0.0:
            return 0.0
        return 2.0 * (1.0 - r ** (-lam)) * r ** (n - 1.0 - e) \
            * angular_average(ker, r)

    # pair r = 1 +- u so the two principal-value-like halves cancel their
    # individually divergent r -> 1 contributions
    paired = lambda u: F(1.0 + u) + F(1.0 - u)
    sings = [Singularity(0.0, min(1.0 - alpha, -1e-9)),
             Singularity(1.0, min(n - 1.0 - lam, -1e-9))]
    part1 = integrate_adaptive(paired, (0.0, 1.0), sings, tol=1e-9)
    part2 = integrate_adaptive(F, (2.0, math.inf),
                               [Singularity(math.inf, -1.0 - alpha)], tol=1e-8)
    _require_converged(part1, part2)
    lhs = part1.value + part2.value
    rhs = cval("lambda_weighted", n=n, alpha=alpha, lam=lam)
    return dict(lhs=lhs, rhs=rhs, margin=_rel(lhs, rhs),
                evals=part1.evals + part2.evals)


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

_GAUSS = (("kind", "gaussian"), ("a", 1.0), ("c", 1.0))


def _g(n: int = 3, **extra) -> Tuple[Tuple[str, object], ...]:
    base: Dict[str, object] = {"n": n, "profile": dict(_GAUSS)}
    base.update(extra)
    return tuple(base.items())


_CHECKS: Dict[str, Tuple[CheckSpec, Callable]] = {}


def _register(spec: CheckSpec, impl: Callable) -> None:
    _CHECKS[spec.id] = (spec, impl)


_register(CheckSpec(
    "gsr_identity", "equality",
    "ground-state representation: C int|xi|^a|f^|^2 = int|x|^-a|f|^2 + "
    "(C/D) weighted difference energy of g = |x|^{(n-a)/2} f", 1e-6,
    _g(3, alpha=1.0)), _check_gsr_identity)
_register(CheckSpec(
    "as_identity", "equality",
    "unweighted difference-energy identity: Gagliardo double integral = "
    "D(n,a) int |xi|^a |f^|^2 (Plancherel route)", 1e-6,
    _g(3, alpha=1.0)), _check_as_identity)
_register(CheckSpec(
    "groundstate_thm1", "inequality",
    "spectral energy dominates the weighted Hardy term plus the weighted "
    "difference-energy remainder of the fractional multiplier", 1e-6,
    _g(3, alpha=1.5, beta=1.0)), _check_groundstate_thm1)
_register(CheckSpec(
    "pitt_spectral", "inequality-strict",
    "weighted spectral inequality with sharp constant; the constant is not "
    "attained so the gap must be strictly positive", 1e-12,
    _g(3, alpha=1.0)), _check_pitt_spectral)
_register(CheckSpec(
    "hardy_classical", "equality",
    "gradient identity: int|grad f|^2 = ((n-2)^2/4) int|x|^-2|f|^2 + "
    "surface term of h = r^{(n-2)/2} f; alpha=2 limit of the sharp constants",
    1e-8, _g(3)), _check_hardy_classical)
_register(CheckSpec(
    "sw_error_thm2", "inequality",
    "weighted convolution (Riesz potential) error estimate: ||f||_2^2 "
    "dominates the sharp weighted term plus a difference-energy remainder",
    1e-6, _g(3, alpha=1.5, beta=1.0)), _check_sw_error_thm2)
_register(CheckSpec(
    "monotonicity_cor", "monotonicity",
    "normalized weighted Riesz-potential energy is strictly decreasing in "
    "the order parameter", 0.0,
    _g(3, grid=(0.4, 0.8, 1.2, 1.6))), _check_monotonicity_cor)
_register(CheckSpec(
    "recast_thm3", "inequality",
    "difference-energy recast of the ground-state inequality for "
    "h = fractional multiplier of f", 1e-6,
    _g(3, alpha=1.5, beta=1.0)), _check_recast_thm3)
_register(CheckSpec(
    "log_uncertainty", "equality",
    "logarithmic uncertainty: log-moment sum minus (psi(n/4) - ln pi) mass "
    "equals the weighted |x-y|^{-n} difference functional of g = r^{n/2} f",
    1e-4, _g(4)), _check_log_uncertainty)
_register(CheckSpec(
    "cor_thm_weighted_log", "inequality",
    "weighted logarithmic uncertainty with digamma bound constant", 1e-6,
    _g(3, beta=1.0)), _check_cor_thm_weighted_log)
_register(CheckSpec(
    "hls_entropy", "inequality",
    "spectral log-moment dominates entropy plus the sharp constant; equality "
    "at normalized (1+|x|^2)^{-n/2}", 1e-5,
    (("n", 3), ("profile", {"kind": "inverse_power", "a": 1.0, "s": 1.5}))),
    _check_hls_entropy)
_register(CheckSpec(
    "log_sobolev", "equality",
    "logarithmic Sobolev inequality; equality at the normalized gaussian",
    1e-8, (("n", 3), ("profile", {"kind": "gaussian", "a": 2.0 ** 0.75,
                                  "c": 1.0}))), _check_log_sobolev)
_register(CheckSpec(
    "besov_entropy", "inequality",
    "weighted |x-y|^{-n} difference functional dominates entropy of "
    "g = r^{n/2} f plus the digamma constant", 1e-6,
    (("n", 4), ("profile", {"kind": "gaussian", "a": 2.0, "c": 1.0}))),
    _check_besov_entropy)
_register(CheckSpec(
    "thm4_line", "inequality",
    "hyperbolic-kernel entropy inequality on the line; near-equality at "
    "cosh^{-n/2} under surface-measure normalization (both conventions "
    "reported)", 1e-6, (("n", 2),)), _check_thm4_line)
_register(CheckSpec(
    "thm6_embedding", "inequality",
    "difference-energy embedding into L^{2n/(n-a)}; derived constant "
    "convention (both conventions reported)", 1e-6,
    _g(3, alpha=1.0)), _check_thm6_embedding)
_register(CheckSpec(
    "bbm_thm7", "inequality",
    "quadratic difference-energy Sobolev embedding with the "
    "beta(1-beta)-normalized sharp constant", 1e-6,
    _g(3, beta=0.5)), _check_bbm_thm7)
_register(CheckSpec(
    "fs_thm8", "inequality",
    "fractional Hardy inequality with the sharp difference-quotient constant "
    "D(n,p,beta)", 1e-6,
    (("n", 1), ("p", 2.0), ("beta", 0.3), ("profile", dict(_GAUSS)))),
    _check_fs_thm8)
_register(CheckSpec(
    "halfspace_thm10_1d", "inequality",
    "half-line Gagliardo seminorm dominates the weighted mass with the sharp "
    "half-space constant at n = 1", 1e-6,
    (("p", 2.0), ("beta", 0.25), ("profile", dict(_GAUSS)))),
    _check_halfspace_thm10_1d)
_register(CheckSpec(
    "nagy_thm5", "equality",
    "sharp Gagliardo-Nirenberg inequality on the line; equality at cosh^{-s}",
    1e-8, (("s", 0.5),)), _check_nagy_thm5)
_register(CheckSpec(
    "hprime_sobolev", "inequality",
    "H' Sobolev inequality on the line; equality at cosh^{-s}", 1e-6,
    (("s", 1.0),)), _check_hprime_sobolev)
_register(CheckSpec(
    "euler_lagrange", "residual",
    "variational residual -g'' + s^2 g - s(s+1) g^{1+2/s} vanishes at "
    "g = cosh^{-s}", 1e-8, (("s", 1.0),)), _check_euler_lagrange)
_register(CheckSpec(
    "bessel_pair", "residual",
    "Bessel potential: exponential kernel at n=1, subordination vs closed "
    "form at n=3, and the Fourier pair (1+4pi^2 xi^2)^{-1}", 1.0,
    ()), _check_bessel_pair)
_register(CheckSpec(
    "int1_gradient_limit", "equality",
    "alpha -> 2 limit of the second-difference constant vs the displayed "
    "gradient-form coefficient", 1e-8, (("n", 1),)),
    _check_int1_gradient_limit)
_register(CheckSpec(
    "int2_hardy_rellich", "inequality",
    "second-difference energy dominates the weighted mass with constant "
    "E/C", 1e-6, (("n", 1), ("alpha", 0.5), ("profile", dict(_GAUSS)))),
    _check_int2_hardy_rellich)
_register(CheckSpec(
    "lemma34_quadrature", "equality",
    "defining integral of the weighted-difference constant agrees with its "
    "Gamma closed form", 1e-6, (("n", 3), ("alpha", 0.8), ("lam", 1.1))),
    _check_lemma34_quadrature)


def check_ids() -> List[str]:
    return sorted(_CHECKS)


def check_spec(check_id: str) -> CheckSpec:
    try:
        return _CHECKS[check_id][0]
    except KeyError:
        raise RegistryError(f"unknown check id {check_id!r}") from None


def run_check(check_id: str, params: Optional[Dict[str, object]] = None,
              tol: Optional[float] = None,
              seed: Optional[int] = None) -> CheckReport:
    """Run one registry check and return its report.

    ``params`` overrides the registry defaults key-by-key; unknown keys are
    rejected.  A quadrature that fails to converge yields a failing report
    with ``notes['status'] = 'numerical'`` rather than an exception.
    """
    spec, impl = _CHECKS.get(check_id, (None, None))
    if spec is None:
        raise RegistryError(f"unknown check id {check_id!r}")
    merged = spec.default_params()
    if params:
        unknown = [k for k in params if merged and k not in merged]
        if unknown:
            raise ParameterError(
                "params", [f"unknown parameter {k!r} for check {check_id}"
                           for k in unknown])
        merged.update(params)
    use_tol = spec.tol if tol is None else float(tol)
    report_params = {k: (_profile_dict(v) if k == "profile" else v)
                     for k, v in merged.items()}
    try:
        out = impl(merged, use_tol)
    except (FracsharpError, ArithmeticError) as exc:
        if isinstance(exc, (ParameterError, DomainError, RegistryError)):
            raise
        return CheckReport(check_id, report_params, math.nan, math.nan,
                           math.nan, use_tol, False, seed=seed,
                           notes={"status": "numerical", "error": str(exc)})
    lhs, rhs, margin = out["lhs"], out["rhs"], out["margin"]
    if "passed" in out:
        passed = bool(out["passed"])
    elif spec.kind == "equality":
        passed = abs(margin) <= use_tol
    elif spec.kind == "inequality":
        passed = margin >= -use_tol
    elif spec.kind == "inequality-strict":
        passed = margin > 0.0
    elif spec.kind == "residual":
        passed = lhs <= use_tol
    else:  # monotonicity rows decide themselves
        passed = margin > 0.0
    return CheckReport(check_id, report_params, float(lhs), float(rhs),
                       float(margin), use_tol, passed,
                       evals=int(out.get("evals", 0)), seed=seed,
                       notes=dict(out.get("notes", {})))


def run_suite(ids: Optional[Sequence[str]] = None,
              seed: Optional[int] = None) -> List[CheckReport]:
    """Run a list of checks (default: the whole registry, sorted by id)."""
    return [run_check(cid, seed=seed) for cid in (ids or check_ids())]


# --------------------------------------------------------------------------
# sharpness probes
# --------------------------------------------------------------------------


def _truncated_power_profile(lam: float, L: float, n: int) -> RadialProfile:
    """r^{-lam} on [e^{-L}, e^{L}] with continuous power shoulders.

    Inside the cutoff the profile rises like r^{1-lam}; outside it decays
    like r^{-lam-1}; both shoulders match continuously, mimicking the
    concentrating family used in the optimality argument.
    """
    r_lo, r_hi = math.exp(-L), math.exp(L)

    def fn(r: float) -> float:
        if r <= 0.0:
            return 0.0
        if r < r_lo:
            return r_lo ** (-lam) * (r / r_lo)
        if r > r_hi:
            return r_hi ** (-lam) * (r_hi / r) ** (lam + 1.0)
        return r ** (-lam)

    return RadialProfile.analytic(fn, n, (-L - 25.0, L + 5.0),
                                  tail_exponent=-lam - 1.0,
                                  label=f"truncated r^-{lam}, L={L}")


def sharpness_probe(check_id: str, family: str,
                    schedule: Sequence[float]) -> List[Dict[str, object]]:
    """Evaluate an extremizing family along a schedule.

    Returns one entry per schedule element with the achieved ratio
    (attained value / sharp bound); ratios must stay <= 1 and, for
    concentrating families, approach 1.
    """
    out: List[Dict[str, object]] = []
    if check_id == "fs_thm8" and family == "power_truncation":
        spec = check_spec("fs_thm8").default_params()
        n, pp, beta = int(spec["n"]), float(spec["p"]), float(spec["beta"])
        lam = (n - pp * beta) / pp
        D = sharp_constant_integral("euclidean_D",
                                    {"n": n, "p": pp, "beta": beta}).value
        for L in schedule:
            f = _truncated_power_profile(lam, float(L), n)
            num = D * weighted_p_moment(f, n, pp * beta, pp)
            den = besov_p(f, n, pp, beta).value
            out.append({"config": {"family": family, "L": float(L), "n": n,
                                   "p": pp, "beta": beta, "lam": lam},
                        "ratio": num / den})
        return out
    if check_id == "pitt_spectral" and family in ("dilated_inverse_power",
                                                  "concentrating_gaussian"):
        n, alpha = 3, 1.0
        C = cval("pitt_C", n=n, alpha=alpha)
        for t in schedule:
            if family == "dilated_inverse_power":
                f = RadialProfile.inverse_power(1.0, 2.0, n).dilate(float(t))
                cfg = {"family": family, "dilation": float(t)}
            else:
                f = RadialProfile.gaussian(1.0, float(t), n)
                cfg = {"family": family, "c": float(t)}
            ratio = weighted_moment(f, n, alpha) \
                / (C * spectral_moment(f, n, alpha))
            out.append({"config": {**cfg, "n": n, "alpha": alpha},
                        "ratio": ratio})
        return out
    raise ParameterError("family",
                         [f"unsupported probe {family!r} for check {check_id!r}"])


# --------------------------------------------------------------------------
# discrete brute-force test
# --------------------------------------------------------------------------


def discrete_nsw_test(m: Optional[int], p: float, trials: int,
                      seed: int) -> CheckReport:
    """Brute-force the nonlinear weighted difference inequality on Z_m.

    For complex f, g on the cyclic group of order m,
    sum_{x,y} |g[(y-x) mod m] f[x] - g[(x-y) mod m] f[y]|^p
      >= sum_y | |g[y]| - |g[-y mod m]| |^p  *  sum_x |f[x]|^p.
    ``m = None`` draws a fresh group size in [1, 64] per trial;
    ``p = 0`` (sentinel) draws p from {1, 1.5, 2, 3} per trial.
    """
    if trials < 1:
        raise ParameterError("trials", ["trials must be >= 1"])
    rng = np.random.default_rng(seed)
    worst = math.inf
    worst_cfg: Dict[str, object] = {}
    p_grid = (1.0, 1.5, 2.0, 3.0)
    for _ in range(trials):
        mm = int(rng.integers(1, 65)) if m is None else int(m)
        pp = float(p) if p else float(p_grid[rng.integers(0, len(p_grid))])
        f = rng.standard_normal(mm) + 1j * rng.standard_normal(mm)
        g = rng.standard_normal(mm) + 1j * rng.standard_normal(mm)
        idx = np.arange(mm)
        diff = (idx[None, :] - idx[:, None]) % mm  # (y - x) with rows x
        lhs_mat = g[diff] * f[:, None] - g[(-diff) % mm] * f[None, :]
        lhs = float(np.sum(np.abs(lhs_mat) ** pp))
        gsym = np.abs(np.abs(g) - np.abs(g[(-idx) % mm]))
        rhs = float(np.sum(gsym ** pp) * np.sum(np.abs(f) ** pp))
        scale = max(lhs, rhs, 1.0)
        margin = (lhs - rhs) / scale
        if margin < worst:
            worst = margin
            worst_cfg = {"m": mm, "p": pp, "lhs": lhs, "rhs": rhs}
    passed = worst >= -1e-12
    return CheckReport("discrete_nsw", {"m": m, "p": p, "trials": trials},
                       worst_cfg.get("lhs", 0.0), worst_cfg.get("rhs", 0.0),
                       float(worst), 1e-12, passed, seed=seed,
                       notes={"worst_trial": worst_cfg, "trials": trials})
