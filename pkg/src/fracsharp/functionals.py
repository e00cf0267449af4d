"""Besov-type difference functionals, second-difference energies, and
Monte Carlo cross-checks.

All double integrals are reduced to logarithmic radial coordinates
(u = ln r), which turns dilations into translations and makes the diagonal
singularity translation-invariant: with the angular kernel
psi_e(t) = average of (t + 1/t - 2 xi_1)^{-e} over the sphere,

  iint |g(x)-g(y)|^2 |x-y|^{-n-beta} (|x||y|)^{-(n-beta)/2} dx dy
      = S_n * 2 int_0^inf psi_e(e^w) Q(w) dw,     e = (n+beta)/2,
  Q(w) = int (G(u) - G(u-w))^2 du,                G(u) = g(e^u),

and the unweighted p-power analogue carries the radial weight
e^{lam''(2u - w)} with lam'' = (n - p beta)/2 inside the inner integral.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import DomainError, ParameterError
from .profiles import RadialProfile, fourier_radial, spectral_moment, weighted_p_moment
from .quadrature import AngularKernel, QuadResult, Singularity, angular_average, \
    integrate_adaptive
from .special import sphere_area


@dataclass(frozen=True)
class BesovSpec:
    """Parameter block for a Besov-type difference functional.

    lam is the two-sided weight exponent (each of |x|, |y| carries
    |.|^{-lam}); lam = 0 is the unweighted case.  The weighted case is
    only admitted in its quadratic form: p = 2 with lam = (n - beta)/2 for
    0 < beta < 2, or the logarithmic-kernel endpoint beta = 0 with
    lam = n/2.
    """

    n: int
    p: float
    beta: float
    lam: float = 0.0

    def __post_init__(self):
        violations = []
        if self.n < 1 or int(self.n) != self.n:
            violations.append("n must be a positive integer")
        if self.p < 1.0:
            violations.append("p >= 1")
        if not (0.0 <= self.beta < 2.0):
            violations.append("0 <= beta < 2")
        if self.lam < 0.0:
            violations.append("lam >= 0")
        if self.lam > 0.0:
            if self.p != 2.0:
                violations.append("weighted case requires p = 2")
            if self.beta == 0.0:
                if abs(self.lam - self.n / 2.0) > 1e-12:
                    violations.append("beta = 0 requires lam = n/2")
            elif abs(self.lam - (self.n - self.beta) / 2.0) > 1e-12:
                violations.append("weighted quadratic case requires lam = (n - beta)/2")
        elif self.beta == 0.0:
            violations.append("beta = 0 admitted only in the weighted (lam = n/2) case")
        if violations:
            raise ParameterError("BesovSpec", violations)

    @property
    def kernel(self) -> AngularKernel:
        e = (self.n + self.beta) / 2.0 if self.lam > 0.0 \
            else (self.n + self.p * self.beta) / 2.0
        return AngularKernel(self.n, e, "standard")


def _log_support(f: RadialProfile, pad: float = 2.0):
    lo, hi = f.log_window()
    return lo - pad, hi + pad


def besov_quadratic_weighted(g: RadialProfile, spec: BesovSpec,
                             tol: float = 1e-9) -> QuadResult:
    """iint |g(x)-g(y)|^2 |x-y|^{-n-beta} |x|^{-lam} |y|^{-lam} dx dy
    for the quadratic weighted spec (lam = (n-beta)/2, or beta=0, lam=n/2)."""
    if spec.p != 2.0 or spec.lam <= 0.0:
        raise DomainError("besov_quadratic_weighted requires the weighted "
                          "quadratic spec (p = 2, lam > 0)")
    n, beta = spec.n, spec.beta
    kernel = spec.kernel
    e = kernel.exponent
    lo, hi = _log_support(g)
    G = lambda u: g.value(math.exp(u))

    def Q(w: float) -> float:
        val, _ = quad(lambda u: (G(u) - G(u - w)) ** 2, lo, hi + w,
                      epsabs=1e-13, epsrel=1e-10, limit=250)
        return val

    def outer(w: float) -> float:
        return angular_average(kernel, math.exp(w)) * Q(w)

    w_hi = 100.0 / e + 10.0
    sings = []
    if 1.0 - beta < 0.0:
        sings.append(Singularity(0.0, 1.0 - beta))
    res = integrate_adaptive(outer, (0.0, w_hi), sings, tol=tol)
    Sn = sphere_area(n)
    return QuadResult(Sn * 2.0 * res.value, Sn * 2.0 * res.abs_err,
                      res.evals, res.converged)


def besov_p(f: RadialProfile, n: int, p: float, beta: float,
            tol: float = 1e-9) -> QuadResult:
    """Unweighted Gagliardo-type double integral
    iint |f(x)-f(y)|^p |x-y|^{-n-p beta} dx dy for radial f, 0 < beta < 1."""
    if p < 1.0:
        raise DomainError("besov_p requires p >= 1")
    if not (0.0 < beta < 1.0):
        raise DomainError("besov_p requires 0 < beta < 1")
    lam2 = (n - p * beta) / 2.0
    e = (n + p * beta) / 2.0
    kernel = AngularKernel(n, e, "standard")
    lo, hi = _log_support(f)
    F = lambda u: f.value(math.exp(u))

    def inner(w: float) -> float:
        val, _ = quad(
            lambda u: math.exp(lam2 * (2.0 * u - w)) * abs(F(u) - F(u - w)) ** p,
            lo, hi + w, epsabs=1e-13, epsrel=1e-10, limit=250,
        )
        return val

    def outer(w: float) -> float:
        return angular_average(kernel, math.exp(w)) * inner(w)

    # integrand decays like e^{-p beta w} at large w
    w_hi = 100.0 / (p * beta) + 10.0
    rho = p - 1.0 - p * beta  # local order of outer(w) at w = 0
    if rho < 0.0:
        res = integrate_adaptive(outer, (0.0, w_hi),
                                 [Singularity(0.0, rho)], tol=tol)
    elif abs(rho - round(rho)) > 1e-12:
        # positive fractional order: w^rho has unbounded derivatives at 0,
        # which stalls Gauss-Kronrod; w = s^2 raises the order to 2 rho + 1
        res = integrate_adaptive(lambda s: outer(s * s) * 2.0 * s,
                                 (0.0, math.sqrt(w_hi)), [], tol=tol)
    else:
        res = integrate_adaptive(outer, (0.0, w_hi), [], tol=tol)
    Sn = sphere_area(n)
    return QuadResult(Sn * 2.0 * res.value, Sn * 2.0 * res.abs_err,
                      res.evals, res.converged)


def second_difference_energy(f: RadialProfile, n: int, alpha: float,
                             route: str = "direct", tol: float = 1e-9) -> QuadResult:
    """iint |f(x+y) + f(x-y) - 2 f(x)|^2 |y|^{-n-alpha} dx dy, 0 < alpha < 4.

    ``direct`` integrates the 2-D integral (n = 1 only; the y = 0
    singularity has order 3 - alpha after the inner x-integration);
    ``spectral`` returns stein_E(n, alpha) * int |xi|^alpha |f_hat|^2.
    """
    if not (0.0 < alpha < 4.0):
        raise DomainError("second_difference_energy requires 0 < alpha < 4")
    if route == "spectral":
        from .constants import cval
        val = cval("stein_E", n=n, alpha=alpha) * spectral_moment(f, n, alpha)
        return QuadResult(val, abs(val) * 1e-10, 0, True)
    if route != "direct":
        raise DomainError(f"unknown route {route!r}")
    if n != 1:
        raise DomainError("the direct 2-D route is implemented for n = 1 only; "
                          "use route='spectral' for n >= 2")
    R = math.exp(f.log_window()[1])  # effective support radius of f

    def T(y: float) -> float:
        # the translates live in |x| <= R + y, bumps centered at 0, +-y
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", IntegrationWarning)
            val, _ = quad(
                lambda x: (f.value(abs(x + y)) + f.value(abs(x - y))
                           - 2.0 * f.value(abs(x))) ** 2,
                -(R + y), R + y, epsabs=0.0, epsrel=1e-10, limit=250,
                points=[-y, 0.0, y],
            )
        return val

    # beyond y_hi the three translates no longer overlap and
    # T(y) = 6 ||f||_2^2 exactly (up to the declared support cutoff)
    y_hi = 2.0 * R
    sings = [Singularity(0.0, 3.0 - alpha)] if alpha > 3.0 else []
    res = integrate_adaptive(lambda y: y ** (-1.0 - alpha) * T(y),
                             (0.0, y_hi), sings, tol=tol)
    l2sq = weighted_p_moment(f, 1, 0.0, 2.0)
    tail = 6.0 * l2sq * y_hi ** (-alpha) / alpha
    return QuadResult(2.0 * (res.value + tail), 2.0 * res.abs_err + tail * 1e-9,
                      res.evals, res.converged)


# --- Monte Carlo cross-checks ---------------------------------------------


def _sample_radial_lognormal(rng, n: int, samples: int, sigma: float = 1.5):
    """Points x in R^n with ln|x| ~ N(0, sigma^2), direction uniform.
    Returns (points, density at each point)."""
    z = rng.standard_normal(samples)
    r = np.exp(sigma * z)
    dirs = rng.standard_normal((samples, n))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    x = dirs * r[:, None]
    Sn = sphere_area(n)
    # density of r is phi(z)/(sigma r); divide by surface measure S_n r^{n-1}
    dens = np.exp(-0.5 * z * z) / (math.sqrt(2.0 * math.pi) * sigma * r) \
        / (Sn * r ** (n - 1))
    return x, dens


def mc_double(fpair: Callable, n: int, samples: int, seed: int) -> QuadResult:
    """Importance-sampled Monte Carlo estimate of iint fpair(x, y) dx dy
    over R^n x R^n.  Radii are drawn log-normally (heavy enough tails for
    the catalog integrands); standard error is reported as abs_err and the
    result is deterministic given the seed."""
    if n > 3:
        raise DomainError("mc_double supports n <= 3")
    if samples < 2:
        raise DomainError("mc_double needs at least 2 samples")
    rng = np.random.default_rng(seed)
    xs, qx = _sample_radial_lognormal(rng, n, samples)
    ys, qy = _sample_radial_lognormal(rng, n, samples)
    w = np.empty(samples)
    for i in range(samples):
        w[i] = fpair(xs[i], ys[i]) / (qx[i] * qy[i])
    mean = float(np.mean(w))
    stderr = float(np.std(w, ddof=1) / math.sqrt(samples))
    return QuadResult(mean, stderr, samples, True)


def euclidean_profile_mc(n: int, p: float, beta: float, samples: int,
                         seed: int) -> QuadResult:
    """Monte Carlo estimate, over R^n, of the sharp-constant profile integral

        int |1 - |x|^{-lam}|^p |x - e|^{-n - p beta} dx,   lam = (n - p beta)/p,

    (e any unit vector), which the (r, u) reduction in the quadrature module
    evaluates as a 1-D integral.  Importance sampling uses an equal-weight
    3-component radial mixture adapted to the singularities at |x| = 0,
    x = e, and the algebraic tail."""
    if not (0.0 < p * beta < min(p, n)):
        raise DomainError("requires 0 < p*beta < min(p, n)")
    lam = (n - p * beta) / p
    pb = p * beta
    a2 = p - pb  # integrable order + 1 at the x = e singularity
    rng = np.random.default_rng(seed)
    Sn = sphere_area(n)
    e1 = np.zeros(n)
    e1[0] = 1.0

    comp = rng.integers(0, 3, samples)
    u = rng.random(samples)
    dirs = rng.standard_normal((samples, n))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)

    x = np.empty((samples, n))
    m0 = comp == 0  # r ~ pb * r^{pb-1} on (0,1)
    m1 = comp == 1  # t = |x - e| ~ a2 * t^{a2-1} on (0,1)
    m2 = comp == 2  # r ~ pb * r^{-pb-1} on (1,inf)
    x[m0] = dirs[m0] * (u[m0] ** (1.0 / pb))[:, None]
    x[m1] = e1 + dirs[m1] * (u[m1] ** (1.0 / a2))[:, None]
    x[m2] = dirs[m2] * (u[m2] ** (-1.0 / pb))[:, None]

    r = np.linalg.norm(x, axis=1)
    t = np.linalg.norm(x - e1, axis=1)
    q = np.zeros(samples)
    inner = r < 1.0
    near = t < 1.0
    outer = r > 1.0
    q[inner] += pb * r[inner] ** (pb - 1.0) / (Sn * r[inner] ** (n - 1))
    q[near] += a2 * t[near] ** (a2 - 1.0) / (Sn * t[near] ** (n - 1))
    q[outer] += pb * r[outer] ** (-pb - 1.0) / (Sn * r[outer] ** (n - 1))
    q /= 3.0

    fx = np.abs(1.0 - r ** (-lam)) ** p * t ** (-n - pb)
    w = fx / q
    mean = float(np.mean(w))
    stderr = float(np.std(w, ddof=1) / math.sqrt(samples))
    return QuadResult(mean, stderr, samples, True)


def gsr_remainder_integrand(f: RadialProfile, n: int, beta: float) -> Callable:
    """Pairwise integrand of the weighted quadratic functional for
    g(x) = |x|^{(n-beta)/2} f(|x|), suitable for mc_double."""
    lam = (n - beta) / 2.0

    def fpair(x: np.ndarray, y: np.ndarray) -> float:
        rx = float(np.linalg.norm(x))
        ry = float(np.linalg.norm(y))
        d = float(np.linalg.norm(x - y))
        if d == 0.0 or rx == 0.0 or ry == 0.0:
            return 0.0
        gx = rx ** lam * f.value(rx)
        gy = ry ** lam * f.value(ry)
        return (gx - gy) ** 2 * d ** (-n - beta) * (rx * ry) ** (-lam)

    return fpair
