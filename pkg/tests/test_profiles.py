"""Radial profiles: transforms, moments, convolutions, serialization."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracsharp import (RadialProfile, bessel_potential, fourier_radial,
                       lp_norm, multiplier, power_convolution, spectral_moment,
                       weighted_moment, weighted_p_moment)
from fracsharp.errors import DivergenceError, DomainError

mpmath.mp.dps = 25

RADII = [0.05, 0.3, 1.0, 2.7, 6.0]


def test_gaussian_self_dual():
    for n in (1, 2, 3, 5):
        f = RadialProfile.gaussian(1.0, 1.0, n=n)
        fhat = fourier_radial(f, n)
        for r in RADII:
            assert fhat.value(r) == pytest.approx(math.exp(-math.pi * r * r),
                                                  rel=1e-12, abs=1e-15)


def test_gaussian_transform_general():
    # F[a e^{-pi c r^2}](rho) = a c^{-n/2} e^{-pi rho^2 / c}
    a, c, n = 1.7, 0.6, 3
    fhat = fourier_radial(RadialProfile.gaussian(a, c, n=n), n)
    for r in RADII:
        want = a * c ** (-n / 2.0) * math.exp(-math.pi * r * r / c)
        assert fhat.value(r) == pytest.approx(want, rel=1e-12)


def test_inverse_power_transform_oracle_n1():
    # 1-D Fourier transform of (1+x^2)^{-1} is pi e^{-2 pi |rho|}
    f = RadialProfile.inverse_power(1.0, 1.0, n=1)
    fhat = fourier_radial(f, 1)
    for r in (0.05, 0.2, 0.5, 1.0):
        want = math.pi * math.exp(-2.0 * math.pi * r)
        assert fhat.value(r) == pytest.approx(want, rel=1e-9)


@given(lam=st.floats(min_value=0.25, max_value=4.0),
       w=st.floats(min_value=-0.5, max_value=2.0))
@settings(max_examples=60, deadline=None)
def test_dilation_covariance_gaussian(lam, w):
    # int |f(lam x)|^2 |x|^{-w} dx = lam^{w-n} int |f|^2 |x|^{-w} dx
    n = 3
    f = RadialProfile.gaussian(1.0, 1.0, n=n)
    lhs = weighted_moment(f.dilate(lam), n, w)
    rhs = lam ** (w - n) * weighted_moment(f, n, w)
    assert lhs == pytest.approx(rhs, rel=1e-10)


@given(lam=st.floats(min_value=0.25, max_value=4.0))
@settings(max_examples=40, deadline=None)
def test_dilation_covariance_inverse_power(lam):
    n, w = 3, 1.2
    f = RadialProfile.inverse_power(1.0, 2.0, n=n)
    lhs = weighted_moment(f.dilate(lam), n, w)
    rhs = lam ** (w - n) * weighted_moment(f, n, w)
    assert lhs == pytest.approx(rhs, rel=1e-10)


def test_dilation_fourier_covariance():
    # F[f(lam .)](rho) = lam^{-n} F[f](rho/lam)
    n, lam = 2, 1.7
    f = RadialProfile.inverse_power(1.0, 1.8, n=n)
    left = fourier_radial(f.dilate(lam), n)
    right = fourier_radial(f, n)
    for r in (0.1, 0.5, 1.5):
        assert left.value(r) == pytest.approx(
            lam ** -n * right.value(r / lam), rel=1e-8)


def test_spectral_moment_gaussian_closed_form():
    # int |xi|^a e^{-2 pi |xi|^2} dxi in R^n
    for n in (1, 2, 3):
        for alpha in (0.5, 1.0, 1.5):
            f = RadialProfile.gaussian(1.0, 1.0, n=n)
            area = float(2.0 * mpmath.pi ** (n / 2.0) / mpmath.gamma(n / 2.0))
            want = float(area * mpmath.gamma((n + alpha) / 2.0)
                         / (2.0 * (2.0 * mpmath.pi) ** ((n + alpha) / 2.0)))
            assert spectral_moment(f, n, alpha) == pytest.approx(want,
                                                                 rel=1e-10)


def test_weighted_p_moment_inverse_power_vs_quadrature():
    from fracsharp import integrate_adaptive
    from fracsharp.quadrature import Singularity
    from fracsharp.special import sphere_area
    n, a, s, c, w, p = 3, 1.3, 2.2, 1.9, 0.7, 2.0
    f = RadialProfile.inverse_power(a, s, n=n, c=c)
    res = integrate_adaptive(
        lambda r: sphere_area(n) * r ** (n - 1 - w)
        * (a * (1.0 + (c * r) ** 2) ** -s) ** p,
        (0.0, math.inf),
        [Singularity(math.inf, n - 1 - w - 2 * s * p)], tol=1e-12)
    assert weighted_p_moment(f, n, w, p) == pytest.approx(res.value,
                                                          rel=1e-10)


def test_lp_norm_gaussian():
    # ||e^{-pi r^2}||_p^p = p^{-n/2}
    for n in (1, 3):
        for p in (1.0, 2.0, 3.5):
            f = RadialProfile.gaussian(1.0, 1.0, n=n)
            assert lp_norm(f, n, p) == pytest.approx(p ** (-n / (2.0 * p)),
                                                     rel=1e-12)


def test_multiplier_plancherel():
    # multiplier applies the symbol |xi|^sigma, so
    # ||m_sigma f||_2^2 = int |xi|^{2 sigma} |f^|^2 = spectral_moment(f, 2 sigma)
    n, sigma = 3, 0.25
    f = RadialProfile.gaussian(1.0, 1.0, n=n)
    g = multiplier(f, n, sigma)
    assert weighted_moment(g, n, 0.0) == pytest.approx(
        spectral_moment(f, n, 2.0 * sigma), rel=1e-8)


def test_newton_potential_oracle():
    # (|x|^{-1} * e^{-pi|y|^2})(r) = erf(sqrt(pi) r)/r in R^3
    f = RadialProfile.gaussian(1.0, 1.0, n=3)
    conv = power_convolution(f, 3, 1.0)
    for r in (0.1, 0.5, 1.0, 2.0, 5.0):
        want = math.erf(math.sqrt(math.pi) * r) / r
        assert conv.value(r) == pytest.approx(want, rel=1e-9)


def test_bessel_potential_n1_exponential():
    for r in (0.05, 0.5, 2.0, 10.0):
        assert bessel_potential(1, 2.0, r) == pytest.approx(
            0.5 * math.exp(-r), rel=1e-11)


def test_serialization_roundtrip():
    cases = [
        RadialProfile.gaussian(1.5, 0.7, n=2),
        RadialProfile.inverse_power(2.0, 1.8, n=3, c=0.4),
        RadialProfile.power_gaussian(1.0, 1.0, 2.0, n=3),
        RadialProfile.sech_power(1.0, 1.5),
    ]
    for f in cases:
        g = RadialProfile.from_json(f.to_json())
        assert g.kind == f.kind
        assert g.to_json() == f.to_json()
        for r in (0.1, 1.0, 4.0):
            assert g.value(r) == pytest.approx(f.value(r), rel=1e-14)


def test_sampled_roundtrip():
    grid = np.geomspace(1e-3, 50.0, 200)
    vals = np.exp(-grid)
    f = RadialProfile.sampled(grid, vals, tail_exponent=None, n=2)
    g = RadialProfile.from_json(f.to_json())
    for r in (0.01, 0.5, 3.0):
        assert g.value(r) == pytest.approx(f.value(r), rel=1e-10)


def test_analytic_not_serializable():
    f = RadialProfile.analytic(lambda r: math.exp(-r), 1, (-30.0, 5.0),
                               tail_exponent=None)
    with pytest.raises(DomainError):
        f.to_json()


def test_divergent_moment_raises():
    f = RadialProfile.inverse_power(1.0, 0.5, n=3)  # f^2 ~ r^-2, not L^2
    with pytest.raises((DivergenceError, DomainError)):
        weighted_moment(f, 3, 0.0)
