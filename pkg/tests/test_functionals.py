"""Difference functionals: identities, route consistency, Monte Carlo."""

import math

import pytest

from fracsharp import (BesovSpec, RadialProfile, besov_p,
                       besov_quadratic_weighted, cval, euclidean_profile_mc,
                       mc_double, second_difference_energy, spectral_moment)
from fracsharp.errors import ParameterError
from fracsharp.functionals import gsr_remainder_integrand
from fracsharp.profiles import power_weighted
from fracsharp.quadrature import sharp_constant_integral


def test_besov_spec_validation():
    with pytest.raises(ParameterError):
        BesovSpec(n=3, p=1.5, beta=0.5, lam=1.0)  # weighted requires p=2
    with pytest.raises(ParameterError):
        BesovSpec(n=3, p=2.0, beta=0.5, lam=0.7)  # lam must be (n-beta)/2
    with pytest.raises(ParameterError):
        BesovSpec(n=3, p=2.0, beta=0.0)  # beta=0 only with lam=n/2
    BesovSpec(n=3, p=2.0, beta=0.5, lam=1.25)
    BesovSpec(n=3, p=2.0, beta=0.0, lam=1.5)


@pytest.mark.parametrize("n,beta", [(1, 0.3), (2, 0.4), (3, 0.6)])
def test_besov_p2_spectral_identity(n, beta):
    # iint |f(x)-f(y)|^2 |x-y|^{-n-2 beta} = D(n, 2 beta) int |xi|^{2 beta}|f^|^2
    f = RadialProfile.gaussian(1.0, 1.0, n=n)
    lhs = besov_p(f, n, 2.0, beta)
    assert lhs.converged
    rhs = cval("as_D", n=n, alpha=2.0 * beta) * spectral_moment(f, n,
                                                                2.0 * beta)
    assert lhs.value == pytest.approx(rhs, rel=1e-7)


def test_second_difference_route_consistency():
    # the direct 2-D quadrature route exists for n = 1 only
    f = RadialProfile.gaussian(1.0, 1.0, n=1)
    direct = second_difference_energy(f, 1, 1.0, route="direct")
    spectral = second_difference_energy(f, 1, 1.0, route="spectral")
    assert direct.converged and spectral.converged
    assert direct.value == pytest.approx(spectral.value, rel=1e-7)
    # spectral route closed form: E(n, alpha) int |xi|^alpha |f^|^2
    want = cval("stein_E", n=1, alpha=1.0) * spectral_moment(f, 1, 1.0)
    assert spectral.value == pytest.approx(want, rel=1e-9)


def test_mc_double_agrees_with_quadrature():
    # weighted quadratic remainder of the gaussian: MC within 5 sigma of
    # the deterministic log-radial quadrature
    n, beta = 2, 0.5
    f = RadialProfile.gaussian(1.0, 1.0, n=n)
    spec = BesovSpec(n=n, p=2.0, beta=beta, lam=(n - beta) / 2.0)
    g = power_weighted(f, spec.lam)
    det = besov_quadratic_weighted(g, spec)
    assert det.converged
    mc = mc_double(gsr_remainder_integrand(f, n, beta), n, 40_000, seed=42)
    assert abs(mc.value - det.value) <= 5.0 * mc.abs_err
    assert mc.abs_err < 0.2 * abs(det.value)


def test_mc_error_scaling():
    n, p, beta = 2, 2.0, 0.3
    small = euclidean_profile_mc(n, p, beta, 2_000, seed=5)
    large = euclidean_profile_mc(n, p, beta, 32_000, seed=5)
    # reported standard error shrinks roughly like 1/sqrt(samples)
    assert large.abs_err < 0.5 * small.abs_err
    assert abs(small.value - large.value) <= 4.0 * (small.abs_err
                                                    + large.abs_err)


def test_euclidean_mc_matches_reduction():
    n, p, beta = 2, 2.0, 0.3
    det = sharp_constant_integral("euclidean_D", {"n": n, "p": p,
                                                  "beta": beta})
    mc = euclidean_profile_mc(n, p, beta, 60_000, seed=11)
    assert abs(mc.value - det.value) <= 4.0 * mc.abs_err


def test_besov_scaling_covariance():
    # unweighted functional scales as lam^{p beta - n} under dilation
    n, p, beta, lam = 2, 2.0, 0.4, 1.6
    f = RadialProfile.gaussian(1.0, 1.0, n=n)
    base = besov_p(f, n, p, beta)
    scaled = besov_p(f.dilate(lam), n, p, beta)
    assert scaled.value == pytest.approx(lam ** (p * beta - n) * base.value,
                                         rel=1e-6)
