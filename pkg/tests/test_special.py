"""Special functions against mpmath oracles and functional-equation properties."""

import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracsharp import bessel_j, bessel_k, digamma, log_gamma, sphere_area
from fracsharp.errors import DomainError

mpmath.mp.dps = 30


GRID = [0.05, 0.3, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 55.5, 170.0, 1000.0]


@pytest.mark.parametrize("x", GRID)
def test_log_gamma_oracle(x):
    assert log_gamma(x) == pytest.approx(float(mpmath.loggamma(x)),
                                         rel=1e-13, abs=1e-13)


@pytest.mark.parametrize("x", GRID)
def test_digamma_oracle(x):
    assert digamma(x) == pytest.approx(float(mpmath.digamma(x)),
                                       rel=1e-12, abs=1e-12)


@given(st.floats(min_value=1e-3, max_value=500.0,
                 allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_log_gamma_recurrence(x):
    # log Gamma(x+1) = log Gamma(x) + log x
    assert log_gamma(x + 1.0) == pytest.approx(log_gamma(x) + math.log(x),
                                               rel=1e-11, abs=1e-10)


@given(st.floats(min_value=1e-3, max_value=200.0,
                 allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_log_gamma_duplication(x):
    # Legendre duplication: lg(2x) = lg(x) + lg(x+1/2) + (2x-1) ln 2 - (ln pi)/2
    lhs = log_gamma(2.0 * x)
    rhs = (log_gamma(x) + log_gamma(x + 0.5)
           + (2.0 * x - 1.0) * math.log(2.0) - 0.5 * math.log(math.pi))
    assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-9)


@given(st.floats(min_value=1e-3, max_value=500.0,
                 allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_digamma_recurrence(x):
    assert digamma(x + 1.0) == pytest.approx(digamma(x) + 1.0 / x,
                                             rel=1e-10, abs=1e-10)


def test_digamma_special_values():
    euler = 0.57721566490153286
    assert digamma(1.0) == pytest.approx(-euler, abs=1e-13)
    assert digamma(0.5) == pytest.approx(-euler - 2.0 * math.log(2.0),
                                         abs=1e-13)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5, 7.0])
@pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 40.0])
def test_bessel_j_oracle(nu, x):
    assert bessel_j(nu, x) == pytest.approx(float(mpmath.besselj(nu, x)),
                                            rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 40.0])
def test_bessel_k_oracle(nu, x):
    assert bessel_k(nu, x) == pytest.approx(float(mpmath.besselk(nu, x)),
                                            rel=1e-10, abs=1e-300)


def test_bessel_k_half_closed_form():
    # K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    for x in (0.2, 1.0, 3.0, 10.0):
        assert bessel_k(0.5, x) == pytest.approx(
            math.sqrt(math.pi / (2.0 * x)) * math.exp(-x), rel=1e-12)


def test_sphere_area_values():
    assert sphere_area(1) == pytest.approx(2.0, rel=1e-15)
    assert sphere_area(2) == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert sphere_area(3) == pytest.approx(4.0 * math.pi, rel=1e-15)
    assert sphere_area(4) == pytest.approx(2.0 * math.pi ** 2, rel=1e-14)


def test_domain_errors():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-1.5)
    with pytest.raises(DomainError):
        digamma(-2.0)
    with pytest.raises(DomainError):
        bessel_k(0.5, 0.0)
