"""Constant registry: spot values, cross-identities, and domain validation."""

import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracsharp import constant_ids, cval, eval_constant, validate_params
from fracsharp.constants import duality_F_second_form
from fracsharp.errors import ParameterError, RegistryError

mpmath.mp.dps = 30


def test_registry_is_complete_and_sorted():
    ids = constant_ids()
    assert ids == sorted(ids)
    expected = {"as_D", "bbm_C", "besov_entropy_E", "duality_F",
                "fourier_power_d", "groundstate_Dab", "gsr_D",
                "halfspace_prefactor", "heisenberg_prefactor", "hls_A",
                "hls_B", "hls_C", "hprime_A", "lambda_weighted", "logu_D",
                "logu_E", "mixed_prefactor", "nagy_B", "pitt_C", "stein_E",
                "steinweiss_E"}
    assert expected <= set(ids)


def test_spot_values():
    assert cval("pitt_C", n=3, alpha=2.0) == pytest.approx(
        16.0 * math.pi ** 2, rel=1e-14)
    assert cval("nagy_B", s=0.5) == pytest.approx(4.0 / math.pi ** 2,
                                                  rel=1e-13)
    # logu_D(n) = psi(n/4) - ln pi
    for n in (2, 3, 4, 8):
        want = float(mpmath.digamma(n / 4.0)) - math.log(math.pi)
        assert cval("logu_D", n=n) == pytest.approx(want, rel=1e-12,
                                                    abs=1e-12)
    # hls_B(n) = (n/2) psi(n/2) - (1/2) ln(pi^{n/2} Gamma(n)/Gamma(n/2))
    for n in (2, 3, 5):
        want = float((n / 2) * mpmath.digamma(n / 2)
                     - 0.5 * mpmath.log(mpmath.pi ** (n / 2)
                                        * mpmath.gamma(n)
                                        / mpmath.gamma(n / 2)))
        assert cval("hls_B", n=n) == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_mpmath_oracle_pitt_as():
    for n in (1, 2, 3, 6):
        for alpha in (0.25, 0.5, 1.0, 1.5):
            if alpha >= min(2.0, n):
                continue
            pitt = mpmath.pi ** alpha * (mpmath.gamma((n - alpha) / 4)
                                         / mpmath.gamma((n + alpha) / 4)) ** 2
            as_d = (4 / mpmath.mpf(alpha) * mpmath.pi ** (n / 2 + alpha)
                    * mpmath.gamma(1 - alpha / 2)
                    / mpmath.gamma((n + alpha) / 2))
            assert cval("pitt_C", n=n, alpha=alpha) == pytest.approx(
                float(pitt), rel=1e-13)
            assert cval("as_D", n=n, alpha=alpha) == pytest.approx(
                float(as_d), rel=1e-13)


@given(n=st.integers(min_value=1, max_value=12),
       alpha=st.floats(min_value=0.05, max_value=1.95))
@settings(max_examples=150, deadline=None)
def test_gsr_product_identity(n, alpha):
    if alpha >= min(2.0, n):
        return
    assert cval("gsr_D", n=n, alpha=alpha) * cval("as_D", n=n, alpha=alpha) \
        == pytest.approx(cval("pitt_C", n=n, alpha=alpha), rel=1e-12)


@given(n=st.integers(min_value=1, max_value=12),
       alpha=st.floats(min_value=0.05, max_value=1.95))
@settings(max_examples=150, deadline=None)
def test_stein_ratio_identity(n, alpha):
    if alpha >= min(2.0, n):
        return
    ratio = cval("stein_E", n=n, alpha=alpha) / cval("as_D", n=n, alpha=alpha)
    assert ratio == pytest.approx(4.0 - 2.0 ** alpha, rel=1e-12)


def test_stein_removable_singularity():
    # (4 - 2^alpha) Gamma(1 - alpha/2) has a removable singularity at alpha=2
    for n in (1, 3, 5):
        lim = cval("stein_E", n=n, alpha=2.0)
        near = cval("stein_E", n=n, alpha=2.0 - 1e-9)
        assert near == pytest.approx(lim, rel=1e-7)
        assert math.isfinite(lim) and lim > 0.0


def test_groundstate_diagonal_is_gsr():
    for n in (2, 3, 5, 8):
        for alpha in (0.5, 1.0, 1.5):
            if alpha >= min(2.0, n):
                continue
            assert cval("groundstate_Dab", n=n, alpha=alpha, beta=alpha) \
                == pytest.approx(cval("gsr_D", n=n, alpha=alpha), rel=1e-12)


def test_duality_two_forms():
    for n in (2, 3, 5):
        for alpha, beta in ((1.5, 0.5), (1.0, 0.25)):
            if alpha >= n:
                continue
            assert cval("duality_F", n=n, alpha=alpha, beta=beta) \
                == pytest.approx(duality_F_second_form(n, alpha, beta),
                                 rel=1e-12)


def test_logu_E_diagonal_matches_logu_D():
    # p = 2 makes the two conjugate digamma arguments coincide at n/4
    for n in (2, 3, 4, 8):
        assert cval("logu_E", n=n, p=2.0) == pytest.approx(
            cval("logu_D", n=n), rel=1e-13, abs=1e-13)


def test_lambda_weighted_bridge():
    # Lambda(n, alpha, (n-alpha)/2) = as_D / pitt_C
    for n in (2, 3, 5):
        for alpha in (0.5, 1.0, 1.5):
            want = cval("as_D", n=n, alpha=alpha) / cval("pitt_C", n=n,
                                                         alpha=alpha)
            assert cval("lambda_weighted", n=n, alpha=alpha,
                        lam=(n - alpha) / 2.0) == pytest.approx(want,
                                                                rel=1e-12)


def test_parameter_validation():
    with pytest.raises(RegistryError):
        cval("no_such_constant", n=3)
    with pytest.raises(ParameterError):
        cval("pitt_C", n=3)  # missing alpha
    with pytest.raises(ParameterError):
        cval("pitt_C", n=3, alpha=5.0)  # alpha >= n
    with pytest.raises(ParameterError):
        cval("as_D", n=3, alpha=2.5)  # alpha >= 2
    assert validate_params("pitt_C", {"n": 3, "alpha": 5.0})
    assert validate_params("pitt_C", {"n": 3, "alpha": 1.0}) == []


def test_eval_constant_record():
    rec = eval_constant("pitt_C", n=3, alpha=1.0)
    assert rec.id == "pitt_C"
    assert rec.params == {"n": 3.0, "alpha": 1.0}
    assert rec.value == cval("pitt_C", n=3, alpha=1.0)
    assert rec.formula_note
