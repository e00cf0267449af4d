"""Acceptance gate: the sixteen release criteria, one pass/fail line each.

Each criterion is a single test named ``test_criterion_NN_*`` that prints
``criterion NN: PASS|FAIL — summary`` before asserting, so the gate output
is readable both under ``pytest -v`` and with ``-s``.

Criterion 15 is an expected failure recorded deliberately: the gradient
coefficient obtained by extrapolating the second-difference constant to
the local limit disagrees with the displayed closed form by an exact
factor of 4.  The companion test pins the independently derived
coefficient, which the extrapolation reproduces to machine precision.
"""

import math
import time

import mpmath
import pytest

from fracsharp import (cval, discrete_nsw_test, euclidean_profile_mc,
                       run_check, sharpness_probe)
from fracsharp.constants import duality_F_second_form
from fracsharp.quadrature import sharp_constant_integral

mpmath.mp.dps = 25


def report(num, ok, detail):
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} — {detail}")
    assert ok, f"criterion {num:02d} failed: {detail}"


def _alphas(n):
    return [a for a in (0.5, 1.0, 1.5) if a < min(2.0, n)]


def test_criterion_01_constant_identities():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(1, 9):
        for alpha in _alphas(n):
            pitt = cval("pitt_C", n=n, alpha=alpha)
            as_d = cval("as_D", n=n, alpha=alpha)
            rel = [
                abs(cval("gsr_D", n=n, alpha=alpha) * as_d / pitt - 1.0),
                abs(cval("stein_E", n=n, alpha=alpha) / as_d
                    / (4.0 - 2.0 ** alpha) - 1.0),
                abs(cval("lambda_weighted", n=n, alpha=alpha,
                         lam=(n - alpha) / 2.0) / (as_d / pitt) - 1.0),
                abs(cval("groundstate_Dab", n=n, alpha=alpha, beta=alpha)
                    / cval("gsr_D", n=n, alpha=alpha) - 1.0),
            ]
            if alpha > 0.5:  # duality needs 0 < beta < alpha
                beta = alpha / 2.0
                rel.append(abs(cval("duality_F", n=n, alpha=alpha, beta=beta)
                               / duality_F_second_form(n, alpha, beta) - 1.0))
            worst = max(worst, max(rel))
    elapsed = time.perf_counter() - t0
    report(1, worst <= 1e-12 and elapsed < 1.0,
           f"worst relative error {worst:.2e} over n in 1..8 "
           f"in {elapsed:.3f}s")


PROFILES = ({"kind": "gaussian", "a": 1.0, "c": 1.0},
            {"kind": "inverse_power", "a": 1.0, "s": 2.0})


def _identity_sweep(check_id):
    worst, slowest = 0.0, 0.0
    for n in (1, 2, 3):
        for alpha in _alphas(n):
            for prof in PROFILES:
                t0 = time.perf_counter()
                rep = run_check(check_id, {"n": n, "alpha": alpha,
                                           "profile": dict(prof)},
                                tol=1e-6)
                dt = time.perf_counter() - t0
                slowest = max(slowest, dt)
                worst = max(worst, abs(rep.margin))
                assert rep.passed, (check_id, n, alpha, prof, rep.margin)
    return worst, slowest


def test_criterion_02_gsr_identity():
    worst, slowest = _identity_sweep("gsr_identity")
    report(2, worst <= 1e-6 and slowest < 10.0,
           f"worst relative error {worst:.2e}, slowest case {slowest:.2f}s")


def test_criterion_03_aronszajn_smith_identity():
    worst, slowest = _identity_sweep("as_identity")
    report(3, worst <= 1e-6 and slowest < 10.0,
           f"worst relative error {worst:.2e}, slowest case {slowest:.2f}s")


def test_criterion_04_groundstate_inequality():
    margins = {}
    ok = True
    for beta, alpha in ((0.5, 1.0), (1.0, 1.5)):
        rep = run_check("groundstate_thm1",
                        {"n": 3, "alpha": alpha, "beta": beta})
        margins[(beta, alpha)] = rep.margin
        ok = ok and rep.passed and rep.margin >= -1e-6
    diag = run_check("groundstate_thm1", {"n": 3, "alpha": 1.0, "beta": 1.0})
    ok = ok and abs(diag.margin) <= 1e-6
    report(4, ok, f"margins {margins}, equality margin at alpha=beta "
                  f"{diag.margin:.2e}")


def test_criterion_05_nagy_equality():
    worst = 0.0
    for s in (0.5, 1.0, 2.0):
        rep = run_check("nagy_thm5", {"s": s}, tol=1e-8)
        worst = max(worst, abs(rep.margin))
        assert rep.passed, (s, rep.margin)
    b_half = cval("nagy_B", s=0.5)
    exact = abs(b_half / (4.0 / math.pi ** 2) - 1.0)
    report(5, worst <= 1e-8 and exact <= 1e-12,
           f"worst equality error {worst:.2e}; B(1/2) vs 4/pi^2 "
           f"rel {exact:.2e}")


def test_criterion_06_euler_lagrange_residual():
    worst_an, worst_fd = 0.0, 0.0
    for s in (0.5, 1.0, 2.0):
        rep = run_check("euler_lagrange", {"s": s}, tol=1e-8)
        worst_an = max(worst_an, rep.lhs)
        worst_fd = max(worst_fd, rep.notes["fd_max_residual"])
        assert rep.passed, (s, rep.lhs, rep.notes)
    report(6, worst_an <= 1e-8 and worst_fd <= 1e-5,
           f"max analytic residual {worst_an:.2e}, "
           f"max finite-difference residual {worst_fd:.2e}")


def test_criterion_07_logarithmic_identity():
    rep = run_check("log_uncertainty", {"n": 4}, tol=1e-4)
    report(7, rep.passed and abs(rep.margin) <= 1e-4,
           f"relative error {rep.margin:.2e} (gaussian, n=4)")


def test_criterion_08_log_sobolev_equality():
    rep = run_check("log_sobolev", tol=1e-8)
    report(8, rep.passed and abs(rep.margin) <= 1e-8,
           f"relative error {rep.margin:.2e} at the normalized gaussian")


def test_criterion_09_hls_entropy():
    rep = run_check("hls_entropy", tol=1e-5)
    report(9, rep.passed and abs(rep.margin) <= 1e-5,
           f"margin {rep.margin:.2e} at normalized (1+|x|^2)^(-3/2), n=3")


def test_criterion_10_bessel_potential_pair():
    rep = run_check("bessel_pair")
    report(10, rep.passed,
           f"worst residual/bound ratio {rep.lhs:.3f}; notes "
           f"{ {k: v for k, v in rep.notes.items() if 'err' in k} }")


def test_criterion_11_monotonicity():
    rep = run_check("monotonicity_cor")
    drops = rep.notes["consecutive_drops"]
    bars = rep.notes["error_bars_3x"]
    ok = rep.passed and all(d > b for d, b in zip(drops, bars))
    report(11, ok, f"consecutive drops {['%.3e' % d for d in drops]} all "
                   f"exceed 3x error bars {['%.1e' % b for b in bars]}")


def test_criterion_12_discrete_nsw():
    t0 = time.perf_counter()
    rep = discrete_nsw_test(None, 0.0, 1000, seed=1234)
    elapsed = time.perf_counter() - t0
    report(12, rep.passed and elapsed < 30.0,
           f"worst margin {rep.margin:.2e} over 1000 trials "
           f"in {elapsed:.1f}s")


def test_criterion_13_frank_seiringer_constants():
    # n = 1: radial-angular reduction vs an independent direct 1-D oracle
    p, beta = 2.0, 0.3
    lam = (1.0 - p * beta) / p
    pb = p * beta

    def f(x):
        x = mpmath.mpf(x)
        return abs(1 - abs(x) ** (-lam)) ** p * abs(x - 1) ** (-1 - pb)

    oracle = float(mpmath.quad(f, [-mpmath.inf, -1, 0, 0.5, 1, 2,
                                   mpmath.inf]))
    d1 = sharp_constant_integral("euclidean_D", {"n": 1, "p": p,
                                                 "beta": beta})
    rel1 = abs(d1.value / oracle - 1.0)

    # n in {2, 3}: Monte Carlo within 3 sigma
    sigmas = {}
    for n in (2, 3):
        det = sharp_constant_integral("euclidean_D", {"n": n, "p": p,
                                                      "beta": beta})
        mc = euclidean_profile_mc(n, p, beta, 120_000, seed=2024)
        sigmas[n] = abs(mc.value - det.value) / mc.abs_err
    mc_ok = all(s <= 3.0 for s in sigmas.values())

    ratios = [r["ratio"] for r in
              sharpness_probe("fs_thm8", "power_truncation", [1.0, 2.0, 4.0])]
    probe_ok = all(b >= a for a, b in zip(ratios, ratios[1:])) \
        and all(r <= 1.0 + 1e-6 for r in ratios)

    report(13, rel1 <= 1e-8 and mc_ok and probe_ok,
           f"n=1 vs oracle rel {rel1:.2e}; MC deviations "
           f"{ {n: '%.2f sigma' % s for n, s in sigmas.items()} }; "
           f"probe ratios {['%.3f' % r for r in ratios]}")


def test_criterion_14_mixed_factorization():
    n, m, p, beta = 2, 3, 2.0, 0.3
    mixed = sharp_constant_integral("mixed_G", {"n": n, "m": m, "p": p,
                                                "beta": beta})
    inner = sharp_constant_integral("euclidean_D", {"n": m, "p": p,
                                                    "beta": beta})
    c = (n + m + p * beta) / 2.0
    angular = float(mpmath.pi ** (n / 2.0) * mpmath.gamma(c - n / 2.0)
                    / mpmath.gamma(c))
    rel = abs(mixed.value / (angular * inner.value) - 1.0)
    report(14, rel <= 1e-8,
           f"factorization relative error {rel:.2e} at "
           f"(n,m,p,beta)=({n},{m},{p},{beta})")


@pytest.mark.xfail(
    strict=True,
    reason="the extrapolated local-limit gradient coefficient is exactly 4x "
           "the displayed closed form; recorded as an honest discrepancy "
           "(see the companion test for the independently derived value)")
def test_criterion_15_gradient_limit_vs_displayed():
    worst = 0.0
    for n in (1, 2, 3):
        rep = run_check("int1_gradient_limit", {"n": n}, tol=1e-8)
        worst = max(worst, abs(rep.margin))
    report(15, worst <= 1e-8,
           f"worst relative deviation from the displayed coefficient "
           f"{worst:.2e}")


def test_criterion_15_companion_derived_coefficient():
    worst_extrap, ratios = 0.0, set()
    for n in (1, 2, 3):
        rep = run_check("int1_gradient_limit", {"n": n})
        worst_extrap = max(worst_extrap,
                           abs(rep.notes["extrapolation_vs_closed_form"]))
        ratios.add(round(rep.notes["ratio_to_printed"], 9))
    ok = worst_extrap <= 1e-8 and ratios == {4.0}
    report(15, ok,
           f"(companion) extrapolation matches the derived coefficient "
           f"(ln 2/n)*8*pi^(n/2)/Gamma(n/2) to {worst_extrap:.2e}; "
           f"ratio to the displayed value is exactly {sorted(ratios)}")


def test_criterion_16_pitt_strictness():
    gaps = {}
    ok = True
    for alpha in (0.5, 1.0, 1.5):
        rep = run_check("pitt_spectral", {"n": 3, "alpha": alpha})
        gaps[alpha] = rep.notes["gap"]
        ok = ok and rep.passed and rep.notes["gap"] > 0.0 \
            and rep.notes["ratio"] < rep.notes["sharp_constant"]
    report(16, ok, f"strictly positive gaps {gaps}")
