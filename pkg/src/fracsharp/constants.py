"""Registry of closed-form sharp constants.

Each entry evaluates a named constant from weighted Fourier / Besov
inequality theory.  All Gamma-ratio products are accumulated in log space
(sums of ``log_gamma`` and multiples of ``ln pi``) and exponentiated at
the end, so large dimensions cannot overflow.  Signed constants built
from digamma values are evaluated directly.

Parameter validity predicates are strict inequalities matching the
stated hypotheses of each inequality; boundary values are rejected,
except ``pitt_C`` at ``alpha = 0`` and the ``alpha = beta`` edge of
``groundstate_Dab`` where the formulas remain finite and meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from .errors import ParameterError, RegistryError
from .special import digamma, log_gamma

LN_PI = math.log(math.pi)
LN2 = math.log(2.0)


@dataclass(frozen=True)
class ConstantValue:
    id: str
    params: Dict[str, float]
    value: float
    formula_note: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "value": self.value,
            "formula": self.formula_note,
        }


@dataclass(frozen=True)
class ConstantSpec:
    name: str
    param_names: Tuple[str, ...]
    formula_note: str
    validators: Tuple[Tuple[str, Callable[..., bool]], ...]
    evaluator: Callable[..., float] = field(compare=False, default=None)


def _lg(x: float) -> float:
    return log_gamma(x)


# --- individual evaluators -------------------------------------------------

def _pitt_C(n, alpha):
    # pi^alpha [Gamma((n-alpha)/4)/Gamma((n+alpha)/4)]^2
    return math.exp(alpha * LN_PI + 2.0 * (_lg((n - alpha) / 4.0) - _lg((n + alpha) / 4.0)))


def _as_D(n, alpha):
    # (4/alpha) pi^(n/2+alpha) Gamma(1-alpha/2)/Gamma((n+alpha)/2)
    return math.exp(
        math.log(4.0 / alpha)
        + (n / 2.0 + alpha) * LN_PI
        + _lg(1.0 - alpha / 2.0)
        - _lg((n + alpha) / 2.0)
    )


def _gsr_D(n, alpha):
    # pi^(-n/2-alpha) (alpha/4) Gamma((n+alpha)/2)/Gamma(1-alpha/2) * pitt_C
    if alpha == 0.0:
        return 0.0
    return math.exp(
        -(n / 2.0 + alpha) * LN_PI
        + math.log(alpha / 4.0)
        + _lg((n + alpha) / 2.0)
        - _lg(1.0 - alpha / 2.0)
    ) * _pitt_C(n, alpha)


def _stein_ratio(alpha: float) -> float:
    """(4 - 2^alpha)/(2 - alpha), with the removable singularity at alpha = 2."""
    h = 2.0 - alpha
    if h == 0.0:
        return 4.0 * LN2
    return -4.0 * math.expm1(-h * LN2) / h


def _stein_E(n, alpha):
    # (4-2^alpha)/(2-alpha) * (8/alpha) pi^(n/2+alpha) Gamma(2-alpha/2)/Gamma((n+alpha)/2)
    return _stein_ratio(alpha) * math.exp(
        math.log(8.0 / alpha)
        + (n / 2.0 + alpha) * LN_PI
        + _lg(2.0 - alpha / 2.0)
        - _lg((n + alpha) / 2.0)
    )


def _steinweiss_E(n, p, alpha, beta):
    pp = p / (p - 1.0)
    return math.exp(
        (n / 2.0) * LN_PI
        + _lg((alpha + beta) / 2.0)
        + _lg(n / (2.0 * p) - alpha / 2.0)
        + _lg(n / (2.0 * pp) - beta / 2.0)
        - _lg((n - alpha - beta) / 2.0)
        - _lg(n / (2.0 * pp) + alpha / 2.0)
        - _lg(n / (2.0 * p) + beta / 2.0)
    )


def _fourier_power_d(n, alpha):
    # pi^(alpha-n) [Gamma((2n-alpha)/4)/Gamma(alpha/4)]^2
    return math.exp((alpha - n) * LN_PI + 2.0 * (_lg((2.0 * n - alpha) / 4.0) - _lg(alpha / 4.0)))


def _duality_F(n, alpha, beta):
    # first displayed form: (C_alpha/C_beta) pi^(n-alpha+beta)
    #                       [Gamma((alpha-beta)/4)/Gamma((2n-alpha+beta)/4)]^2
    return (_pitt_C(n, alpha) / _pitt_C(n, beta)) * math.exp(
        (n - alpha + beta) * LN_PI
        + 2.0 * (_lg((alpha - beta) / 4.0) - _lg((2.0 * n - alpha + beta) / 4.0))
    )


def duality_F_second_form(n: float, alpha: float, beta: float) -> float:
    """pi^n [Gamma-product]^2 — the second displayed form, for cross-checks."""
    return math.exp(
        n * LN_PI
        + 2.0
        * (
            _lg((alpha - beta) / 4.0)
            + _lg((n - alpha) / 4.0)
            + _lg((n + beta) / 4.0)
            - _lg((2.0 * n - alpha + beta) / 4.0)
            - _lg((n + alpha) / 4.0)
            - _lg((n - beta) / 4.0)
        )
    )


def _groundstate_Dab(n, alpha, beta):
    # pi^(-n/2+alpha-beta) (beta/4) Gamma((n+beta)/2)/Gamma(1-beta/2)
    #   * [Gamma((n-alpha)/4)/Gamma((n+alpha)/4)]^2
    return math.exp(
        (-n / 2.0 + alpha - beta) * LN_PI
        + math.log(beta / 4.0)
        + _lg((n + beta) / 2.0)
        - _lg(1.0 - beta / 2.0)
        + 2.0 * (_lg((n - alpha) / 4.0) - _lg((n + alpha) / 4.0))
    )


def _lambda_weighted(n, alpha, lam):
    # pi^(-alpha) as_D * Gamma((n-lam)/2)Gamma((lam+alpha)/2)
    #                    / [Gamma(lam/2)Gamma((n-alpha-lam)/2)]
    return _as_D(n, alpha) * math.exp(
        -alpha * LN_PI
        + _lg((n - lam) / 2.0)
        + _lg((lam + alpha) / 2.0)
        - _lg(lam / 2.0)
        - _lg((n - alpha - lam) / 2.0)
    )


def _logu_D(n):
    return digamma(n / 4.0) - LN_PI


def _logu_E(n, p):
    pp = p / (p - 1.0)
    return 0.5 * (digamma(n / (2.0 * p)) + digamma(n / (2.0 * pp))) - LN_PI


def _hls_B(n):
    return (n / 2.0) * digamma(n / 2.0) - 0.5 * ((n / 2.0) * LN_PI + _lg(float(n)) - _lg(n / 2.0))


def _besov_entropy_E(n):
    return digamma(n / 2.0) - digamma(n / 4.0) - (1.0 / n) * (
        -(n / 2.0) * LN_PI + _lg(float(n)) - _lg(n / 2.0)
    )


def _hls_A(n, p):
    pp = p / (p - 1.0)
    return math.exp(
        (n / pp) * LN_PI
        + _lg(n / p - n / 2.0)
        - _lg(n / p)
        + (2.0 / p - 1.0) * (_lg(float(n)) - _lg(n / 2.0))
    )


def _hls_C(n, p):
    pp = p / (p - 1.0)
    return math.exp(
        _lg(n / pp)
        - _lg(n / p)
        + (2.0 / p - 1.0) * (_lg(float(n)) - (n / 2.0) * math.log(4.0 * math.pi) - _lg(n / 2.0))
    )


def _bbm_C(n, beta):
    # beta(1-beta)/(n-2 beta) pi^(-beta-n/2) Gamma(n/2+1-beta)/Gamma(2-beta)
    #   * [Gamma(n)/Gamma(n/2)]^(2 beta/n)
    return math.exp(
        math.log(beta * (1.0 - beta) / (n - 2.0 * beta))
        + (-beta - n / 2.0) * LN_PI
        + _lg(n / 2.0 + 1.0 - beta)
        - _lg(2.0 - beta)
        + (2.0 * beta / n) * (_lg(float(n)) - _lg(n / 2.0))
    )


def _hprime_A(s):
    # 2^((2s+1)/(s+1)) s(s+1) [Gamma^2(s+1)/Gamma(2s+2)]^(1/(s+1))
    return math.exp(
        ((2.0 * s + 1.0) / (s + 1.0)) * LN2
        + math.log(s * (s + 1.0))
        + (2.0 * _lg(s + 1.0) - _lg(2.0 * s + 2.0)) / (s + 1.0)
    )


def _nagy_B(s):
    # (s/2)^(2s) (2s+1)^(-(2s+1)) Gamma^2(2s+2)/Gamma^4(s+1)
    return math.exp(
        2.0 * s * math.log(s / 2.0)
        - (2.0 * s + 1.0) * math.log(2.0 * s + 1.0)
        + 2.0 * _lg(2.0 * s + 2.0)
        - 4.0 * _lg(s + 1.0)
    )


def _halfspace_prefactor(n, p, beta):
    return math.exp(
        ((n - 1.0) / 2.0) * LN_PI + _lg((p * beta + 1.0) / 2.0) - _lg((p * beta + n) / 2.0)
    )


def _heisenberg_prefactor(n, p, beta):
    return math.exp(
        n * math.log(4.0)
        + 0.5 * LN_PI
        + _lg((2.0 * n + p * beta) / 4.0)
        - _lg((2.0 * n + 2.0 + p * beta) / 4.0)
    )


def _mixed_prefactor(n, m, p, beta):
    return math.exp(
        (n / 2.0) * LN_PI + _lg((m + p * beta) / 2.0) - _lg((n + m + p * beta) / 2.0)
    )


# --- registry --------------------------------------------------------------

def _dim(n) -> bool:
    return float(n) == int(n) and n >= 1


def _spec(name, params, note, validators, evaluator):
    return ConstantSpec(name, tuple(params), note, tuple(validators), evaluator)


CONSTANTS: Dict[str, ConstantSpec] = {
    s.name: s
    for s in [
        _spec(
            "pitt_C", ("n", "alpha"),
            "pi^alpha [Gamma((n-alpha)/4)/Gamma((n+alpha)/4)]^2",
            [("n is a positive integer", lambda n, alpha: _dim(n)),
             ("0 <= alpha", lambda n, alpha: alpha >= 0.0),
             ("alpha < n", lambda n, alpha: alpha < n)],
            _pitt_C,
        ),
        _spec(
            "gsr_D", ("n", "alpha"),
            "pi^(-n/2-alpha) (alpha/4) Gamma((n+alpha)/2)/Gamma(1-alpha/2) * pitt_C(n,alpha)",
            [("n is a positive integer", lambda n, alpha: _dim(n)),
             ("0 <= alpha", lambda n, alpha: alpha >= 0.0),
             ("alpha < min(2, n)", lambda n, alpha: alpha < min(2.0, float(n)))],
            _gsr_D,
        ),
        _spec(
            "as_D", ("n", "alpha"),
            "(4/alpha) pi^(n/2+alpha) Gamma(1-alpha/2)/Gamma((n+alpha)/2)",
            [("n is a positive integer", lambda n, alpha: _dim(n)),
             ("0 < alpha", lambda n, alpha: alpha > 0.0),
             ("alpha < 2", lambda n, alpha: alpha < 2.0)],
            _as_D,
        ),
        _spec(
            "stein_E", ("n", "alpha"),
            "(4-2^alpha)/(2-alpha) * (8/alpha) pi^(n/2+alpha) Gamma(2-alpha/2)/Gamma((n+alpha)/2)",
            [("n is a positive integer", lambda n, alpha: _dim(n)),
             ("0 < alpha", lambda n, alpha: alpha > 0.0),
             ("alpha < 4", lambda n, alpha: alpha < 4.0)],
            _stein_E,
        ),
        _spec(
            "steinweiss_E", ("n", "p", "alpha", "beta"),
            "pi^(n/2) Gamma((a+b)/2)Gamma(n/2p - a/2)Gamma(n/2p' - b/2) / "
            "[Gamma((n-a-b)/2)Gamma(n/2p' + a/2)Gamma(n/2p + b/2)]",
            [("n is a positive integer", lambda n, p, alpha, beta: _dim(n)),
             ("1 < p", lambda n, p, alpha, beta: p > 1.0),
             ("alpha < n/p", lambda n, p, alpha, beta: alpha < n / p),
             ("beta < n/p'", lambda n, p, alpha, beta: beta < n * (1.0 - 1.0 / p)),
             ("0 < alpha + beta", lambda n, p, alpha, beta: alpha + beta > 0.0),
             ("alpha + beta < n", lambda n, p, alpha, beta: alpha + beta < n)],
            _steinweiss_E,
        ),
        _spec(
            "fourier_power_d", ("n", "alpha"),
            "pi^(alpha-n) [Gamma((2n-alpha)/4)/Gamma(alpha/4)]^2",
            [("n is a positive integer", lambda n, alpha: _dim(n)),
             ("0 < alpha", lambda n, alpha: alpha > 0.0),
             ("alpha < 2n", lambda n, alpha: alpha < 2.0 * n)],
            _fourier_power_d,
        ),
        _spec(
            "duality_F", ("n", "alpha", "beta"),
            "(pitt_C(n,alpha)/pitt_C(n,beta)) pi^(n-alpha+beta) "
            "[Gamma((alpha-beta)/4)/Gamma((2n-alpha+beta)/4)]^2",
            [("n is a positive integer", lambda n, alpha, beta: _dim(n)),
             ("0 < beta", lambda n, alpha, beta: beta > 0.0),
             ("beta < alpha", lambda n, alpha, beta: beta < alpha),
             ("alpha < n", lambda n, alpha, beta: alpha < n)],
            _duality_F,
        ),
        _spec(
            "groundstate_Dab", ("n", "alpha", "beta"),
            "pi^(-n/2+alpha-beta) (beta/4) Gamma((n+beta)/2)/Gamma(1-beta/2) "
            "[Gamma((n-alpha)/4)/Gamma((n+alpha)/4)]^2",
            [("n is a positive integer", lambda n, alpha, beta: _dim(n)),
             ("0 < beta", lambda n, alpha, beta: beta > 0.0),
             ("beta < 2", lambda n, alpha, beta: beta < 2.0),
             ("beta <= alpha", lambda n, alpha, beta: beta <= alpha),
             ("alpha < n", lambda n, alpha, beta: alpha < n)],
            _groundstate_Dab,
        ),
        _spec(
            "lambda_weighted", ("n", "alpha", "lam"),
            "pi^(-alpha) as_D(n,alpha) Gamma((n-lam)/2)Gamma((lam+alpha)/2) / "
            "[Gamma(lam/2)Gamma((n-alpha-lam)/2)]",
            [("n is a positive integer", lambda n, alpha, lam: _dim(n)),
             ("0 < alpha", lambda n, alpha, lam: alpha > 0.0),
             ("alpha < min(2, n)", lambda n, alpha, lam: alpha < min(2.0, float(n))),
             ("0 < lam", lambda n, alpha, lam: lam > 0.0),
             ("lam < n - alpha", lambda n, alpha, lam: lam < n - alpha)],
            _lambda_weighted,
        ),
        _spec(
            "logu_D", ("n",),
            "psi(n/4) - ln(pi)",
            [("n is a positive integer", lambda n: _dim(n))],
            _logu_D,
        ),
        _spec(
            "logu_E", ("n", "p"),
            "(1/2)[psi(n/2p) + psi(n/2p')] - ln(pi)",
            [("n is a positive integer", lambda n, p: _dim(n)),
             ("1 < p", lambda n, p: p > 1.0)],
            _logu_E,
        ),
        _spec(
            "hls_B", ("n",),
            "(n/2) psi(n/2) - (1/2) ln[pi^(n/2) Gamma(n)/Gamma(n/2)]",
            [("n is a positive integer", lambda n: _dim(n))],
            _hls_B,
        ),
        _spec(
            "besov_entropy_E", ("n",),
            "psi(n/2) - psi(n/4) - (1/n) ln[pi^(-n/2) Gamma(n)/Gamma(n/2)]",
            [("n is a positive integer", lambda n: _dim(n))],
            _besov_entropy_E,
        ),
        _spec(
            "hls_A", ("n", "p"),
            "pi^(n/p') Gamma(n/p - n/2)/Gamma(n/p) [Gamma(n)/Gamma(n/2)]^(2/p - 1)",
            [("n is a positive integer", lambda n, p: _dim(n)),
             ("1 < p", lambda n, p: p > 1.0),
             ("p < 2", lambda n, p: p < 2.0)],
            _hls_A,
        ),
        _spec(
            "hls_C", ("n", "p"),
            "Gamma(n/p')/Gamma(n/p) [Gamma(n)/((4 pi)^(n/2) Gamma(n/2))]^(2/p - 1)",
            [("n is a positive integer", lambda n, p: _dim(n)),
             ("1 < p", lambda n, p: p > 1.0),
             ("p < 2", lambda n, p: p < 2.0)],
            _hls_C,
        ),
        _spec(
            "bbm_C", ("n", "beta"),
            "beta(1-beta)/(n-2 beta) pi^(-beta-n/2) Gamma(n/2+1-beta)/Gamma(2-beta) "
            "[Gamma(n)/Gamma(n/2)]^(2 beta/n)",
            [("n is a positive integer", lambda n, beta: _dim(n)),
             ("0 < beta", lambda n, beta: beta > 0.0),
             ("beta < 1", lambda n, beta: beta < 1.0),
             ("n > 2 beta", lambda n, beta: n > 2.0 * beta)],
            _bbm_C,
        ),
        _spec(
            "hprime_A", ("s",),
            "2^((2s+1)/(s+1)) s(s+1) [Gamma^2(s+1)/Gamma(2s+2)]^(1/(s+1))",
            [("s > 0", lambda s: s > 0.0)],
            _hprime_A,
        ),
        _spec(
            "nagy_B", ("s",),
            "(s/2)^(2s) (2s+1)^(-(2s+1)) Gamma^2(2s+2)/Gamma^4(s+1)",
            [("s > 0", lambda s: s > 0.0)],
            _nagy_B,
        ),
        _spec(
            "halfspace_prefactor", ("n", "p", "beta"),
            "pi^((n-1)/2) Gamma((p beta+1)/2)/Gamma((p beta+n)/2)",
            [("n is a positive integer", lambda n, p, beta: _dim(n)),
             ("0 < beta", lambda n, p, beta: beta > 0.0),
             ("beta < 1", lambda n, p, beta: beta < 1.0),
             ("1 <= p", lambda n, p, beta: p >= 1.0),
             ("p < 1/beta", lambda n, p, beta: p < 1.0 / beta)],
            _halfspace_prefactor,
        ),
        _spec(
            "heisenberg_prefactor", ("n", "p", "beta"),
            "4^n sqrt(pi) Gamma((2n+p beta)/4)/Gamma((2n+2+p beta)/4)",
            [("n is a positive integer", lambda n, p, beta: _dim(n)),
             ("0 < beta", lambda n, p, beta: beta > 0.0),
             ("beta < 1", lambda n, p, beta: beta < 1.0),
             ("1 <= p", lambda n, p, beta: p >= 1.0),
             ("p < 2n/beta", lambda n, p, beta: p < 2.0 * n / beta)],
            _heisenberg_prefactor,
        ),
        _spec(
            "mixed_prefactor", ("n", "m", "p", "beta"),
            "pi^(n/2) Gamma((m+p beta)/2)/Gamma((n+m+p beta)/2)",
            [("n is a positive integer", lambda n, m, p, beta: _dim(n)),
             ("m is a positive integer", lambda n, m, p, beta: _dim(m)),
             ("0 < beta", lambda n, m, p, beta: beta > 0.0),
             ("beta < 1", lambda n, m, p, beta: beta < 1.0),
             ("1 <= p", lambda n, m, p, beta: p >= 1.0),
             ("p < m/beta", lambda n, m, p, beta: p < m / beta)],
            _mixed_prefactor,
        ),
    ]
}


def constant_ids() -> List[str]:
    return sorted(CONSTANTS)


def _resolve(name: str) -> ConstantSpec:
    try:
        return CONSTANTS[name]
    except KeyError:
        raise RegistryError(f"unknown constant id {name!r}") from None


def _ordered_params(spec: ConstantSpec, params: Dict[str, float]) -> List[float]:
    unknown = set(params) - set(spec.param_names)
    if unknown:
        raise ParameterError(spec.name, [f"unknown parameter(s) {sorted(unknown)}"])
    missing = [p for p in spec.param_names if p not in params]
    if missing:
        raise ParameterError(spec.name, [f"missing parameter(s) {missing}"])
    return [float(params[p]) for p in spec.param_names]


def validate_params(name: str, params: Dict[str, float]) -> List[str]:
    """Return the list of violated predicates; empty when valid."""
    spec = _resolve(name)
    args = _ordered_params(spec, params)
    return [desc for desc, pred in spec.validators if not pred(*args)]


def eval_constant(name: str, **params: float) -> ConstantValue:
    spec = _resolve(name)
    violations = validate_params(name, params)
    if violations:
        raise ParameterError(name, violations)
    args = _ordered_params(spec, params)
    value = spec.evaluator(*args)
    return ConstantValue(name, {p: float(params[p]) for p in spec.param_names}, value,
                         spec.formula_note)


def cval(name: str, **params: float) -> float:
    """Shorthand: evaluated value only."""
    return eval_constant(name, **params).value
