"""Error bounds for the generalized three-point quadrature rule."""

import json

from ._qcbounds import (
    ConvergenceError,
    DomainError,
    UnsupportedExponentError,
    ValidationError,
    bounds,
    check_quasiconvex,
    classify_regime,
    corpus_keys,
    gamma_upsilon,
    harmonic_mean,
    identity_residual,
    integrate,
    logarithmic_mean,
    n_logarithmic_mean,
    power_mean_coefficient,
    proposition_bound,
    rule_value,
    true_error,
)
from . import _qcbounds

__all__ = [
    "ConvergenceError",
    "DomainError",
    "UnsupportedExponentError",
    "ValidationError",
    "bounds",
    "check_quasiconvex",
    "classify_regime",
    "corollary_crosscheck",
    "corpus_keys",
    "gamma_upsilon",
    "harmonic_mean",
    "identity_residual",
    "identity_suite",
    "integrate",
    "logarithmic_mean",
    "n_logarithmic_mean",
    "power_mean_coefficient",
    "proposition_bound",
    "rule_value",
    "run_sweep",
    "true_error",
]


def _config_text(config):
    return "" if config is None else json.dumps(config)


def run_sweep(config=None):
    """Run a sweep. Returns (result dict, CSV text); config keys mirror the JSON config file."""
    result, csv = _qcbounds.run_sweep_json(_config_text(config))
    return json.loads(result), csv


def identity_suite(config=None):
    return json.loads(_qcbounds.identity_suite_json(_config_text(config)))


def corollary_crosscheck(id, fn="pow:2", a=0.0, b=1.0, q=2.0):
    return json.loads(_qcbounds.corollary_crosscheck(id, fn, a, b, q))
