import math

import pytest

import qcbounds


def test_constants():
    assert abs(qcbounds.power_mean_coefficient(0.5, 1 / 3) - 5 / 36) < 1e-15
    assert qcbounds.power_mean_coefficient(0.5, 0.0) == 0.25
    assert qcbounds.classify_regime(0.9, 0.9) == "R3"
    assert qcbounds.gamma_upsilon(0.5, 1.0)["upsilon1"] == 0.125


def test_bounds_and_errors():
    assert abs(qcbounds.true_error("recip", 1, 2, 0.5, 1.0) - (0.75 - math.log(2))) < 1e-15
    b = qcbounds.bounds("pow:2", 0, 1, 0.5, 0.0, 2.0)
    assert abs(b["thm22"]["value"] - math.sqrt(1 / 3)) < 1e-15
    assert b["thm23"]["components"]["C"] == 4.0
    assert qcbounds.bounds("pow:2", 0, 1, 0.5, 1 / 3)["thm22"] is None
    assert qcbounds.identity_residual("exp", 0, 1, 0.3, 0.7) < 1e-10


def test_integrate_python_callable():
    value, err, evals = qcbounds.integrate(math.sin, 0.0, math.pi)
    assert abs(value - 2.0) < 1e-12
    assert evals > 0


def test_quasiconvex_and_means():
    assert qcbounds.check_quasiconvex("recip", 1, 2, 2.0)["holds"]
    p3 = qcbounds.proposition_bound("P3", 1, 2, 0.5, 1.0)
    assert abs(p3["lhs"] - (0.75 - math.log(2))) < 1e-15
    assert p3["bound"] == 0.25
    assert abs(qcbounds.logarithmic_mean(1, 2) - 1 / math.log(2)) < 1e-15


def test_corollary_and_sweep():
    r = qcbounds.corollary_crosscheck("22-mid")
    assert abs(r["ratio"] - 0.5) < 1e-12
    result, csv = qcbounds.run_sweep(
        {"functions": ["pow:2"], "intervals": [[0, 1]], "alpha_grid": ["1/2"],
         "lambda_grid": ["1/3"], "q_grid": [1], "extra_points": []})
    assert len(result["reports"]) == 1
    assert csv.startswith("function,interval_a")
    assert qcbounds.identity_suite()["max_residual"] <= 1e-9


def test_errors_map_to_python():
    with pytest.raises(qcbounds.ValidationError):
        qcbounds.rule_value("pow:2", 0, 1, 1.5, 0.0)
    with pytest.raises(ValueError):
        qcbounds.rule_value("recip", -1, 1, 0.5, 0.0)
    with pytest.raises(qcbounds.UnsupportedExponentError):
        qcbounds.proposition_bound("P2", 0, 1, 0.5, 0.0, 1.0)
    with pytest.raises(qcbounds.ValidationError):
        qcbounds.run_sweep({"q_grid": []})
