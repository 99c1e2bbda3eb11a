#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcbounds/bounds.hpp"
#include "qcbounds/error.hpp"
#include "qcbounds/harness.hpp"
#include "qcbounds/means.hpp"
#include "qcbounds/quadrature.hpp"
#include "qcbounds/quasiconvex.hpp"
#include "qcbounds/report_io.hpp"

namespace py = pybind11;
using namespace qcbounds;

namespace {

py::dict bound_dict(const BoundValue& b) {
  py::dict d;
  d["value"] = b.value;
  d["regime"] = b.regime ? py::cast(std::string(to_string(*b.regime))) : py::none();
  py::dict comps;
  for (const auto& c : b.components) comps[py::str(c.label)] = c.value;
  d["components"] = comps;
  return d;
}

py::dict qc_dict(const QCVerdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["valley_point"] = v.valley_point ? py::cast(*v.valley_point) : py::none();
  d["worst_violation"] = v.worst_violation;
  d["samples"] = v.samples;
  return d;
}

RuleParams params_of(double alpha, double lambda, double q) { return make_params(alpha, lambda, q); }

SweepConfig config_of(const std::string& text) {
  if (text.empty()) return SweepConfig::defaults();
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("config", "config is not valid JSON");
  return config_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_qcbounds, m) {
  m.doc() = "Error bounds for the generalized three-point quadrature rule";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedExponentError>(m, "UnsupportedExponentError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  m.def("corpus_keys", &corpus_keys);

  m.def(
      "classify_regime",
      [](double alpha, double lambda) { return std::string(to_string(classify_regime(params_of(alpha, lambda, 1.0)))); },
      py::arg("alpha"), py::arg("lambda_"));

  m.def(
      "gamma_upsilon",
      [](double alpha, double lambda) {
        const auto g = gamma_upsilon(params_of(alpha, lambda, 1.0));
        py::dict d;
        d["gamma1"] = g.gamma1;
        d["gamma2"] = g.gamma2;
        d["upsilon1"] = g.upsilon1;
        d["upsilon2"] = g.upsilon2;
        return d;
      },
      py::arg("alpha"), py::arg("lambda_"));

  m.def(
      "power_mean_coefficient",
      [](double alpha, double lambda) { return power_mean_coefficient(params_of(alpha, lambda, 1.0)); },
      py::arg("alpha"), py::arg("lambda_"));

  m.def(
      "rule_value",
      [](const std::string& fn, double a, double b, double alpha, double lambda) {
        return rule_value(lookup_function(fn), Interval(a, b), params_of(alpha, lambda, 1.0));
      },
      py::arg("fn"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("lambda_"));

  m.def(
      "true_error",
      [](const std::string& fn, double a, double b, double alpha, double lambda, double tol) {
        return true_error(lookup_function(fn), Interval(a, b), params_of(alpha, lambda, 1.0), tol);
      },
      py::arg("fn"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("lambda_"),
      py::arg("tol") = kDefaultIntegratorTol);

  m.def(
      "identity_residual",
      [](const std::string& fn, double a, double b, double alpha, double lambda) {
        return lemma_identity_residual(lookup_function(fn), Interval(a, b), params_of(alpha, lambda, 1.0));
      },
      py::arg("fn"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("lambda_"));

  m.def(
      "integrate",
      [](const std::function<double(double)>& g, double lo, double hi, double tol) {
        const auto r = adaptive_integral(g, lo, hi, tol);
        return py::make_tuple(r.value, r.abs_err_est, r.evals);
      },
      py::arg("g"), py::arg("lo"), py::arg("hi"), py::arg("tol") = kDefaultIntegratorTol);

  m.def(
      "bounds",
      [](const std::string& fn, double a, double b, double alpha, double lambda, double q) {
        const auto f = lookup_function(fn);
        const Interval iv(a, b);
        const auto params = params_of(alpha, lambda, q);
        py::dict d;
        d["thm21"] = bound_dict(theorem21_bound(f, iv, params));
        d["thm22"] = params.p() ? py::object(bound_dict(theorem22_bound(f, iv, params))) : py::none();
        d["thm23"] = params.p() ? py::object(bound_dict(theorem23_bound(f, iv, params))) : py::none();
        return d;
      },
      py::arg("fn"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("lambda_"), py::arg("q") = 1.0);

  m.def(
      "check_quasiconvex",
      [](const std::string& fn, double a, double b, double q, int samples, double tol) {
        return qc_dict(check_derivative_quasiconvex(lookup_function(fn), Interval(a, b), q, samples, tol));
      },
      py::arg("fn"), py::arg("a"), py::arg("b"), py::arg("q") = 1.0, py::arg("samples") = kDefaultQcSamples,
      py::arg("tol") = kDefaultQcTol);

  m.def(
      "corollary_crosscheck",
      [](const std::string& id, const std::string& fn, double a, double b, double q) {
        const auto which = parse_corollary_id(id);
        if (!which) throw ValidationError("id", "unknown corollary '" + id + "'");
        return to_json(corollary_crosscheck(*which, lookup_function(fn), Interval(a, b), q)).dump();
      },
      py::arg("id"), py::arg("fn") = "pow:2", py::arg("a") = 0.0, py::arg("b") = 1.0, py::arg("q") = 2.0);

  m.def(
      "proposition_bound",
      [](const std::string& prop, double a, double b, double alpha, double lambda, double q, int n) {
        const auto which = parse_proposition(prop);
        if (!which) throw ValidationError("prop", "unknown proposition '" + prop + "'");
        const auto r = proposition_bound(*which, {a, b, n}, params_of(alpha, lambda, q));
        py::dict d;
        d["regime"] = std::string(to_string(r.regime));
        d["lhs"] = r.lhs;
        d["bound"] = r.bound;
        d["slack"] = r.slack;
        d["generic_lhs"] = r.generic_lhs;
        d["generic_bound"] = r.generic_bound;
        d["qc_holds"] = r.qc_holds;
        return d;
      },
      py::arg("prop"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("lambda_"), py::arg("q") = 1.0,
      py::arg("n") = 2);

  m.def("logarithmic_mean", &logarithmic, py::arg("a"), py::arg("b"));
  m.def("n_logarithmic_mean", &n_logarithmic, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("harmonic_mean", &harmonic, py::arg("a"), py::arg("b"));

  m.def(
      "run_sweep_json",
      [](const std::string& config_json) {
        const auto config = config_of(config_json);
        SweepResult result;
        {
          py::gil_scoped_release release;
          result = run_sweep(config);
        }
        std::ostringstream csv;
        write_csv(csv, result);
        return py::make_tuple(to_json(result).dump(), csv.str());
      },
      py::arg("config_json") = "");

  m.def(
      "identity_suite_json",
      [](const std::string& config_json) {
        const auto config = config_of(config_json);
        return to_json(identity_suite(config)).dump();
      },
      py::arg("config_json") = "");
}
