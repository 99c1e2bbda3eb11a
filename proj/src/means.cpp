#include "qcbounds/means.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcbounds/error.hpp"
#include "qcbounds/functions.hpp"
#include "qcbounds/quadrature.hpp"
#include "qcbounds/quasiconvex.hpp"

namespace qcbounds {

namespace {

void require_distinct(double a, double b, const char* mean) {
  if (a == b) throw DomainError(std::string(mean) + " requires a != b");
}

void require_alpha(double alpha, const char* mean) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError(std::string(mean) + " requires alpha in [0, 1]");
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

double weighted_arithmetic(double a, double b, double alpha) {
  require_alpha(alpha, "weighted arithmetic mean");
  return alpha * a + (1.0 - alpha) * b;
}

double arithmetic(double a, double b) { return 0.5 * (a + b); }

double weighted_harmonic(double a, double b, double alpha) {
  require_alpha(alpha, "weighted harmonic mean");
  if (a == 0.0 || b == 0.0) throw DomainError("weighted harmonic mean requires a, b != 0");
  const double s = alpha / a + (1.0 - alpha) / b;
  if (s == 0.0) throw DomainError("weighted harmonic mean is infinite for these inputs");
  return 1.0 / s;
}

double harmonic(double a, double b) {
  if (a == 0.0 || b == 0.0) throw DomainError("harmonic mean requires a, b != 0");
  if (a + b == 0.0) throw DomainError("harmonic mean is infinite for a = -b");
  return 2.0 * a * b / (a + b);
}

double logarithmic(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("logarithmic mean requires a, b > 0");
  require_distinct(a, b, "logarithmic mean");
  const double x = (b - a) / a;
  if (std::abs(b - a) < 1e-8 * std::abs(a)) {
    // x / ln(1 + x) = 1 + x/2 - x^2/12 + x^3/24 - ...
    return a * (1.0 + x / 2.0 - x * x / 12.0 + x * x * x / 24.0);
  }
  return (b - a) / std::log1p(x);
}

double inverse_logarithmic(double a, double b) {
  require_distinct(a, b, "inverse logarithmic mean");
  if ((a <= 0.0 && b >= 0.0) || (b <= 0.0 && a >= 0.0)) {
    throw DomainError("inverse logarithmic mean requires 0 outside [a, b]");
  }
  if (a < 0.0) return -inverse_logarithmic(-b, -a);
  return 1.0 / logarithmic(a, b);
}

double n_logarithmic_power(double a, double b, int n) {
  require_distinct(a, b, "n-logarithmic mean");
  if (n < 1) throw DomainError("n-logarithmic mean requires n >= 1");
  // (b^{n+1} - a^{n+1}) / (b - a) = sum_k a^k b^{n-k}, free of cancellation.
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += ipow(a, k) * ipow(b, n - k);
  return sum / (n + 1);
}

double n_logarithmic(double a, double b, int n) {
  const double power = n_logarithmic_power(a, b, n);
  if (power < 0.0) {
    // Only reachable for odd n.
    return -std::pow(-power, 1.0 / n);
  }
  return std::pow(power, 1.0 / n);
}

std::string_view to_string(Proposition p) noexcept {
  switch (p) {
    case Proposition::P1:
      return "P1";
    case Proposition::P2:
      return "P2";
    case Proposition::P3:
      return "P3";
    case Proposition::P4:
      return "P4";
  }
  return "?";
}

std::optional<Proposition> parse_proposition(std::string_view text) noexcept {
  for (auto p : {Proposition::P1, Proposition::P2, Proposition::P3, Proposition::P4}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

PropositionReport proposition_bound(Proposition which, const PropositionInputs& inputs, const RuleParams& params) {
  const double a = inputs.a;
  const double b = inputs.b;
  if (!(a < b)) throw DomainError("propositions require a < b");
  const Interval iv(a, b);
  const double width = b - a;
  const double alpha = params.alpha();
  const double lambda = params.lambda();
  const double q = params.q();
  const bool power_case = which == Proposition::P1 || which == Proposition::P2;
  const bool holder_case = which == Proposition::P2 || which == Proposition::P4;

  if (power_case && inputs.n < 2) throw DomainError(std::string(to_string(which)) + " requires n >= 2");
  if (which == Proposition::P3 && a <= 0.0 && b >= 0.0) throw DomainError("P3 requires 0 outside [a, b]");
  if (which == Proposition::P4 && !(a > 0.0)) throw DomainError("P4 requires 0 < a < b");
  if (holder_case && !params.p()) {
    throw UnsupportedExponentError(std::string(to_string(which)) + " requires q > 1");
  }

  PropositionReport r;
  r.which = which;
  r.regime = classify_regime(params);
  const double node = weighted_arithmetic(a, b, alpha);

  if (power_case) {
    const int n = inputs.n;
    r.lhs = std::abs(lambda * weighted_arithmetic(ipow(a, n), ipow(b, n), alpha) +
                     (1.0 - lambda) * ipow(node, n) - n_logarithmic_power(a, b, n));
  } else {
    r.lhs = std::abs(lambda / weighted_harmonic(a, b, alpha) + (1.0 - lambda) / node - inverse_logarithmic(a, b));
  }

  // |f'|^q at a point: |n x^{n-1}|^q = n^q |x|^{(n-1)q} and |x^{-2}|^q = x^{-2q}.
  // The printed sups drop the n^q factor, so it reappears outside as n.
  const auto sup_term = [&](double x) {
    if (power_case) return std::pow(std::abs(x), (inputs.n - 1) * q);
    return std::pow(std::abs(x), -2.0 * q);
  };
  const double scale = power_case ? inputs.n : 1.0;

  if (!holder_case) {
    const double e = std::max(sup_term(a), sup_term(b));
    r.bound = scale * width * power_mean_coefficient(params, r.regime) * std::pow(e, 1.0 / q);
    r.components = {{power_case ? "E" : "K", e}, {"coefficient", power_mean_coefficient(params, r.regime)}};
  } else {
    const double p = *params.p();
    const double left_sup = std::max(sup_term(a), sup_term(node));
    const double right_sup = std::max(sup_term(b), sup_term(node));
    const auto eps = epsilons(params);
    double left_eps = eps.eps1;
    double right_eps = eps.eps3;
    if (r.regime == Regime::R2) right_eps = eps.eps4;
    if (r.regime == Regime::R3) left_eps = eps.eps2;
    const double bracket = std::pow(1.0 - alpha, 1.0 / q) * std::pow(left_sup, 1.0 / q) * std::pow(left_eps, 1.0 / p) +
                           std::pow(alpha, 1.0 / q) * std::pow(right_sup, 1.0 / q) * std::pow(right_eps, 1.0 / p);
    r.bound = width * std::pow(1.0 / (p + 1.0), 1.0 / p) * scale * bracket;
    r.components = {{power_case ? "F" : "M", left_sup}, {power_case ? "G" : "N", right_sup}, {"node", node}};
  }
  r.slack = r.bound - r.lhs;

  const FunctionSpec f = lookup_function(power_case ? "pow:" + std::to_string(inputs.n) : "recip");
  r.generic_lhs = true_error(f, iv, params);
  r.generic_bound = holder_case ? theorem23_bound(f, iv, params).value : theorem21_bound(f, iv, params).value;
  r.qc_holds = check_derivative_quasiconvex(f, iv, q).holds;
  return r;
}

}  // namespace qcbounds
