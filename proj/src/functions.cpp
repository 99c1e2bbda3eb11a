#include "qcbounds/functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcbounds/error.hpp"

namespace qcbounds {

namespace {

bool everywhere(const Interval&) { return true; }
bool nowhere(const Interval&) { return false; }

double ipow(double x, int n) {
  double result = 1.0;
  for (int i = 0; i < n; ++i) result *= x;
  return result;
}

FunctionSpec make_power(int n) {
  FunctionSpec s;
  s.id = "pow:" + std::to_string(n);
  s.f = [n](double x) { return ipow(x, n); };
  s.fprime = [n](double x) { return n * ipow(x, n - 1); };
  s.f4 = [n](double x) {
    if (n < 4) return 0.0;
    return static_cast<double>(n * (n - 1) * (n - 2) * (n - 3)) * ipow(x, n - 4);
  };
  s.antiderivative = [n](double x) { return ipow(x, n + 1) / (n + 1); };
  s.valid_domain = everywhere;
  if (n % 2 == 0) {
    s.convex_on = everywhere;
  } else if (n == 1) {
    s.convex_on = everywhere;
  } else {
    s.convex_on = [](const Interval& iv) { return iv.a() >= 0.0; };
  }
  return s;
}

FunctionSpec make_recip() {
  FunctionSpec s;
  s.id = "recip";
  s.f = [](double x) { return 1.0 / x; };
  s.fprime = [](double x) { return -1.0 / (x * x); };
  s.f4 = [](double x) { return 24.0 / ipow(x, 5); };
  s.antiderivative = [](double x) { return std::log(std::abs(x)); };
  s.valid_domain = [](const Interval& iv) { return iv.a() > 0.0 || iv.b() < 0.0; };
  s.convex_on = [](const Interval& iv) { return iv.a() > 0.0; };
  return s;
}

FunctionSpec make_exp() {
  FunctionSpec s;
  s.id = "exp";
  s.f = [](double x) { return std::exp(x); };
  s.fprime = s.f;
  s.f4 = s.f;
  s.antiderivative = s.f;
  s.valid_domain = everywhere;
  s.convex_on = everywhere;
  return s;
}

FunctionSpec make_negexp() {
  FunctionSpec s;
  s.id = "negexp";
  s.f = [](double x) { return std::exp(-x); };
  s.fprime = [](double x) { return -std::exp(-x); };
  s.f4 = s.f;
  s.antiderivative = [](double x) { return -std::exp(-x); };
  s.valid_domain = everywhere;
  s.convex_on = everywhere;
  return s;
}

FunctionSpec make_absshift(double c, std::string id) {
  FunctionSpec s;
  s.id = std::move(id);
  s.f = [c](double x) { return std::abs(x - c); };
  s.fprime = [c](double x) { return x < c ? -1.0 : 1.0; };
  s.antiderivative = [c](double x) { return 0.5 * (x - c) * std::abs(x - c); };
  s.valid_domain = everywhere;
  s.convex_on = everywhere;
  s.kinks = {c};
  return s;
}

FunctionSpec make_log() {
  FunctionSpec s;
  s.id = "log";
  s.f = [](double x) { return std::log(x); };
  s.fprime = [](double x) { return 1.0 / x; };
  s.f4 = [](double x) { return -6.0 / ipow(x, 4); };
  s.antiderivative = [](double x) { return x * std::log(x) - x; };
  s.valid_domain = [](const Interval& iv) { return iv.a() > 0.0; };
  s.convex_on = nowhere;
  return s;
}

double nearest_kink_distance(const FunctionSpec& f, double x) {
  double best = INFINITY;
  for (double k : f.kinks) best = std::min(best, std::abs(x - k));
  return best;
}

}  // namespace

FunctionSpec lookup_function(std::string_view key) {
  if (key.starts_with("pow:")) {
    const double n = parse_real(key.substr(4), "pow exponent");
    if (n != std::floor(n) || n < 1 || n > 10) {
      throw ValidationError("function", "pow exponent must be an integer in [1, 10]: '" + std::string(key) + "'");
    }
    return make_power(static_cast<int>(n));
  }
  if (key == "recip") return make_recip();
  if (key == "exp") return make_exp();
  if (key == "negexp") return make_negexp();
  if (key == "log") return make_log();
  if (key.starts_with("absshift:")) {
    const double c = parse_real(key.substr(9), "absshift center");
    return make_absshift(c, std::string(key));
  }
  throw ValidationError("function", "unknown function '" + std::string(key) + "'");
}

std::vector<std::string> corpus_keys() {
  return {"pow:2", "pow:3", "pow:4", "pow:5", "pow:6", "recip", "exp", "negexp", "absshift:0.5", "log"};
}

void require_domain(const FunctionSpec& f, const Interval& iv) {
  if (!f.valid_domain(iv)) {
    throw DomainError("function " + f.id + " is not defined on " + format_interval(iv));
  }
}

double abs_derivative(const FunctionSpec& f, double x) {
  if (nearest_kink_distance(f, x) < kKinkGuard) {
    return std::max(std::abs(f.fprime(x - kKinkGuard)), std::abs(f.fprime(x + kKinkGuard)));
  }
  return std::abs(f.fprime(x));
}

double derivative_power(const FunctionSpec& f, double x, double q) {
  const double d = abs_derivative(f, x);
  return q == 1.0 ? d : std::pow(d, q);
}

double derivative_self_test(const FunctionSpec& f, const Interval& iv, int samples) {
  require_domain(f, iv);
  const double width = iv.width();
  double worst = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double x = iv.a() + width * i / (samples + 1);
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    if (nearest_kink_distance(f, x) < 2.0 * h) continue;
    const double fd = (f.f(x + h) - f.f(x - h)) / (2.0 * h);
    const double exact = f.fprime(x);
    worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
  }
  return worst;
}

}  // namespace qcbounds
