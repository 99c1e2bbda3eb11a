#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcbounds/core.hpp"

namespace qcbounds {

using RealFn = std::function<double(double)>;
using IntervalPredicate = std::function<bool(const Interval&)>;

/// A registry member: f together with its exact derivatives and antiderivative.
/// Optional callables are left empty when unavailable.
struct FunctionSpec {
  std::string id;
  RealFn f;
  RealFn fprime;
  RealFn f4;
  RealFn antiderivative;
  IntervalPredicate valid_domain;
  IntervalPredicate convex_on;
  /// Points where fprime is undefined.
  std::vector<double> kinks;

  bool has_f4() const noexcept { return static_cast<bool>(f4); }
  bool has_antiderivative() const noexcept { return static_cast<bool>(antiderivative); }
};

/// Keys: "pow:<n>" (1 <= n <= 10), "recip", "exp", "negexp", "absshift:<c>", "log".
/// Throws ValidationError for unknown keys.
FunctionSpec lookup_function(std::string_view key);

/// The default corpus: pow:2..pow:6, recip, exp, negexp, absshift:0.5, log.
std::vector<std::string> corpus_keys();

/// Throws DomainError naming the function and interval when iv is outside f's domain.
void require_domain(const FunctionSpec& f, const Interval& iv);

/// Half-width of the neighborhood around a kink where derivatives are not sampled directly.
inline constexpr double kKinkGuard = 1e-12;

/// |f'(x)|; within kKinkGuard of a kink, the larger one-sided magnitude.
double abs_derivative(const FunctionSpec& f, double x);

/// |f'(x)|^q with the same kink handling.
double derivative_power(const FunctionSpec& f, double x, double q);

/// Largest mismatch between fprime and a central difference of f at `samples`
/// interior points, measured as |fd - f'| / max(1, |f'|). Points near kinks are skipped.
double derivative_self_test(const FunctionSpec& f, const Interval& iv, int samples = 100);

}  // namespace qcbounds
