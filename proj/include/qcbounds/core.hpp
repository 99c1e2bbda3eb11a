#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcbounds {

/// Closed interval [a, b] with a < b.
class Interval {
 public:
  /// Throws ValidationError unless a < b and both are finite.
  Interval(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }
  bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// Parameters of the three-point rule
///   lambda * (alpha f(a) + (1 - alpha) f(b)) + (1 - lambda) f(alpha a + (1 - alpha) b)
/// together with the derivative-norm exponent q and its Hölder conjugate p.
class RuleParams {
 public:
  double alpha() const noexcept { return alpha_; }
  double lambda() const noexcept { return lambda_; }
  double q() const noexcept { return q_; }
  /// Present iff q > 1.
  std::optional<double> p() const noexcept { return p_; }

  /// alpha * lambda: the interior zero of the first kernel, in t-coordinates.
  double left_knot() const noexcept { return alpha_ * lambda_; }
  /// 1 - alpha: where the interior node sits, in t-coordinates.
  double node_t() const noexcept { return 1.0 - alpha_; }
  /// 1 - lambda (1 - alpha): the interior zero of the second kernel.
  double right_knot() const noexcept { return 1.0 - lambda_ * (1.0 - alpha_); }

  /// Same alpha and lambda, different exponent.
  RuleParams with_q(double q) const;

  friend RuleParams make_params(double alpha, double lambda, double q);
  friend bool operator==(const RuleParams&, const RuleParams&) = default;

 private:
  RuleParams(double alpha, double lambda, double q, std::optional<double> p)
      : alpha_(alpha), lambda_(lambda), q_(q), p_(p) {}

  double alpha_;
  double lambda_;
  double q_;
  std::optional<double> p_;
};

/// Validates and builds RuleParams. Throws ValidationError naming the field.
RuleParams make_params(double alpha, double lambda, double q);

/// Ordering of {alpha*lambda, 1-alpha, 1-lambda(1-alpha)}:
///   R1: alpha*lambda <= 1-alpha <= 1-lambda(1-alpha)
///   R2: alpha*lambda <= 1-lambda(1-alpha) <= 1-alpha
///   R3: 1-alpha <= alpha*lambda <= 1-lambda(1-alpha)
enum class Regime { R1, R2, R3 };

/// Ties go to the lowest-numbered regime. Independent of q.
Regime classify_regime(const RuleParams& params) noexcept;

std::string_view to_string(Regime r) noexcept;

/// Largest |f'|^q over a finite candidate set.
struct SupWitness {
  double value = 0.0;
  double arg = 0.0;
  std::vector<double> candidates;
};

/// Parses a decimal literal ("0.25", "1e-3") or a simple fraction ("1/3", "-2/7").
/// Throws ValidationError on anything else.
double parse_real(std::string_view text, const std::string& field = "value");

/// Shortest decimal that round-trips to the same double.
std::string format_real(double x);

/// "[a, b]" using format_real.
std::string format_interval(const Interval& iv);

}  // namespace qcbounds
