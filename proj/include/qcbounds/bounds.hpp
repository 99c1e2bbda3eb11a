#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcbounds/core.hpp"
#include "qcbounds/functions.hpp"

namespace qcbounds {

/// Closed-form first-moment coefficients of the two error kernels.
///   gamma1 = (1 - alpha) [alpha lambda - (1 - alpha) / 2]
///   gamma2 = (alpha lambda)^2 - gamma1
///   upsilon1 = (1 - (1 - alpha)^2) / 2 - alpha [1 - lambda (1 - alpha)]
///   upsilon2 = (1 + (1 - alpha)^2) / 2 - (lambda + 1)(1 - alpha)[1 - lambda (1 - alpha)]
struct GammaUpsilon {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double upsilon1 = 0.0;
  double upsilon2 = 0.0;
};

GammaUpsilon gamma_upsilon(const RuleParams& params) noexcept;

/// p-th moment coefficients of the kernels (times p + 1). Requires q > 1.
struct Epsilons {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3 = 0.0;
  double eps4 = 0.0;
};

Epsilons epsilons(const RuleParams& params);

/// int_0^{1-alpha} |t - alpha lambda| dt and int_{1-alpha}^1 |t - 1 + lambda (1 - alpha)| dt.
struct KernelMoments {
  double first = 0.0;
  double second = 0.0;
};

/// The closed forms selected by which side of each kernel zero 1 - alpha falls on.
KernelMoments closed_form_moments(const RuleParams& params) noexcept;

/// The same two integrals evaluated numerically.
KernelMoments moment_integral_check(const RuleParams& params);

/// Sum of the regime's gamma and upsilon: (g2 + u2), (g2 + u1) or (g1 + u2).
double power_mean_coefficient(const RuleParams& params, Regime regime);
double power_mean_coefficient(const RuleParams& params);

struct Component {
  std::string label;
  double value = 0.0;
};

struct BoundValue {
  /// Absolute scale, (b - a) factor included.
  double value = 0.0;
  /// Empty for the baselines, which are tied to a fixed rule.
  std::optional<Regime> regime;
  std::vector<Component> components;

  /// Throws std::out_of_range for an unknown label.
  double component(std::string_view label) const;
};

/// A = sup{|f'(a)|^q, |f'(b)|^q}.
SupWitness sup_A(const FunctionSpec& f, const Interval& iv, double q);

/// B = sup{|f'(a)|^q, |f'(node)|^q}, C = sup{|f'(node)|^q, |f'(b)|^q},
/// node = alpha a + (1 - alpha) b.
std::pair<SupWitness, SupWitness> sup_B_C(const FunctionSpec& f, const Interval& iv, const RuleParams& params);

/// Bound values from the sups alone; these are what the function-level bounds evaluate.
double theorem21_value(double width, const RuleParams& params, double sup_a, Regime regime);
double theorem22_value(double width, const RuleParams& params, double sup_a, Regime regime);
double theorem23_value(double width, const RuleParams& params, double sup_b, double sup_c, Regime regime);

/// Power-mean bound: (b - a) * coefficient * A^{1/q}.
BoundValue theorem21_bound(const FunctionSpec& f, const Interval& iv, const RuleParams& params);

/// Hölder bound with the endpoint sup A. Throws UnsupportedExponentError for q = 1.
BoundValue theorem22_bound(const FunctionSpec& f, const Interval& iv, const RuleParams& params);

/// Hölder bound with the split sups B and C. Throws UnsupportedExponentError for q = 1.
BoundValue theorem23_bound(const FunctionSpec& f, const Interval& iv, const RuleParams& params);

inline constexpr int kSimpsonSamplePoints = 1001;

/// A literature bound, or the reason it could not be evaluated.
struct BaselineBound {
  std::string label;
  std::optional<BoundValue> bound;
  std::string reason;
};

/// Trapezoid baselines base_12 .. base_15 and the classical Simpson bound in both
/// the (b - a)^2 variant ("simpson_classical_printed") and the (b - a)^4 variant
/// ("simpson_classical_standard"). Exponent-dependent entries use p = q / (q - 1).
std::vector<BaselineBound> baseline_bounds(const FunctionSpec& f, const Interval& iv, double q);

enum class CorollaryId {
  Thm21Q1,
  Thm21Simpson,
  Thm21Midpoint,
  Thm21Trapezoid,
  Thm22Simpson,
  Thm22Midpoint,
  Thm22Trapezoid,
  Thm23Simpson,
  Thm23Midpoint,
  Thm23Trapezoid,
};

std::string_view to_string(CorollaryId id) noexcept;
std::optional<CorollaryId> parse_corollary_id(std::string_view text) noexcept;
std::vector<CorollaryId> all_corollaries();

struct CorollaryReport {
  CorollaryId id{};
  double alpha = 0.0;
  double lambda = 0.0;
  double q = 1.0;
  /// Closed form as stated for the special rule, sups raised to 1/q.
  double printed = 0.0;
  /// For the power-mean corollaries: the sup without the outer 1/q power.
  std::optional<double> printed_literal;
  /// The general bound at the same (alpha, lambda, q).
  double general = 0.0;
  double ratio = 0.0;
  /// 1, or 1/2 for the Hölder midpoint and trapezoid forms.
  double expected_ratio = 1.0;
  bool documented_discrepancy = false;
  bool agrees = false;
};

/// Evaluates a corollary's closed form against the general bound. The q-one form
/// uses (alpha, lambda) = (free_alpha, free_lambda) and ignores q; the others fix
/// (alpha, lambda) to the rule they describe.
CorollaryReport corollary_crosscheck(CorollaryId id, const FunctionSpec& f, const Interval& iv, double q,
                                     double free_alpha = 0.3, double free_lambda = 0.7);

}  // namespace qcbounds
