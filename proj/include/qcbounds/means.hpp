#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcbounds/bounds.hpp"
#include "qcbounds/core.hpp"

namespace qcbounds {

// Special means. Each throws DomainError naming the mean when its inputs are
// outside the domain of definition.

/// alpha a + (1 - alpha) b.
double weighted_arithmetic(double a, double b, double alpha);
/// (a + b) / 2.
double arithmetic(double a, double b);
/// (alpha / a + (1 - alpha) / b)^{-1}; a, b nonzero.
double weighted_harmonic(double a, double b, double alpha);
/// 2ab / (a + b); a, b nonzero.
double harmonic(double a, double b);
/// (b - a) / (ln b - ln a); a, b > 0, a != b.
double logarithmic(double a, double b);
/// Mean value of 1/x over [a, b] (that is, 1/L(a, b)); 0 outside [a, b], a != b.
double inverse_logarithmic(double a, double b);
/// ((b^{n+1} - a^{n+1}) / ((n + 1)(b - a)))^{1/n}; a != b, n >= 1. Odd n keeps the sign.
double n_logarithmic(double a, double b, int n);
/// L_n(a, b)^n, i.e. the mean value of x^n over [a, b].
double n_logarithmic_power(double a, double b, int n);

enum class Proposition { P1, P2, P3, P4 };

std::string_view to_string(Proposition p) noexcept;
std::optional<Proposition> parse_proposition(std::string_view text) noexcept;

struct PropositionInputs {
  double a = 0.0;
  double b = 1.0;
  /// Power for P1/P2; ignored by P3/P4.
  int n = 2;
};

/// P1/P2 instantiate the rule error for x^n, P3/P4 for 1/x. P1/P3 use the
/// power-mean coefficients with endpoint sups (E, K); P2/P4 the Hölder form with
/// sups over {a, A_alpha(a, b)} and {A_alpha(a, b), b} (F/G, M/N).
struct PropositionReport {
  Proposition which{};
  Regime regime{};
  /// |lambda * endpoint mean + (1 - lambda) * node mean - mean value|, from the means.
  double lhs = 0.0;
  /// Right-hand side from the means' own sups.
  double bound = 0.0;
  double slack = 0.0;
  /// Same quantities through the function registry and the general bounds.
  double generic_lhs = 0.0;
  double generic_bound = 0.0;
  /// Whether |f'|^q passed the numerical quasi-convexity check on [a, b].
  bool qc_holds = false;
  std::vector<Component> components;
};

PropositionReport proposition_bound(Proposition which, const PropositionInputs& inputs, const RuleParams& params);

}  // namespace qcbounds
