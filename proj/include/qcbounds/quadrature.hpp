#pragma once

#include <span>

#include "qcbounds/core.hpp"
#include "qcbounds/functions.hpp"

namespace qcbounds {

inline constexpr double kDefaultIntegratorTol = 1e-12;
inline constexpr long kMaxIntegratorEvals = 1'000'000;

struct QuadResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  long evals = 0;
};

/// lambda (alpha f(a) + (1 - alpha) f(b)) + (1 - lambda) f(alpha a + (1 - alpha) b).
double rule_value(const FunctionSpec& f, const Interval& iv, const RuleParams& params);

/// Adaptive Gauss-Kronrod (7/15) with recursive bisection. A panel of width h is
/// accepted when |K15 - G7| <= max(tol * h / (hi - lo), 10 eps |K15|). Interior
/// breakpoints are always panel edges. Throws ConvergenceError past max_evals.
/// lo == hi yields a zero result.
QuadResult adaptive_integral(const RealFn& g, double lo, double hi, double tol,
                             std::span<const double> breakpoints = {},
                             long max_evals = kMaxIntegratorEvals);

enum class IntegrationPath {
  /// Exact antiderivative when the function has one, adaptive otherwise.
  Automatic,
  /// Always integrate numerically (kinks become breakpoints).
  Adaptive,
};

/// Integral of f over iv (not divided by the width).
/// tol must lie in [1e-13, 1e-3].
QuadResult reference_integral(const FunctionSpec& f, const Interval& iv, double tol = kDefaultIntegratorTol,
                              IntegrationPath path = IntegrationPath::Automatic);

/// rule_value - (1 / (b - a)) * integral, signed.
double signed_error(const FunctionSpec& f, const Interval& iv, const RuleParams& params,
                    double tol = kDefaultIntegratorTol);

/// |rule_value - (1 / (b - a)) * integral|.
double true_error(const FunctionSpec& f, const Interval& iv, const RuleParams& params,
                  double tol = kDefaultIntegratorTol);

/// Both sides of the kernel representation of the rule error:
///   lhs = rule_value - mean value of f
///   rhs = (b - a) [ int_0^{1-alpha} (t - alpha lambda) f'(tb + (1-t)a) dt
///                 + int_{1-alpha}^1 (t - 1 + lambda (1 - alpha)) f'(tb + (1-t)a) dt ]
struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

IdentitySides lemma_identity_sides(const FunctionSpec& f, const Interval& iv, const RuleParams& params,
                                   double tol = kDefaultIntegratorTol);

/// |lhs - rhs| of lemma_identity_sides.
double lemma_identity_residual(const FunctionSpec& f, const Interval& iv, const RuleParams& params,
                               double tol = kDefaultIntegratorTol);

}  // namespace qcbounds
