#pragma once

#include <optional>

#include "qcbounds/core.hpp"
#include "qcbounds/functions.hpp"

namespace qcbounds {

inline constexpr int kDefaultQcSamples = 2001;
inline constexpr double kDefaultQcTol = 1e-10;

struct QCVerdict {
  bool holds = false;
  /// Grid argmin of g (smallest x on ties): where the non-increasing part ends.
  std::optional<double> valley_point;
  /// max over grid x < z < y of g(z) - max(g(x), g(y)), clamped at 0.
  double worst_violation = 0.0;
  int samples = 0;
};

/// Uniform-grid quasi-convexity test in O(n). For each interior z the best
/// witnesses are the smallest value to its left and to its right, so the breach at
/// z is g(z) - max(prefix_min, suffix_min); this is exactly the triple condition.
/// Non-finite samples raise DomainError.
QCVerdict check_quasiconvex(const RealFn& g, const Interval& iv, int n_samples = kDefaultQcSamples,
                            double tol = kDefaultQcTol);

/// Exhaustive O(n^3) check over all grid triples. n must lie in [3, 200].
QCVerdict brute_force_qc(const RealFn& g, const Interval& iv, int n, double tol = kDefaultQcTol);

/// |f'|^q as a sampled function; points within kKinkGuard of a kink are nudged off it.
RealFn derivative_power_fn(const FunctionSpec& f, double q);

/// check_quasiconvex applied to |f'|^q on iv.
QCVerdict check_derivative_quasiconvex(const FunctionSpec& f, const Interval& iv, double q,
                                       int n_samples = kDefaultQcSamples, double tol = kDefaultQcTol);

}  // namespace qcbounds
