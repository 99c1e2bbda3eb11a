#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcbounds/bounds.hpp"
#include "qcbounds/core.hpp"
#include "qcbounds/quadrature.hpp"
#include "qcbounds/quasiconvex.hpp"

namespace qcbounds {

struct SweepConfig {
  std::vector<std::string> functions;
  std::vector<Interval> intervals;
  std::vector<double> alpha_grid;
  std::vector<double> lambda_grid;
  std::vector<double> q_grid;
  /// (alpha, lambda) pairs appended after the grid product.
  std::vector<std::pair<double, double>> extra_points;
  /// Uniform random (alpha, lambda) pairs drawn from `seed`, appended last.
  int random_points = 0;
  std::uint64_t seed = 0;
  double tol_violation = 1e-9;
  double integrator_tol = kDefaultIntegratorTol;
  int qc_samples = kDefaultQcSamples;
  double qc_tol = kDefaultQcTol;
  /// Worker threads for tuple evaluation; output order does not depend on it.
  unsigned threads = 1;

  /// Throws ValidationError naming the first offending field.
  void validate() const;

  /// The (alpha, lambda) points in sweep order: grid product, extras, random draws.
  std::vector<std::pair<double, double>> rule_points() const;

  /// Seven functions, intervals [0,1], [1,2], [-1,2], alpha and lambda in
  /// {0, 1/4, 1/3, 1/2, 1}, q in {1, 3/2, 2}, plus (0.9, 0.9) for the third regime.
  static SweepConfig defaults();
};

enum class Verdict { Sound, Violation, HypothesisUnmet, Skipped };

std::string_view to_string(Verdict v) noexcept;

/// Theorem labels first, then the baselines, in report order.
inline constexpr std::string_view kTheoremLabels[] = {"thm21", "thm22", "thm23"};
inline constexpr std::string_view kBaselineLabels[] = {"base_12",
                                                       "base_13",
                                                       "base_14",
                                                       "base_15",
                                                       "simpson_classical_printed",
                                                       "simpson_classical_standard"};

struct BoundEntry {
  std::string label;
  std::optional<double> value;
  /// value - true_error when both exist.
  std::optional<double> slack;
  Verdict verdict = Verdict::Skipped;
  /// Why the entry is absent.
  std::string reason;
};

/// VIOLATION iff slack < -tol and the hypothesis holds; HYPOTHESIS_UNMET iff
/// slack < -tol and it does not; SOUND otherwise.
Verdict classify_slack(double slack, double tol, bool hypothesis_holds) noexcept;

struct BoundReport {
  std::string function;
  Interval interval;
  double alpha = 0.0;
  double lambda = 0.0;
  double q = 1.0;
  Regime regime = Regime::R1;
  std::optional<QCVerdict> qc;
  std::optional<double> true_error;
  /// One entry per label in kTheoremLabels then kBaselineLabels.
  std::vector<BoundEntry> bounds;
  /// Non-empty when the whole tuple was skipped (domain, integrator failure).
  std::string skip_reason;

  /// Throws std::out_of_range for an unknown label.
  const BoundEntry& bound(std::string_view label) const;
  /// Smallest slack over the theorem bounds that were computed.
  std::optional<double> theorem_slack_min() const;
  /// Worst theorem-bound verdict: VIOLATION > HYPOTHESIS_UNMET > SOUND > SKIPPED.
  Verdict theorem_verdict() const;
};

struct VerdictCounts {
  long sound = 0;
  long violation = 0;
  long hypothesis_unmet = 0;
  long skipped = 0;
};

struct SlackWitness {
  double slack = 0.0;
  std::string label;
  std::string function;
  Interval interval{0.0, 1.0};
  double alpha = 0.0;
  double lambda = 0.0;
  double q = 1.0;
};

struct SummaryStats {
  long reports = 0;
  long skipped_tuples = 0;
  /// Keyed by bound label, in report order.
  std::vector<std::pair<std::string, VerdictCounts>> per_bound;
  /// Over the theorem bounds only.
  std::optional<SlackWitness> min_slack;
  std::vector<CorollaryReport> corollaries;

  const VerdictCounts& counts(std::string_view label) const;
  long theorem_violations() const;
};

struct SweepResult {
  std::vector<BoundReport> reports;
  SummaryStats summary;
};

/// Evaluates a single tuple; never throws for integrator or domain trouble.
BoundReport evaluate_tuple(const SweepConfig& config, const FunctionSpec& f, const Interval& iv, double alpha,
                           double lambda, double q);

/// One report per (function, interval, rule point, q), ordered lexicographically by
/// those indices. Throws ValidationError for an invalid config only.
SweepResult run_sweep(const SweepConfig& config);

struct IdentityRow {
  std::string function;
  Interval interval;
  double alpha = 0.0;
  double lambda = 0.0;
  std::optional<double> residual;
  std::string skip_reason;
};

/// f(mid) <= mean value <= (f(a) + f(b)) / 2 for convex f.
struct HermiteHadamardRow {
  std::string function;
  Interval interval;
  double midpoint_value = 0.0;
  double mean_value = 0.0;
  double endpoint_average = 0.0;
  bool holds = false;
};

HermiteHadamardRow hermite_hadamard(const FunctionSpec& f, const Interval& iv, double tol = 1e-12,
                                    double integrator_tol = kDefaultIntegratorTol);

struct IdentityResult {
  std::vector<IdentityRow> rows;
  double max_residual = 0.0;
  /// Rows inside the domain whose evaluation threw.
  long failed_rows = 0;
  std::vector<HermiteHadamardRow> hermite_hadamard;
  bool hermite_hadamard_holds = true;
};

/// Kernel-identity residuals over functions x intervals x rule points, plus the
/// Hermite-Hadamard check on every convex (function, interval) pair.
IdentityResult identity_suite(const SweepConfig& config);

}  // namespace qcbounds
