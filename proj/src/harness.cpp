#include "qcbounds/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

#include "qcbounds/error.hpp"

namespace qcbounds {

namespace {

void require_grid(const std::vector<double>& grid, const char* name, double lo, double hi) {
  if (grid.empty()) throw ValidationError(name, std::string(name) + " must not be empty");
  for (double v : grid) {
    if (!std::isfinite(v) || v < lo || v > hi) {
      throw ValidationError(name, std::string(name) + " value " + format_real(v) + " out of range");
    }
  }
}

bool is_trapezoid(double alpha, double lambda) { return alpha == 0.5 && lambda == 1.0; }

bool is_simpson(double alpha, double lambda) { return alpha == 0.5 && std::abs(lambda - 1.0 / 3.0) <= 1e-12; }

int rank(Verdict v) {
  switch (v) {
    case Verdict::Violation:
      return 3;
    case Verdict::HypothesisUnmet:
      return 2;
    case Verdict::Sound:
      return 1;
    case Verdict::Skipped:
      return 0;
  }
  return 0;
}

bool is_theorem_label(std::string_view label) {
  return std::find(std::begin(kTheoremLabels), std::end(kTheoremLabels), label) != std::end(kTheoremLabels);
}

BoundReport skeleton(const FunctionSpec& f, const Interval& iv, double alpha, double lambda, double q,
                     Regime regime) {
  BoundReport r{f.id, iv, alpha, lambda, q, regime, std::nullopt, std::nullopt, {}, {}};
  for (auto label : kTheoremLabels) r.bounds.push_back({std::string(label), {}, {}, Verdict::Skipped, {}});
  for (auto label : kBaselineLabels) r.bounds.push_back({std::string(label), {}, {}, Verdict::Skipped, {}});
  return r;
}

BoundEntry& entry(BoundReport& r, std::string_view label) {
  for (auto& e : r.bounds) {
    if (e.label == label) return e;
  }
  throw std::out_of_range("no bound '" + std::string(label) + "'");
}

void skip_all(BoundReport& r, const std::string& reason) {
  r.skip_reason = reason;
  for (auto& e : r.bounds) e.reason = reason;
}

void record(BoundEntry& e, double value, double true_error, double tol, bool hypothesis) {
  e.value = value;
  e.slack = value - true_error;
  e.verdict = classify_slack(*e.slack, tol, hypothesis);
}

}  // namespace

void SweepConfig::validate() const {
  if (functions.empty()) throw ValidationError("functions", "functions must not be empty");
  for (const auto& key : functions) lookup_function(key);
  if (intervals.empty()) throw ValidationError("intervals", "intervals must not be empty");
  require_grid(alpha_grid, "alpha_grid", 0.0, 1.0);
  require_grid(lambda_grid, "lambda_grid", 0.0, 1.0);
  require_grid(q_grid, "q_grid", 1.0, INFINITY);
  for (const auto& [alpha, lambda] : extra_points) make_params(alpha, lambda, 1.0);
  if (random_points < 0) throw ValidationError("random_points", "random_points must be >= 0");
  if (!(tol_violation >= 0.0)) throw ValidationError("tol_violation", "tol_violation must be >= 0");
  if (!(integrator_tol >= 1e-13 && integrator_tol <= 1e-3)) {
    throw ValidationError("integrator_tol", "integrator_tol must lie in [1e-13, 1e-3]");
  }
  if (qc_samples < 3) throw ValidationError("qc_samples", "qc_samples must be >= 3");
  if (!(qc_tol >= 0.0)) throw ValidationError("qc_tol", "qc_tol must be >= 0");
  if (threads == 0) throw ValidationError("threads", "threads must be >= 1");
}

std::vector<std::pair<double, double>> SweepConfig::rule_points() const {
  std::vector<std::pair<double, double>> points;
  for (double alpha : alpha_grid) {
    for (double lambda : lambda_grid) points.emplace_back(alpha, lambda);
  }
  points.insert(points.end(), extra_points.begin(), extra_points.end());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < random_points; ++i) {
    const double alpha = unit(rng);
    const double lambda = unit(rng);
    points.emplace_back(alpha, lambda);
  }
  return points;
}

SweepConfig SweepConfig::defaults() {
  SweepConfig c;
  c.functions = {"pow:2", "pow:3", "pow:4", "recip", "exp", "absshift:0.5", "log"};
  c.intervals = {Interval(0.0, 1.0), Interval(1.0, 2.0), Interval(-1.0, 2.0)};
  c.alpha_grid = {0.0, 0.25, 1.0 / 3.0, 0.5, 1.0};
  c.lambda_grid = {0.0, 0.25, 1.0 / 3.0, 0.5, 1.0};
  c.q_grid = {1.0, 1.5, 2.0};
  c.extra_points = {{0.9, 0.9}};
  return c;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Sound:
      return "SOUND";
    case Verdict::Violation:
      return "VIOLATION";
    case Verdict::HypothesisUnmet:
      return "HYPOTHESIS_UNMET";
    case Verdict::Skipped:
      return "SKIPPED";
  }
  return "?";
}

Verdict classify_slack(double slack, double tol, bool hypothesis_holds) noexcept {
  if (slack < -tol) return hypothesis_holds ? Verdict::Violation : Verdict::HypothesisUnmet;
  return Verdict::Sound;
}

const BoundEntry& BoundReport::bound(std::string_view label) const {
  for (const auto& e : bounds) {
    if (e.label == label) return e;
  }
  throw std::out_of_range("no bound '" + std::string(label) + "'");
}

std::optional<double> BoundReport::theorem_slack_min() const {
  std::optional<double> best;
  for (auto label : kTheoremLabels) {
    const auto& e = bound(label);
    if (e.slack && (!best || *e.slack < *best)) best = e.slack;
  }
  return best;
}

Verdict BoundReport::theorem_verdict() const {
  Verdict worst = Verdict::Skipped;
  for (auto label : kTheoremLabels) {
    const Verdict v = bound(label).verdict;
    if (rank(v) > rank(worst)) worst = v;
  }
  return worst;
}

const VerdictCounts& SummaryStats::counts(std::string_view label) const {
  for (const auto& [name, c] : per_bound) {
    if (name == label) return c;
  }
  throw std::out_of_range("no bound '" + std::string(label) + "'");
}

long SummaryStats::theorem_violations() const {
  long total = 0;
  for (auto label : kTheoremLabels) total += counts(label).violation;
  return total;
}

BoundReport evaluate_tuple(const SweepConfig& config, const FunctionSpec& f, const Interval& iv, double alpha,
                           double lambda, double q) {
  const RuleParams params = make_params(alpha, lambda, q);
  BoundReport r = skeleton(f, iv, alpha, lambda, q, classify_regime(params));
  if (!f.valid_domain(iv)) {
    skip_all(r, "function " + f.id + " is not defined on " + format_interval(iv));
    return r;
  }
  double err = 0.0;
  try {
    err = true_error(f, iv, params, config.integrator_tol);
    r.qc = check_derivative_quasiconvex(f, iv, q, config.qc_samples, config.qc_tol);
  } catch (const std::exception& e) {
    skip_all(r, e.what());
    return r;
  }
  r.true_error = err;
  const double tol = config.tol_violation;
  const bool qc_holds = r.qc->holds;

  record(entry(r, "thm21"), theorem21_bound(f, iv, params).value, err, tol, qc_holds);
  if (params.p()) {
    record(entry(r, "thm22"), theorem22_bound(f, iv, params).value, err, tol, qc_holds);
    record(entry(r, "thm23"), theorem23_bound(f, iv, params).value, err, tol, qc_holds);
  } else {
    entry(r, "thm22").reason = "needs q > 1";
    entry(r, "thm23").reason = "needs q > 1";
  }

  const bool trapezoid = is_trapezoid(alpha, lambda);
  const bool simpson = is_simpson(alpha, lambda);
  const auto baselines = baseline_bounds(f, iv, q);
  bool qc_first_power = qc_holds;
  if (trapezoid && q != 1.0) {
    qc_first_power = check_derivative_quasiconvex(f, iv, 1.0, config.qc_samples, config.qc_tol).holds;
  }
  for (const auto& base : baselines) {
    auto& e = entry(r, base.label);
    const bool simpson_label = base.label.starts_with("simpson");
    if (simpson_label ? !simpson : !trapezoid) {
      e.reason = simpson_label ? "applies to the Simpson rule only" : "applies to the trapezoid rule only";
      continue;
    }
    if (!base.bound) {
      e.reason = base.reason;
      continue;
    }
    // The classical Simpson bound assumes smoothness, which every member with f4 has.
    const bool hypothesis = simpson_label ? true : (base.label == "base_12" ? qc_first_power : qc_holds);
    record(e, base.bound->value, err, tol, hypothesis);
  }
  return r;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<FunctionSpec> functions;
  for (const auto& key : config.functions) functions.push_back(lookup_function(key));
  const auto points = config.rule_points();

  struct Tuple {
    std::size_t function;
    std::size_t interval;
    double alpha;
    double lambda;
    double q;
  };
  std::vector<Tuple> tuples;
  for (std::size_t fi = 0; fi < functions.size(); ++fi) {
    for (std::size_t ii = 0; ii < config.intervals.size(); ++ii) {
      for (const auto& [alpha, lambda] : points) {
        for (double q : config.q_grid) tuples.push_back({fi, ii, alpha, lambda, q});
      }
    }
  }

  std::vector<std::optional<BoundReport>> slots(tuples.size());
  const auto work = [&](std::size_t i) {
    const auto& t = tuples[i];
    slots[i] = evaluate_tuple(config, functions[t.function], config.intervals[t.interval], t.alpha, t.lambda, t.q);
  };
  if (config.threads <= 1) {
    for (std::size_t i = 0; i < tuples.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < config.threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) work(i);
      });
    }
  }

  SweepResult result;
  result.reports.reserve(slots.size());
  for (auto& s : slots) result.reports.push_back(std::move(*s));

  SummaryStats& summary = result.summary;
  summary.reports = static_cast<long>(result.reports.size());
  for (auto label : kTheoremLabels) summary.per_bound.emplace_back(std::string(label), VerdictCounts{});
  for (auto label : kBaselineLabels) summary.per_bound.emplace_back(std::string(label), VerdictCounts{});
  for (const auto& r : result.reports) {
    if (!r.skip_reason.empty()) ++summary.skipped_tuples;
    for (const auto& e : r.bounds) {
      auto it = std::find_if(summary.per_bound.begin(), summary.per_bound.end(),
                             [&](const auto& kv) { return kv.first == e.label; });
      auto& c = it->second;
      switch (e.verdict) {
        case Verdict::Sound:
          ++c.sound;
          break;
        case Verdict::Violation:
          ++c.violation;
          break;
        case Verdict::HypothesisUnmet:
          ++c.hypothesis_unmet;
          break;
        case Verdict::Skipped:
          ++c.skipped;
          break;
      }
      if (e.slack && is_theorem_label(e.label) && (!summary.min_slack || *e.slack < summary.min_slack->slack)) {
        summary.min_slack = SlackWitness{*e.slack, e.label, r.function, r.interval, r.alpha, r.lambda, r.q};
      }
    }
  }

  // Corollary ratios on the first (function, interval) pair inside its domain.
  for (const auto& f : functions) {
    const auto iv = std::find_if(config.intervals.begin(), config.intervals.end(),
                                 [&](const Interval& i) { return f.valid_domain(i); });
    if (iv == config.intervals.end()) continue;
    for (double q : config.q_grid) {
      for (auto id : all_corollaries()) {
        const bool needs_p = to_string(id).starts_with("22") || to_string(id).starts_with("23");
        if (needs_p && q == 1.0) continue;
        if (id == CorollaryId::Thm21Q1 && q != config.q_grid.front()) continue;
        summary.corollaries.push_back(corollary_crosscheck(id, f, *iv, q));
      }
    }
    break;
  }
  return result;
}

HermiteHadamardRow hermite_hadamard(const FunctionSpec& f, const Interval& iv, double tol, double integrator_tol) {
  require_domain(f, iv);
  HermiteHadamardRow row{f.id, iv, 0.0, 0.0, 0.0, false};
  row.midpoint_value = f.f(iv.midpoint());
  row.mean_value = reference_integral(f, iv, integrator_tol).value / iv.width();
  row.endpoint_average = 0.5 * (f.f(iv.a()) + f.f(iv.b()));
  row.holds = row.midpoint_value <= row.mean_value + tol && row.mean_value <= row.endpoint_average + tol;
  return row;
}

IdentityResult identity_suite(const SweepConfig& config) {
  config.validate();
  IdentityResult result;
  const auto points = config.rule_points();
  for (const auto& key : config.functions) {
    const FunctionSpec f = lookup_function(key);
    for (const auto& iv : config.intervals) {
      const bool valid = f.valid_domain(iv);
      for (const auto& [alpha, lambda] : points) {
        IdentityRow row{f.id, iv, alpha, lambda, std::nullopt, {}};
        if (!valid) {
          row.skip_reason = "function " + f.id + " is not defined on " + format_interval(iv);
        } else {
          try {
            row.residual = lemma_identity_residual(f, iv, make_params(alpha, lambda, 1.0), config.integrator_tol);
            result.max_residual = std::max(result.max_residual, *row.residual);
          } catch (const std::exception& e) {
            row.skip_reason = e.what();
            ++result.failed_rows;
          }
        }
        result.rows.push_back(std::move(row));
      }
      if (valid && f.convex_on(iv)) {
        auto hh = hermite_hadamard(f, iv, 1e-12, config.integrator_tol);
        result.hermite_hadamard_holds = result.hermite_hadamard_holds && hh.holds;
        result.hermite_hadamard.push_back(std::move(hh));
      }
    }
  }
  return result;
}

}  // namespace qcbounds
