#include "qcbounds/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "qcbounds/bounds.hpp"
#include "qcbounds/error.hpp"
#include "qcbounds/harness.hpp"
#include "qcbounds/means.hpp"
#include "qcbounds/quadrature.hpp"
#include "qcbounds/quasiconvex.hpp"
#include "qcbounds/report_io.hpp"

namespace qcbounds {

namespace {

constexpr double kIdentityThreshold = 1e-9;

std::string show(double x) { return format_real(x); }

void line(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << value << '\n';
}

struct BoundArgs {
  std::string fn = "pow:2";
  std::string a = "0";
  std::string b = "1";
  std::string alpha = "1/2";
  std::string lambda = "1/3";
  std::string q = "1";
};

int cmd_bound(const BoundArgs& args, std::ostream& out) {
  const FunctionSpec f = lookup_function(args.fn);
  const Interval iv(parse_real(args.a, "a"), parse_real(args.b, "b"));
  const RuleParams params =
      make_params(parse_real(args.alpha, "alpha"), parse_real(args.lambda, "lambda"), parse_real(args.q, "q"));
  require_domain(f, iv);

  const auto sup = sup_A(f, iv, params.q());
  const auto [b_sup, c_sup] = sup_B_C(f, iv, params);
  const auto qc = check_derivative_quasiconvex(f, iv, params.q());
  line(out, "function", f.id + " on " + format_interval(iv));
  line(out, "alpha", show(params.alpha()));
  line(out, "lambda", show(params.lambda()));
  line(out, "q", show(params.q()) + (params.p() ? "  (p = " + show(*params.p()) + ")" : ""));
  line(out, "regime", std::string(to_string(classify_regime(params))));
  line(out, "rule_value", show(rule_value(f, iv, params)));
  line(out, "true_error", show(true_error(f, iv, params)));
  line(out, "A", show(sup.value) + " at x = " + show(sup.arg));
  line(out, "B", show(b_sup.value) + " at x = " + show(b_sup.arg));
  line(out, "C", show(c_sup.value) + " at x = " + show(c_sup.arg));
  line(out, "qc_holds", qc.holds ? "true" : "false");
  line(out, "thm21", show(theorem21_bound(f, iv, params).value));
  if (params.p()) {
    line(out, "thm22", show(theorem22_bound(f, iv, params).value));
    line(out, "thm23", show(theorem23_bound(f, iv, params).value));
  } else {
    line(out, "thm22", "n/a (needs q > 1)");
    line(out, "thm23", "n/a (needs q > 1)");
  }
  return kExitOk;
}

SweepConfig config_for(const std::string& grid) {
  if (grid == "default") return SweepConfig::defaults();
  return load_config(grid);
}

int cmd_identity(const std::string& grid, const std::string& json_out, std::ostream& out) {
  const auto result = identity_suite(config_for(grid));
  long evaluated = 0;
  for (const auto& row : result.rows) evaluated += row.residual ? 1 : 0;
  line(out, "rows", std::to_string(evaluated) + " evaluated, " +
                        std::to_string(result.rows.size() - static_cast<std::size_t>(evaluated)) + " skipped");
  line(out, "failed", std::to_string(result.failed_rows));
  line(out, "max_residual", show(result.max_residual));
  line(out, "hermite", std::string(result.hermite_hadamard_holds ? "holds" : "FAILS") + " on " +
                           std::to_string(result.hermite_hadamard.size()) + " convex pairs");
  if (!json_out.empty()) {
    std::ofstream file(json_out);
    if (!file) throw ValidationError("json", "cannot write '" + json_out + "'");
    file << to_json(result).dump(2) << '\n';
  }
  const bool ok = result.max_residual <= kIdentityThreshold && result.failed_rows == 0;
  line(out, "status", ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitViolation;
}

int cmd_sweep(const std::string& config_path, const std::string& csv_out, std::string json_out, unsigned threads,
              std::ostream& out) {
  SweepConfig config = config_path.empty() ? SweepConfig::defaults() : load_config(config_path);
  if (threads > 0) config.threads = threads;
  const auto result = run_sweep(config);

  if (json_out.empty()) json_out = std::filesystem::path(csv_out).replace_extension(".json").string();
  {
    std::ofstream csv(csv_out);
    if (!csv) throw ValidationError("out", "cannot write '" + csv_out + "'");
    write_csv(csv, result);
  }
  {
    std::ofstream js(json_out);
    if (!js) throw ValidationError("json", "cannot write '" + json_out + "'");
    js << to_json(result).dump(2) << '\n';
  }

  const auto& s = result.summary;
  line(out, "reports", std::to_string(s.reports) + " (" + std::to_string(s.skipped_tuples) + " skipped tuples)");
  out << std::left << std::setw(28) << "bound" << std::setw(8) << "SOUND" << std::setw(11) << "VIOLATION"
      << std::setw(18) << "HYPOTHESIS_UNMET" << "SKIPPED" << '\n';
  for (const auto& [label, c] : s.per_bound) {
    out << std::left << std::setw(28) << label << std::setw(8) << c.sound << std::setw(11) << c.violation
        << std::setw(18) << c.hypothesis_unmet << c.skipped << '\n';
  }
  if (s.min_slack) {
    const auto& w = *s.min_slack;
    line(out, "min_slack", show(w.slack) + " (" + w.label + ", " + w.function + " on " +
                               format_interval(w.interval) + ", alpha=" + show(w.alpha) +
                               ", lambda=" + show(w.lambda) + ", q=" + show(w.q) + ")");
  }
  line(out, "csv", csv_out);
  line(out, "json", json_out);
  const long violations = s.theorem_violations();
  line(out, "status", violations == 0 ? "PASS" : "FAIL (" + std::to_string(violations) + " theorem violations)");
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_corollaries(const std::string& fn, const std::string& a, const std::string& b, const std::string& q_text,
                    std::ostream& out) {
  const FunctionSpec f = lookup_function(fn);
  const Interval iv(parse_real(a, "a"), parse_real(b, "b"));
  const double q = parse_real(q_text, "q");
  if (!(q > 1.0)) throw ValidationError("q", "corollaries needs q > 1 for the Hölder forms");
  line(out, "function", f.id + " on " + format_interval(iv) + ", q = " + show(q));
  out << std::left << std::setw(12) << "corollary" << std::setw(24) << "printed" << std::setw(24) << "general"
      << std::setw(24) << "ratio" << std::setw(10) << "expected" << "status" << '\n';
  for (auto id : all_corollaries()) {
    const auto r = corollary_crosscheck(id, f, iv, q);
    std::string status = r.agrees ? "agrees" : "MISMATCH";
    if (r.documented_discrepancy && r.agrees) status = "known discrepancy (factor 2)";
    out << std::left << std::setw(12) << to_string(id) << std::setw(24) << show(r.printed) << std::setw(24)
        << show(r.general) << std::setw(24) << show(r.ratio) << std::setw(10) << show(r.expected_ratio) << status;
    if (r.printed_literal) out << "  [sup without 1/q: " << show(*r.printed_literal) << "]";
    out << '\n';
  }
  return kExitOk;
}

struct MeansArgs {
  std::string prop = "P1";
  std::string a = "0";
  std::string b = "1";
  std::string alpha = "1/2";
  std::string lambda = "0";
  std::string q = "1";
  int n = 2;
};

int cmd_means(const MeansArgs& args, std::ostream& out) {
  const auto which = parse_proposition(args.prop);
  if (!which) throw ValidationError("prop", "unknown proposition '" + args.prop + "' (P1..P4)");
  const RuleParams params =
      make_params(parse_real(args.alpha, "alpha"), parse_real(args.lambda, "lambda"), parse_real(args.q, "q"));
  const PropositionInputs inputs{parse_real(args.a, "a"), parse_real(args.b, "b"), args.n};
  const auto r = proposition_bound(*which, inputs, params);
  line(out, "proposition", std::string(to_string(r.which)));
  line(out, "regime", std::string(to_string(r.regime)));
  line(out, "lhs", show(r.lhs));
  line(out, "bound", show(r.bound));
  line(out, "slack", show(r.slack));
  line(out, "generic_lhs", show(r.generic_lhs));
  line(out, "generic_bound", show(r.generic_bound));
  line(out, "qc_holds", r.qc_holds ? "true" : "false");
  for (const auto& c : r.components) line(out, c.label, show(c.value));
  return kExitOk;
}

int cmd_qc(const std::string& fn, const std::string& a, const std::string& b, const std::string& q_text, int samples,
           const std::string& tol_text, std::ostream& out) {
  const FunctionSpec f = lookup_function(fn);
  const Interval iv(parse_real(a, "a"), parse_real(b, "b"));
  const double q = parse_real(q_text, "q");
  if (!(q >= 1.0)) throw ValidationError("q", "q out of range, need q >= 1");
  const auto v = check_derivative_quasiconvex(f, iv, q, samples, parse_real(tol_text, "tol"));
  line(out, "function", "|" + f.id + "'|^" + show(q) + " on " + format_interval(iv));
  line(out, "holds", v.holds ? "true" : "false");
  line(out, "valley", v.valley_point ? show(*v.valley_point) : "-");
  line(out, "worst", show(v.worst_violation));
  line(out, "samples", std::to_string(v.samples));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error bounds for the generalized three-point quadrature rule", "qcbounds"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Rule error and all three bounds for one tuple");
  bound->add_option("--fn", bound_args.fn, "Function key (pow:n, recip, exp, negexp, absshift:c, log)");
  bound->add_option("--a", bound_args.a, "Left endpoint");
  bound->add_option("--b", bound_args.b, "Right endpoint");
  bound->add_option("--alpha", bound_args.alpha, "Node parameter in [0, 1]");
  bound->add_option("--lambda", bound_args.lambda, "Endpoint weight in [0, 1]");
  bound->add_option("--q", bound_args.q, "Derivative exponent >= 1");

  std::string identity_grid = "default";
  std::string identity_json;
  auto* identity = app.add_subcommand("identity", "Kernel identity residuals over a grid");
  identity->add_option("--grid", identity_grid, "'default' or a config JSON path");
  identity->add_option("--json", identity_json, "Write per-row residuals to this JSON file");

  std::string sweep_config;
  std::string sweep_out = "results.csv";
  std::string sweep_json;
  unsigned sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep with CSV and JSON output");
  sweep->add_option("--config", sweep_config, "Config JSON (defaults when omitted)");
  sweep->add_option("--out", sweep_out, "CSV output path");
  sweep->add_option("--json", sweep_json, "JSON output path (defaults to the CSV path with .json)");
  sweep->add_option("--threads", sweep_threads, "Worker threads (overrides the config)");

  std::string cor_fn = "pow:2";
  std::string cor_a = "0";
  std::string cor_b = "1";
  std::string cor_q = "2";
  auto* corollaries = app.add_subcommand("corollaries", "Printed corollary forms against the general bounds");
  corollaries->add_option("--fn", cor_fn, "Function key");
  corollaries->add_option("--a", cor_a, "Left endpoint");
  corollaries->add_option("--b", cor_b, "Right endpoint");
  corollaries->add_option("--q", cor_q, "Derivative exponent > 1");

  MeansArgs means_args;
  auto* means = app.add_subcommand("means", "Special-means propositions");
  means->add_option("--prop", means_args.prop, "P1, P2, P3 or P4");
  means->add_option("--a", means_args.a, "Left endpoint");
  means->add_option("--b", means_args.b, "Right endpoint");
  means->add_option("--alpha", means_args.alpha, "Node parameter in [0, 1]");
  means->add_option("--lambda", means_args.lambda, "Endpoint weight in [0, 1]");
  means->add_option("--q", means_args.q, "Derivative exponent >= 1");
  means->add_option("--n", means_args.n, "Power for P1/P2 (n >= 2)");

  std::string qc_fn = "pow:2";
  std::string qc_a = "0";
  std::string qc_b = "1";
  std::string qc_q = "1";
  std::string qc_tol = "1e-10";
  int qc_samples = kDefaultQcSamples;
  auto* qc = app.add_subcommand("qc", "Quasi-convexity of |f'|^q on an interval");
  qc->add_option("--fn", qc_fn, "Function key");
  qc->add_option("--a", qc_a, "Left endpoint");
  qc->add_option("--b", qc_b, "Right endpoint");
  qc->add_option("--q", qc_q, "Exponent >= 1");
  qc->add_option("--samples", qc_samples, "Grid size");
  qc->add_option("--tol", qc_tol, "Violation tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(bound_args, out);
    if (identity->parsed()) return cmd_identity(identity_grid, identity_json, out);
    if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_out, sweep_json, sweep_threads, out);
    if (corollaries->parsed()) return cmd_corollaries(cor_fn, cor_a, cor_b, cor_q, out);
    if (means->parsed()) return cmd_means(means_args, out);
    if (qc->parsed()) return cmd_qc(qc_fn, qc_a, qc_b, qc_q, qc_samples, qc_tol, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedExponentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace qcbounds
