#include "qcbounds/report_io.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <set>

#include "qcbounds/error.hpp"

namespace qcbounds {

using nlohmann::json;

namespace {

std::string field(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

double real_from(const json& j, const std::string& name) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_real(j.get<std::string>(), name);
  throw ValidationError(name, name + " entries must be numbers or fraction strings");
}

std::vector<double> grid_from(const json& j, const std::string& name) {
  if (!j.is_array()) throw ValidationError(name, name + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(real_from(v, name));
  return out;
}

std::pair<double, double> pair_from(const json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 2) throw ValidationError(name, name + " entries must be [x, y] pairs");
  return {real_from(j[0], name), real_from(j[1], name)};
}

json interval_json(const Interval& iv) { return json::array({iv.a(), iv.b()}); }

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
  out << kCsvHeader << '\n';
  for (const auto& r : result.reports) {
    out << r.function << ',' << format_real(r.interval.a()) << ',' << format_real(r.interval.b()) << ','
        << format_real(r.alpha) << ',' << format_real(r.lambda) << ',' << format_real(r.q) << ','
        << to_string(r.regime) << ',';
    if (r.qc) out << (r.qc->holds ? "true" : "false");
    out << ',' << field(r.true_error);
    for (const char* label : {"thm21", "thm22", "thm23", "base_12", "base_13", "base_14", "base_15"}) {
      out << ',' << field(r.bound(label).value);
    }
    out << ',' << field(r.theorem_slack_min()) << ',' << to_string(r.theorem_verdict()) << '\n';
  }
}

json to_json(const BoundReport& r) {
  json j;
  j["function"] = r.function;
  j["interval"] = interval_json(r.interval);
  j["alpha"] = r.alpha;
  j["lambda"] = r.lambda;
  j["q"] = r.q;
  j["regime"] = std::string(to_string(r.regime));
  if (r.qc) {
    j["qc"] = {{"holds", r.qc->holds},
               {"worst_violation", r.qc->worst_violation},
               {"valley_point", optional_number(r.qc->valley_point)},
               {"samples", r.qc->samples}};
  } else {
    j["qc"] = nullptr;
  }
  j["true_error"] = optional_number(r.true_error);
  json bounds = json::object();
  for (const auto& e : r.bounds) {
    json b;
    b["value"] = optional_number(e.value);
    b["slack"] = optional_number(e.slack);
    b["verdict"] = std::string(to_string(e.verdict));
    if (!e.reason.empty()) b["reason"] = e.reason;
    bounds[e.label] = b;
  }
  j["bounds"] = bounds;
  j["slack_min"] = optional_number(r.theorem_slack_min());
  j["verdict"] = std::string(to_string(r.theorem_verdict()));
  if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
  return j;
}

json to_json(const CorollaryReport& c) {
  return {{"id", std::string(to_string(c.id))},
          {"alpha", c.alpha},
          {"lambda", c.lambda},
          {"q", c.q},
          {"printed", c.printed},
          {"printed_literal", optional_number(c.printed_literal)},
          {"general", c.general},
          {"ratio", c.ratio},
          {"expected_ratio", c.expected_ratio},
          {"documented_discrepancy", c.documented_discrepancy},
          {"agrees", c.agrees}};
}

json to_json(const SummaryStats& s) {
  json j;
  j["reports"] = s.reports;
  j["skipped_tuples"] = s.skipped_tuples;
  json counts = json::object();
  for (const auto& [label, c] : s.per_bound) {
    counts[label] = {{"SOUND", c.sound},
                     {"VIOLATION", c.violation},
                     {"HYPOTHESIS_UNMET", c.hypothesis_unmet},
                     {"SKIPPED", c.skipped}};
  }
  j["verdict_counts"] = counts;
  j["theorem_violations"] = s.theorem_violations();
  if (s.min_slack) {
    const auto& w = *s.min_slack;
    j["min_slack"] = {{"slack", w.slack},         {"bound", w.label}, {"function", w.function},
                      {"interval", interval_json(w.interval)}, {"alpha", w.alpha},
                      {"lambda", w.lambda},       {"q", w.q}};
  } else {
    j["min_slack"] = nullptr;
  }
  j["corollaries"] = json::array();
  for (const auto& c : s.corollaries) j["corollaries"].push_back(to_json(c));
  return j;
}

json to_json(const SweepResult& result) {
  json j;
  j["reports"] = json::array();
  for (const auto& r : result.reports) j["reports"].push_back(to_json(r));
  j["summary"] = to_json(result.summary);
  return j;
}

json to_json(const IdentityResult& result) {
  json j;
  j["max_residual"] = result.max_residual;
  j["failed_rows"] = result.failed_rows;
  j["rows"] = json::array();
  for (const auto& row : result.rows) {
    json r = {{"function", row.function},
              {"interval", interval_json(row.interval)},
              {"alpha", row.alpha},
              {"lambda", row.lambda},
              {"residual", optional_number(row.residual)}};
    if (!row.skip_reason.empty()) r["skip_reason"] = row.skip_reason;
    j["rows"].push_back(r);
  }
  j["hermite_hadamard"] = json::array();
  for (const auto& hh : result.hermite_hadamard) {
    j["hermite_hadamard"].push_back({{"function", hh.function},
                                     {"interval", interval_json(hh.interval)},
                                     {"midpoint_value", hh.midpoint_value},
                                     {"mean_value", hh.mean_value},
                                     {"endpoint_average", hh.endpoint_average},
                                     {"holds", hh.holds}});
  }
  j["hermite_hadamard_holds"] = result.hermite_hadamard_holds;
  return j;
}

SweepConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config", "config must be a JSON object");
  static const std::set<std::string> known = {
      "functions",     "intervals",      "alpha_grid", "lambda_grid", "q_grid", "extra_points", "random_points",
      "seed",          "tol_violation",  "integrator_tol", "qc_samples", "qc_tol", "threads"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw ValidationError(key, "unknown config key '" + key + "'");
  }
  SweepConfig c = SweepConfig::defaults();
  try {
    if (j.contains("functions")) c.functions = j.at("functions").get<std::vector<std::string>>();
    if (j.contains("intervals")) {
      c.intervals.clear();
      for (const auto& iv : j.at("intervals")) {
        const auto [a, b] = pair_from(iv, "intervals");
        c.intervals.emplace_back(a, b);
      }
    }
    if (j.contains("alpha_grid")) c.alpha_grid = grid_from(j.at("alpha_grid"), "alpha_grid");
    if (j.contains("lambda_grid")) c.lambda_grid = grid_from(j.at("lambda_grid"), "lambda_grid");
    if (j.contains("q_grid")) c.q_grid = grid_from(j.at("q_grid"), "q_grid");
    if (j.contains("extra_points")) {
      c.extra_points.clear();
      for (const auto& p : j.at("extra_points")) c.extra_points.push_back(pair_from(p, "extra_points"));
    }
    if (j.contains("random_points")) c.random_points = j.at("random_points").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tol_violation")) c.tol_violation = real_from(j.at("tol_violation"), "tol_violation");
    if (j.contains("integrator_tol")) c.integrator_tol = real_from(j.at("integrator_tol"), "integrator_tol");
    if (j.contains("qc_samples")) c.qc_samples = j.at("qc_samples").get<int>();
    if (j.contains("qc_tol")) c.qc_tol = real_from(j.at("qc_tol"), "qc_tol");
    if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
  } catch (const json::exception& e) {
    throw ValidationError("config", std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("config", "cannot parse '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

}  // namespace qcbounds
