#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcbounds/cli.hpp"

using namespace qcbounds;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "qcbounds_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("bound subcommand") {
  auto r = run({"bound", "--fn", "pow:2", "--a", "0", "--b", "1", "--alpha", "1/2", "--lambda", "1/3", "--q", "1"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "thm21"));
  CHECK(contains(r.out, "thm21         0.27777777777777"));
  CHECK(contains(r.out, "regime        R1"));
  CHECK(contains(r.out, "n/a"));

  r = run({"bound", "--fn", "pow:2", "--a", "0", "--b", "1", "--alpha", "0.5", "--lambda", "0.3333333333", "--q", "2"});
  CHECK(r.code == kExitOk);
  for (const char* key : {"true_error", "thm21", "thm22", "thm23", "regime", "A ", "B ", "C "}) {
    CHECK(contains(r.out, key));
  }

  r = run({"bound", "--fn", "pow:3", "--a", "-1", "--b", "2"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"bound", "--nope", "1"}).code == kExitUsage);
  auto r = run({"bound", "--fn", "recip", "--a", "-1", "--b", "1"});
  CHECK(r.code == kExitUsage);
  CHECK(contains(r.err, "error: "));
  r = run({"bound", "--alpha", "2"});
  CHECK(r.code == kExitUsage);
  CHECK(contains(r.err, "alpha out of range"));
  CHECK(run({"bound", "--a", "1/0"}).code == kExitUsage);
  CHECK(run({"means", "--prop", "P2", "--q", "1"}).code == kExitUsage);
  CHECK(run({"corollaries", "--q", "1"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("means subcommand") {
  const auto r = run({"means", "--prop", "P3", "--a", "1", "--b", "2", "--alpha", "0.5", "--lambda", "1", "--q", "1"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "lhs           0.0568528"));
  CHECK(contains(r.out, "bound         0.25"));
  CHECK(contains(r.out, "slack"));
}

TEST_CASE("qc subcommand") {
  auto r = run({"qc", "--fn", "recip", "--a", "1", "--b", "2", "--q", "2"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "holds         true"));
  r = run({"qc", "--fn", "log", "--a", "1", "--b", "2", "--q", "1", "--samples", "2"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("corollaries subcommand") {
  const auto r = run({"corollaries"});
  CHECK(r.code == kExitOk);
  for (const char* id : {"21-q1", "21-simpson", "21-mid", "21-trap", "22-simpson", "22-mid", "22-trap", "23-simpson",
                         "23-mid", "23-trap"}) {
    CHECK(contains(r.out, id));
  }
}

TEST_CASE("identity subcommand") {
  const auto dir = scratch_dir();
  const auto json = (dir / "identity.json").string();
  const auto r = run({"identity", "--grid", "default", "--json", json});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "PASS"));
  std::ifstream in(json);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.contains("max_residual"));
  CHECK(run({"identity", "--grid", (dir / "missing.json").string()}).code == kExitUsage);
}

TEST_CASE("sweep subcommand writes CSV and JSON") {
  const auto dir = scratch_dir();
  const auto config = dir / "config.json";
  {
    std::ofstream out(config);
    out << R"({"functions": ["pow:2", "recip"], "intervals": [[1, 2]], "alpha_grid": [0, "1/2"],
              "lambda_grid": ["1/3", 1], "q_grid": [1, 2], "extra_points": []})";
  }
  const auto csv = dir / "results.csv";
  const auto r = run({"sweep", "--config", config.string(), "--out", csv.string()});
  CHECK(r.code == kExitOk);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(contains(header, "function,interval_a,interval_b"));
  std::ifstream js(dir / "results.json");
  const auto j = nlohmann::json::parse(js);
  CHECK(j["reports"].size() == 2u * 4u * 2u);
  CHECK(j.contains("summary"));

  std::ofstream bad(dir / "bad.json");
  bad << R"({"q_grid": []})";
  bad.close();
  CHECK(run({"sweep", "--config", (dir / "bad.json").string(), "--out", csv.string()}).code == kExitUsage);
}
