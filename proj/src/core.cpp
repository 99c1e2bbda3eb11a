#include "qcbounds/core.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "qcbounds/error.hpp"

namespace qcbounds {

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("interval", "interval endpoints must be finite");
  }
  if (!(a < b)) {
    throw ValidationError("interval",
                          "interval requires a < b, got [" + format_real(a) + ", " + format_real(b) + "]");
  }
}

RuleParams make_params(double alpha, double lambda, double q) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw ValidationError("alpha", "alpha out of range [0, 1]");
  }
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
    throw ValidationError("lambda", "lambda out of range [0, 1]");
  }
  if (!std::isfinite(q) || q < 1.0) {
    throw ValidationError("q", "q out of range, need q >= 1");
  }
  std::optional<double> p;
  if (q > 1.0) {
    p = q / (q - 1.0);
  }
  RuleParams params(alpha, lambda, q, p);
  // alpha*lambda + lambda*(1-alpha) = lambda <= 1
  if (params.left_knot() > params.right_knot() + 1e-15) {
    throw ValidationError("lambda", "inconsistent rule parameters");
  }
  return params;
}

RuleParams RuleParams::with_q(double q) const { return make_params(alpha_, lambda_, q); }

Regime classify_regime(const RuleParams& params) noexcept {
  const double left = params.left_knot();
  const double node = params.node_t();
  const double right = params.right_knot();
  // left <= right holds identically, so comparing node against the two knots suffices.
  if (left <= node) {
    return node <= right ? Regime::R1 : Regime::R2;
  }
  return Regime::R3;
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::R1:
      return "R1";
    case Regime::R2:
      return "R2";
    case Regime::R3:
      return "R3";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view s, const std::string& field, std::string_view original) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ValidationError(field, "cannot parse " + field + " from '" + std::string(original) + "'");
  }
  return value;
}

}  // namespace

double parse_real(std::string_view text, const std::string& field) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return parse_decimal(text, field, text);
  }
  const double num = parse_decimal(text.substr(0, slash), field, text);
  const double den = parse_decimal(text.substr(slash + 1), field, text);
  if (den == 0.0) {
    throw ValidationError(field, "zero denominator in " + field + " '" + std::string(text) + "'");
  }
  return num / den;
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string format_interval(const Interval& iv) {
  return "[" + format_real(iv.a()) + ", " + format_real(iv.b()) + "]";
}

}  // namespace qcbounds
