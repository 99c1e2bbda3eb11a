#include "qcbounds/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcbounds/error.hpp"
#include "qcbounds/quadrature.hpp"

namespace qcbounds {

namespace {

// sign(x) |x|^e. Branch conditions only guarantee non-negative bases up to
// rounding, and the odd extension keeps the seams continuous.
double signed_pow(double x, double e) { return std::copysign(std::pow(std::abs(x), e), x); }

double root(double x, double q) { return q == 1.0 ? x : std::pow(x, 1.0 / q); }

double require_p(const RuleParams& params, const char* what) {
  if (!params.p()) {
    throw UnsupportedExponentError(std::string(what) + " requires q > 1");
  }
  return *params.p();
}

SupWitness sup_over(const FunctionSpec& f, std::vector<double> candidates, double q) {
  std::sort(candidates.begin(), candidates.end());
  SupWitness w;
  w.value = -1.0;
  for (double x : candidates) {
    const double v = derivative_power(f, x, q);
    if (v > w.value) {
      w.value = v;
      w.arg = x;
    }
  }
  w.candidates = std::move(candidates);
  return w;
}

double interior_node(const Interval& iv, double alpha) { return alpha * iv.a() + (1.0 - alpha) * iv.b(); }

struct HolderBracket {
  double left_eps;
  double right_eps;
};

HolderBracket holder_eps(const Epsilons& e, Regime regime) {
  switch (regime) {
    case Regime::R1:
      return {e.eps1, e.eps3};
    case Regime::R2:
      return {e.eps1, e.eps4};
    case Regime::R3:
      return {e.eps2, e.eps3};
  }
  return {e.eps1, e.eps3};
}

}  // namespace

GammaUpsilon gamma_upsilon(const RuleParams& params) noexcept {
  const double a = params.alpha();
  const double l = params.lambda();
  const double al = a * l;
  const double one_minus_a = 1.0 - a;
  const double right = 1.0 - l * one_minus_a;
  GammaUpsilon g;
  g.gamma1 = one_minus_a * (al - one_minus_a / 2.0);
  g.gamma2 = al * al - g.gamma1;
  g.upsilon1 = (1.0 - one_minus_a * one_minus_a) / 2.0 - a * right;
  g.upsilon2 = (1.0 + one_minus_a * one_minus_a) / 2.0 - (l + 1.0) * one_minus_a * right;
  return g;
}

Epsilons epsilons(const RuleParams& params) {
  const double p = require_p(params, "epsilons");
  const double a = params.alpha();
  const double l = params.lambda();
  const double al = a * l;
  const double lw = l * (1.0 - a);
  const double e = p + 1.0;
  Epsilons eps;
  eps.eps1 = std::pow(al, e) + signed_pow(1.0 - a - al, e);
  eps.eps2 = std::pow(al, e) - signed_pow(al - 1.0 + a, e);
  eps.eps3 = std::pow(lw, e) + signed_pow(a - lw, e);
  eps.eps4 = std::pow(lw, e) - signed_pow(lw - a, e);
  return eps;
}

KernelMoments closed_form_moments(const RuleParams& params) noexcept {
  const auto g = gamma_upsilon(params);
  KernelMoments m;
  m.first = params.left_knot() <= params.node_t() ? g.gamma2 : g.gamma1;
  m.second = params.right_knot() >= params.node_t() ? g.upsilon2 : g.upsilon1;
  return m;
}

KernelMoments moment_integral_check(const RuleParams& params) {
  const double left = params.left_knot();
  const double node = params.node_t();
  const double right = params.right_knot();
  const std::array<double, 1> left_break{left};
  const std::array<double, 1> right_break{right};
  KernelMoments m;
  m.first = adaptive_integral([left](double t) { return std::abs(t - left); }, 0.0, node, 1e-15, left_break).value;
  m.second =
      adaptive_integral([right](double t) { return std::abs(t - right); }, node, 1.0, 1e-15, right_break).value;
  return m;
}

double power_mean_coefficient(const RuleParams& params, Regime regime) {
  const auto g = gamma_upsilon(params);
  switch (regime) {
    case Regime::R1:
      return g.gamma2 + g.upsilon2;
    case Regime::R2:
      return g.gamma2 + g.upsilon1;
    case Regime::R3:
      return g.gamma1 + g.upsilon2;
  }
  return g.gamma2 + g.upsilon2;
}

double power_mean_coefficient(const RuleParams& params) {
  return power_mean_coefficient(params, classify_regime(params));
}

double BoundValue::component(std::string_view label) const {
  for (const auto& c : components) {
    if (c.label == label) return c.value;
  }
  throw std::out_of_range("no component '" + std::string(label) + "'");
}

SupWitness sup_A(const FunctionSpec& f, const Interval& iv, double q) {
  require_domain(f, iv);
  return sup_over(f, {iv.a(), iv.b()}, q);
}

std::pair<SupWitness, SupWitness> sup_B_C(const FunctionSpec& f, const Interval& iv, const RuleParams& params) {
  require_domain(f, iv);
  const double node = interior_node(iv, params.alpha());
  return {sup_over(f, {iv.a(), node}, params.q()), sup_over(f, {node, iv.b()}, params.q())};
}

double theorem21_value(double width, const RuleParams& params, double sup_a, Regime regime) {
  return width * power_mean_coefficient(params, regime) * root(sup_a, params.q());
}

double theorem22_value(double width, const RuleParams& params, double sup_a, Regime regime) {
  const double p = require_p(params, "Hölder bound");
  const double q = params.q();
  const auto [left_eps, right_eps] = holder_eps(epsilons(params), regime);
  const double bracket = std::pow(1.0 - params.alpha(), 1.0 / q) * std::pow(left_eps, 1.0 / p) +
                         std::pow(params.alpha(), 1.0 / q) * std::pow(right_eps, 1.0 / p);
  return width * std::pow(1.0 / (p + 1.0), 1.0 / p) * root(sup_a, q) * bracket;
}

double theorem23_value(double width, const RuleParams& params, double sup_b, double sup_c, Regime regime) {
  const double p = require_p(params, "Hölder bound");
  const double q = params.q();
  const auto [left_eps, right_eps] = holder_eps(epsilons(params), regime);
  const double bracket = std::pow(1.0 - params.alpha(), 1.0 / q) * root(sup_b, q) * std::pow(left_eps, 1.0 / p) +
                         std::pow(params.alpha(), 1.0 / q) * root(sup_c, q) * std::pow(right_eps, 1.0 / p);
  return width * std::pow(1.0 / (p + 1.0), 1.0 / p) * bracket;
}

BoundValue theorem21_bound(const FunctionSpec& f, const Interval& iv, const RuleParams& params) {
  const auto sup = sup_A(f, iv, params.q());
  const Regime regime = classify_regime(params);
  const auto g = gamma_upsilon(params);
  BoundValue out;
  out.value = theorem21_value(iv.width(), params, sup.value, regime);
  out.regime = regime;
  out.components = {{"gamma1", g.gamma1},
                    {"gamma2", g.gamma2},
                    {"upsilon1", g.upsilon1},
                    {"upsilon2", g.upsilon2},
                    {"coefficient", power_mean_coefficient(params, regime)},
                    {"A", sup.value},
                    {"A_arg", sup.arg}};
  return out;
}

BoundValue theorem22_bound(const FunctionSpec& f, const Interval& iv, const RuleParams& params) {
  require_p(params, "theorem22_bound");
  const auto sup = sup_A(f, iv, params.q());
  const Regime regime = classify_regime(params);
  const auto e = epsilons(params);
  BoundValue out;
  out.value = theorem22_value(iv.width(), params, sup.value, regime);
  out.regime = regime;
  out.components = {{"eps1", e.eps1}, {"eps2", e.eps2}, {"eps3", e.eps3}, {"eps4", e.eps4},
                    {"p", *params.p()}, {"A", sup.value}, {"A_arg", sup.arg}};
  return out;
}

BoundValue theorem23_bound(const FunctionSpec& f, const Interval& iv, const RuleParams& params) {
  require_p(params, "theorem23_bound");
  const auto [b_sup, c_sup] = sup_B_C(f, iv, params);
  const Regime regime = classify_regime(params);
  const auto e = epsilons(params);
  BoundValue out;
  out.value = theorem23_value(iv.width(), params, b_sup.value, c_sup.value, regime);
  out.regime = regime;
  out.components = {{"eps1", e.eps1},   {"eps2", e.eps2},       {"eps3", e.eps3},
                    {"eps4", e.eps4},   {"p", *params.p()},     {"B", b_sup.value},
                    {"B_arg", b_sup.arg}, {"C", c_sup.value},   {"C_arg", c_sup.arg},
                    {"node", interior_node(iv, params.alpha())}};
  return out;
}

std::vector<BaselineBound> baseline_bounds(const FunctionSpec& f, const Interval& iv, double q) {
  require_domain(f, iv);
  if (!(q >= 1.0)) {
    throw ValidationError("q", "q out of range, need q >= 1");
  }
  const double width = iv.width();
  const double mid = iv.midpoint();
  const double fa = abs_derivative(f, iv.a());
  const double fb = abs_derivative(f, iv.b());
  const double fm = abs_derivative(f, mid);
  const auto pw = [q](double x) { return q == 1.0 ? x : std::pow(x, q); };
  // Split sups around the midpoint, already raised to 1/q.
  const double right_half = root(std::max(pw(fm), pw(fb)), q);
  const double left_half = root(std::max(pw(fm), pw(fa)), q);
  const double endpoint_sup = root(std::max(pw(fa), pw(fb)), q);

  std::vector<BaselineBound> out;
  {
    BoundValue v;
    v.value = width / 4.0 * std::max(fa, fb);
    v.components = {{"sup", std::max(fa, fb)}};
    out.push_back({"base_12", v, ""});
  }
  if (q > 1.0) {
    const double p = q / (q - 1.0);
    BoundValue v13;
    v13.value = width / (2.0 * std::pow(p + 1.0, p / (p - 1.0))) * endpoint_sup;
    v13.components = {{"p", p}, {"sup_root", endpoint_sup}};
    out.push_back({"base_13", v13, ""});

    BoundValue v14;
    v14.value = width / (4.0 * std::pow(p + 1.0, 1.0 / p)) * (right_half + left_half);
    v14.components = {{"p", p}, {"right_half", right_half}, {"left_half", left_half}};
    out.push_back({"base_14", v14, ""});
  } else {
    out.push_back({"base_13", std::nullopt, "needs q > 1"});
    out.push_back({"base_14", std::nullopt, "needs q > 1"});
  }
  {
    BoundValue v;
    v.value = width / 8.0 * (right_half + left_half);
    v.components = {{"right_half", right_half}, {"left_half", left_half}};
    out.push_back({"base_15", v, ""});
  }
  if (f.has_f4()) {
    double sup4 = 0.0;
    for (int i = 0; i < kSimpsonSamplePoints; ++i) {
      const double x = iv.a() + width * i / (kSimpsonSamplePoints - 1);
      sup4 = std::max(sup4, std::abs(f.f4(x)));
    }
    BoundValue printed;
    printed.value = sup4 / 2880.0 * width * width;
    printed.components = {{"f4_sup", sup4}};
    BoundValue standard;
    standard.value = sup4 / 2880.0 * std::pow(width, 4);
    standard.components = {{"f4_sup", sup4}};
    out.push_back({"simpson_classical_printed", printed, ""});
    out.push_back({"simpson_classical_standard", standard, ""});
  } else {
    out.push_back({"simpson_classical_printed", std::nullopt, "fourth derivative unavailable"});
    out.push_back({"simpson_classical_standard", std::nullopt, "fourth derivative unavailable"});
  }
  return out;
}

std::string_view to_string(CorollaryId id) noexcept {
  switch (id) {
    case CorollaryId::Thm21Q1:
      return "21-q1";
    case CorollaryId::Thm21Simpson:
      return "21-simpson";
    case CorollaryId::Thm21Midpoint:
      return "21-mid";
    case CorollaryId::Thm21Trapezoid:
      return "21-trap";
    case CorollaryId::Thm22Simpson:
      return "22-simpson";
    case CorollaryId::Thm22Midpoint:
      return "22-mid";
    case CorollaryId::Thm22Trapezoid:
      return "22-trap";
    case CorollaryId::Thm23Simpson:
      return "23-simpson";
    case CorollaryId::Thm23Midpoint:
      return "23-mid";
    case CorollaryId::Thm23Trapezoid:
      return "23-trap";
  }
  return "?";
}

std::vector<CorollaryId> all_corollaries() {
  return {CorollaryId::Thm21Q1,        CorollaryId::Thm21Simpson,   CorollaryId::Thm21Midpoint,
          CorollaryId::Thm21Trapezoid, CorollaryId::Thm22Simpson,   CorollaryId::Thm22Midpoint,
          CorollaryId::Thm22Trapezoid, CorollaryId::Thm23Simpson,   CorollaryId::Thm23Midpoint,
          CorollaryId::Thm23Trapezoid};
}

std::optional<CorollaryId> parse_corollary_id(std::string_view text) noexcept {
  for (auto id : all_corollaries()) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

CorollaryReport corollary_crosscheck(CorollaryId id, const FunctionSpec& f, const Interval& iv, double q,
                                     double free_alpha, double free_lambda) {
  require_domain(f, iv);
  CorollaryReport r;
  r.id = id;
  const double width = iv.width();
  const double fa = abs_derivative(f, iv.a());
  const double fb = abs_derivative(f, iv.b());
  const double fm = abs_derivative(f, iv.midpoint());

  double alpha = 0.5;
  double lambda = 0.0;
  switch (id) {
    case CorollaryId::Thm21Q1:
      alpha = free_alpha;
      lambda = free_lambda;
      q = 1.0;
      break;
    case CorollaryId::Thm21Simpson:
    case CorollaryId::Thm22Simpson:
    case CorollaryId::Thm23Simpson:
      lambda = 1.0 / 3.0;
      break;
    case CorollaryId::Thm21Midpoint:
    case CorollaryId::Thm22Midpoint:
    case CorollaryId::Thm23Midpoint:
      lambda = 0.0;
      break;
    case CorollaryId::Thm21Trapezoid:
    case CorollaryId::Thm22Trapezoid:
    case CorollaryId::Thm23Trapezoid:
      lambda = 1.0;
      break;
  }
  const RuleParams params = make_params(alpha, lambda, q);
  r.alpha = alpha;
  r.lambda = lambda;
  r.q = q;

  const auto pw = [q](double x) { return q == 1.0 ? x : std::pow(x, q); };
  const double sup_a = std::max(pw(fa), pw(fb));
  const double sup_left = std::max(pw(fm), pw(fa));
  const double sup_right = std::max(pw(fm), pw(fb));

  switch (id) {
    case CorollaryId::Thm21Q1: {
      const auto g = gamma_upsilon(params);
      double coef = 0.0;
      switch (classify_regime(params)) {
        case Regime::R1:
          coef = g.gamma2 + g.upsilon2;
          break;
        case Regime::R2:
          coef = g.gamma2 + g.upsilon1;
          break;
        case Regime::R3:
          coef = g.gamma1 + g.upsilon2;
          break;
      }
      r.printed = width * coef * std::max(fa, fb);
      r.general = theorem21_bound(f, iv, params).value;
      break;
    }
    case CorollaryId::Thm21Simpson:
      r.printed = width * (5.0 / 36.0) * root(sup_a, q);
      r.printed_literal = width * (5.0 / 36.0) * sup_a;
      r.general = theorem21_bound(f, iv, params).value;
      break;
    case CorollaryId::Thm21Midpoint:
    case CorollaryId::Thm21Trapezoid:
      r.printed = width / 4.0 * root(sup_a, q);
      r.printed_literal = width / 4.0 * sup_a;
      r.general = theorem21_bound(f, iv, params).value;
      break;
    case CorollaryId::Thm22Simpson: {
      const double p = require_p(params, "22-simpson");
      r.printed = width / 6.0 * std::pow((1.0 + std::pow(2.0, p + 1.0)) / (3.0 * (p + 1.0)), 1.0 / p) * root(sup_a, q);
      r.general = theorem22_bound(f, iv, params).value;
      break;
    }
    case CorollaryId::Thm22Midpoint:
    case CorollaryId::Thm22Trapezoid: {
      const double p = require_p(params, to_string(id).data());
      r.printed = width / 4.0 * std::pow(1.0 / (p + 1.0), 1.0 / p) * root(sup_a, q);
      r.general = theorem22_bound(f, iv, params).value;
      r.expected_ratio = 0.5;
      r.documented_discrepancy = true;
      break;
    }
    case CorollaryId::Thm23Simpson: {
      const double p = require_p(params, "23-simpson");
      r.printed = width / 12.0 * std::pow((1.0 + std::pow(2.0, p + 1.0)) / (3.0 * (p + 1.0)), 1.0 / p) *
                  (root(sup_left, q) + root(sup_right, q));
      r.general = theorem23_bound(f, iv, params).value;
      break;
    }
    case CorollaryId::Thm23Midpoint:
    case CorollaryId::Thm23Trapezoid: {
      const double p = require_p(params, to_string(id).data());
      r.printed = width / (4.0 * std::pow(p + 1.0, 1.0 / p)) * (root(sup_left, q) + root(sup_right, q));
      r.general = theorem23_bound(f, iv, params).value;
      break;
    }
  }
  if (r.general == 0.0) {
    r.ratio = r.printed == 0.0 ? 1.0 : INFINITY;
  } else {
    r.ratio = r.printed / r.general;
  }
  r.agrees = std::abs(r.ratio - r.expected_ratio) <= 1e-12;
  return r;
}

}  // namespace qcbounds
