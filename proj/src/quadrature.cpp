#include "qcbounds/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qcbounds/error.hpp"

namespace qcbounds {

namespace {

// Kronrod abscissae; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double error;
};

Panel gauss_kronrod15(const RealFn& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = g(center - dx) + g(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

// Neumaier-compensated accumulator.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double rule_value(const FunctionSpec& f, const Interval& iv, const RuleParams& params) {
  require_domain(f, iv);
  const double alpha = params.alpha();
  const double lambda = params.lambda();
  const double node = alpha * iv.a() + (1.0 - alpha) * iv.b();
  return lambda * (alpha * f.f(iv.a()) + (1.0 - alpha) * f.f(iv.b())) + (1.0 - lambda) * f.f(node);
}

QuadResult adaptive_integral(const RealFn& g, double lo, double hi, double tol,
                             std::span<const double> breakpoints, long max_evals) {
  if (!(lo <= hi)) {
    throw ValidationError("interval", "adaptive_integral requires lo <= hi");
  }
  if (lo == hi) {
    return {};
  }
  const double total = hi - lo;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::vector<double> edges{lo};
  std::vector<double> inner(breakpoints.begin(), breakpoints.end());
  std::sort(inner.begin(), inner.end());
  for (double x : inner) {
    if (x > edges.back() && x < hi) edges.push_back(x);
  }
  edges.push_back(hi);

  // Depth-first, left to right, so the result is independent of anything but the inputs.
  std::vector<std::pair<double, double>> stack;
  for (std::size_t i = edges.size() - 1; i > 0; --i) stack.emplace_back(edges[i - 1], edges[i]);

  Accumulator value;
  Accumulator error;
  long evals = 0;
  while (!stack.empty()) {
    auto [left, right] = stack.back();
    stack.pop_back();
    const Panel panel = gauss_kronrod15(g, left, right);
    evals += 15;
    const double width = right - left;
    const double allowed = std::max(tol * width / total, 10.0 * eps * std::abs(panel.kronrod));
    const double mid = 0.5 * (left + right);
    const bool cannot_split = !(mid > left && mid < right) ||
                              width <= 8.0 * eps * std::max(std::abs(left), std::abs(right));
    if (panel.error <= allowed || cannot_split) {
      value.add(panel.kronrod);
      error.add(panel.error);
      continue;
    }
    if (evals >= max_evals) {
      Accumulator best = value;
      best.add(panel.kronrod);
      for (const auto& [l, r] : stack) best.add(gauss_kronrod15(g, l, r).kronrod);
      throw ConvergenceError("adaptive integration did not converge within " + std::to_string(max_evals) +
                                 " evaluations",
                             best.value(), error.value() + panel.error);
    }
    stack.emplace_back(mid, right);
    stack.emplace_back(left, mid);
  }
  return {value.value(), error.value(), evals};
}

QuadResult reference_integral(const FunctionSpec& f, const Interval& iv, double tol, IntegrationPath path) {
  if (!(tol >= 1e-13 && tol <= 1e-3)) {
    throw ValidationError("tol", "integrator tolerance must lie in [1e-13, 1e-3]");
  }
  require_domain(f, iv);
  if (path == IntegrationPath::Automatic && f.has_antiderivative()) {
    return {f.antiderivative(iv.b()) - f.antiderivative(iv.a()), 0.0, 2};
  }
  return adaptive_integral(f.f, iv.a(), iv.b(), tol, f.kinks);
}

double signed_error(const FunctionSpec& f, const Interval& iv, const RuleParams& params, double tol) {
  const double rule = rule_value(f, iv, params);
  const double mean = reference_integral(f, iv, tol).value / iv.width();
  return rule - mean;
}

double true_error(const FunctionSpec& f, const Interval& iv, const RuleParams& params, double tol) {
  return std::abs(signed_error(f, iv, params, tol));
}

IdentitySides lemma_identity_sides(const FunctionSpec& f, const Interval& iv, const RuleParams& params,
                                   double tol) {
  const double a = iv.a();
  const double b = iv.b();
  const double width = iv.width();
  const double left_knot = params.left_knot();
  const double node = params.node_t();
  const double right_knot = params.right_knot();

  std::vector<double> kinks_t;
  for (double k : f.kinks) {
    if (iv.contains(k)) kinks_t.push_back((k - a) / width);
  }

  const auto first = [&](double t) { return (t - left_knot) * f.fprime(t * b + (1.0 - t) * a); };
  const auto second = [&](double t) { return (t - right_knot) * f.fprime(t * b + (1.0 - t) * a); };
  // Each piece gets half the budget after undoing the (b - a) scale.
  const double piece_tol = std::max(0.5 * tol / width, 1e-16);
  const double i1 = adaptive_integral(first, 0.0, node, piece_tol, kinks_t).value;
  const double i2 = adaptive_integral(second, node, 1.0, piece_tol, kinks_t).value;

  IdentitySides sides;
  sides.lhs = signed_error(f, iv, params, tol);
  sides.rhs = width * (i1 + i2);
  return sides;
}

double lemma_identity_residual(const FunctionSpec& f, const Interval& iv, const RuleParams& params, double tol) {
  const auto sides = lemma_identity_sides(f, iv, params, tol);
  return std::abs(sides.lhs - sides.rhs);
}

}  // namespace qcbounds
