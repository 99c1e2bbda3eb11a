#include "qcbounds/quasiconvex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qcbounds/error.hpp"

namespace qcbounds {

namespace {

double grid_point(const Interval& iv, int i, int n) {
  return i == n - 1 ? iv.b() : iv.a() + iv.width() * i / (n - 1);
}

std::vector<double> sample_grid(const RealFn& g, const Interval& iv, int n) {
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = grid_point(iv, i, n);
    const double v = g(x);
    if (!std::isfinite(v)) {
      throw DomainError("non-finite sample at x = " + format_real(x));
    }
    values[static_cast<std::size_t>(i)] = v;
  }
  return values;
}

void fill_valley(QCVerdict& verdict, const std::vector<double>& values, const Interval& iv, int n) {
  const auto it = std::min_element(values.begin(), values.end());
  verdict.valley_point = grid_point(iv, static_cast<int>(it - values.begin()), n);
}

}  // namespace

QCVerdict check_quasiconvex(const RealFn& g, const Interval& iv, int n_samples, double tol) {
  if (n_samples < 3) {
    throw ValidationError("n_samples", "quasi-convexity check needs at least 3 samples");
  }
  const auto values = sample_grid(g, iv, n_samples);
  const auto n = values.size();

  std::vector<double> suffix_min(n);
  suffix_min[n - 1] = values[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) suffix_min[i - 1] = std::min(values[i - 1], suffix_min[i]);

  double worst = 0.0;
  double prefix_min = values[0];
  for (std::size_t z = 1; z + 1 < n; ++z) {
    const double breach = values[z] - std::max(prefix_min, suffix_min[z + 1]);
    worst = std::max(worst, breach);
    prefix_min = std::min(prefix_min, values[z]);
  }

  QCVerdict verdict;
  verdict.worst_violation = worst;
  verdict.holds = worst <= tol;
  verdict.samples = n_samples;
  fill_valley(verdict, values, iv, n_samples);
  return verdict;
}

QCVerdict brute_force_qc(const RealFn& g, const Interval& iv, int n, double tol) {
  if (n < 3 || n > 200) {
    throw ValidationError("n", "brute-force quasi-convexity check needs 3 <= n <= 200");
  }
  const auto values = sample_grid(g, iv, n);
  double worst = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int z = x + 1; z < n; ++z) {
      for (int y = z + 1; y < n; ++y) {
        worst = std::max(worst, values[z] - std::max(values[x], values[y]));
      }
    }
  }
  QCVerdict verdict;
  verdict.worst_violation = worst;
  verdict.holds = worst <= tol;
  verdict.samples = n;
  fill_valley(verdict, values, iv, n);
  return verdict;
}

RealFn derivative_power_fn(const FunctionSpec& f, double q) {
  return [f, q](double x) {
    for (double k : f.kinks) {
      if (std::abs(x - k) < kKinkGuard) {
        x = k + kKinkGuard;
        break;
      }
    }
    return derivative_power(f, x, q);
  };
}

QCVerdict check_derivative_quasiconvex(const FunctionSpec& f, const Interval& iv, double q, int n_samples,
                                       double tol) {
  require_domain(f, iv);
  return check_quasiconvex(derivative_power_fn(f, q), iv, n_samples, tol);
}

}  // namespace qcbounds
