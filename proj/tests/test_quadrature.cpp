#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcbounds/error.hpp"
#include "qcbounds/quadrature.hpp"
#include "test_support.hpp"

using namespace qcbounds;

namespace {

const Interval kUnit(0.0, 1.0);
const Interval kOneTwo(1.0, 2.0);
const Interval kWide(-1.0, 2.0);

}  // namespace

TEST_CASE("rule_value specializations") {
  const auto sq = lookup_function("pow:2");
  CHECK(rule_value(sq, kUnit, make_params(0.5, 1.0 / 3.0, 1.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rule_value(sq, kUnit, make_params(0.5, 0.0, 1.0)) == 0.25);
  CHECK(rule_value(lookup_function("recip"), kOneTwo, make_params(0.5, 1.0, 1.0)) == 0.75);
  CHECK_THROWS_AS(rule_value(lookup_function("recip"), kUnit, make_params(0.5, 1.0, 1.0)), DomainError);
}

TEST_CASE("reference_integral closed forms") {
  const auto sq = reference_integral(lookup_function("pow:2"), kUnit);
  CHECK(sq.value == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(sq.abs_err_est == 0.0);
  CHECK(sq.evals > 0);

  CHECK(std::abs(reference_integral(lookup_function("recip"), kOneTwo).value - std::numbers::ln2) <= 1e-16);

  const auto e = lookup_function("exp");
  for (auto path : {IntegrationPath::Automatic, IntegrationPath::Adaptive}) {
    const auto r = reference_integral(e, kUnit, 1e-12, path);
    CHECK(std::abs(r.value - (std::numbers::e - 1.0)) <= 1e-12);
    CHECK(r.abs_err_est >= 0.0);
    CHECK(r.evals > 0);
  }
}

TEST_CASE("adaptive path agrees with antiderivatives across the corpus") {
  for (const auto& key : corpus_keys()) {
    const auto f = lookup_function(key);
    for (const auto& iv : {kUnit, kOneTwo, kWide, Interval(0.3, 4.0)}) {
      if (!f.valid_domain(iv)) continue;
      for (double tol : {1e-12, 1e-8}) {
        CAPTURE(key);
        CAPTURE(tol);
        const double exact = reference_integral(f, iv, tol).value;
        const auto adaptive = reference_integral(f, iv, tol, IntegrationPath::Adaptive);
        CHECK(std::abs(adaptive.value - exact) <= 2.0 * tol);
      }
    }
  }
}

TEST_CASE("adaptive integral against the composite Simpson oracle") {
  const auto gauss = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
  const double oracle = testing::richardson_simpson(gauss, -1.0, 2.0, 20000);
  CHECK(std::abs(adaptive_integral(gauss, -1.0, 2.0, 1e-13).value - oracle) <= 1e-12);

  const auto kinked = [](double x) { return std::abs(x - 0.3) * std::exp(x); };
  const double left = testing::richardson_simpson(kinked, 0.0, 0.3, 4000);
  const double right = testing::richardson_simpson(kinked, 0.3, 1.0, 4000);
  const double breaks[] = {0.3};
  CHECK(std::abs(adaptive_integral(kinked, 0.0, 1.0, 1e-12, breaks).value - (left + right)) <= 1e-12);
}

TEST_CASE("adaptive integral edge cases") {
  const auto one = [](double) { return 1.0; };
  CHECK(adaptive_integral(one, 0.5, 0.5, 1e-12).value == 0.0);
  CHECK_THROWS_AS(adaptive_integral(one, 1.0, 0.0, 1e-12), ValidationError);
  CHECK_THROWS_AS(reference_integral(lookup_function("exp"), kUnit, 1e-2), ValidationError);
  CHECK_THROWS_AS(reference_integral(lookup_function("exp"), kUnit, 1e-14), ValidationError);

  // A jump without a breakpoint needs dozens of bisections to resolve.
  const auto step = [](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; };
  try {
    adaptive_integral(step, 0.0, 1.0, 1e-13, {}, 300);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& e) {
    CHECK(std::abs(e.best_estimate() - 2.0 / 3.0) <= 1e-3);
    CHECK(e.error_estimate() > 0.0);
  }
}

TEST_CASE("true_error examples") {
  const auto sq = lookup_function("pow:2");
  CHECK(std::abs(true_error(sq, kUnit, make_params(0.5, 0.0, 1.0)) - 1.0 / 12.0) <= 1e-15);
  CHECK(true_error(sq, kUnit, make_params(0.5, 1.0 / 3.0, 1.0)) <= 1e-15);
  CHECK(std::abs(true_error(lookup_function("recip"), kOneTwo, make_params(0.5, 1.0, 1.0)) -
                 (0.75 - std::numbers::ln2)) <= 1e-15);
}

TEST_CASE("Simpson parameters are exact on cubics") {
  const auto simpson = make_params(0.5, 1.0 / 3.0, 1.0);
  for (const auto& iv : {kUnit, kOneTwo, kWide}) {
    CHECK(true_error(lookup_function("pow:2"), iv, simpson) <= 1e-12);
    CHECK(true_error(lookup_function("pow:3"), iv, simpson) <= 1e-12);
  }
  testing::Sampler s(11);
  const auto affine = lookup_function("pow:1");
  for (int i = 0; i < 200; ++i) {
    // alpha = 1/2 gives symmetric weights, so any lambda is exact on affine f
    const auto params = make_params(0.5, s.uniform(), 1.0);
    CHECK(true_error(affine, kWide, params) <= 1e-12);
  }
}

TEST_CASE("kernel identity examples") {
  CHECK(lemma_identity_residual(lookup_function("pow:2"), kUnit, make_params(0.5, 1.0 / 3.0, 1.0)) <= 1e-10);
  CHECK(lemma_identity_residual(lookup_function("exp"), kUnit, make_params(0.3, 0.7, 1.0)) <= 1e-10);
  // alpha = 1: the first kernel integral is empty
  CHECK(lemma_identity_residual(lookup_function("pow:3"), kWide, make_params(1.0, 0.0, 1.0)) <= 1e-10);
  CHECK(lemma_identity_residual(lookup_function("pow:3"), kWide, make_params(0.0, 0.6, 1.0)) <= 1e-10);
}

TEST_CASE("kernel identity right-hand side against an independent composite rule") {
  const auto f = lookup_function("negexp");
  const Interval iv(-0.5, 1.5);
  const auto params = make_params(0.35, 0.6, 1.0);
  const double a = iv.a();
  const double b = iv.b();
  const double c = params.left_knot();
  const double node = params.node_t();
  const double d = params.right_knot();
  const auto first = [&](double t) { return (t - c) * f.fprime(t * b + (1 - t) * a); };
  const auto second = [&](double t) { return (t - d) * f.fprime(t * b + (1 - t) * a); };
  const double oracle_rhs =
      iv.width() * (testing::richardson_simpson(first, 0.0, node, 2000) +
                    testing::richardson_simpson(second, node, 1.0, 2000));
  const double oracle_lhs =
      rule_value(f, iv, params) - testing::richardson_simpson(f.f, a, b, 2000) / iv.width();
  const auto sides = lemma_identity_sides(f, iv, params);
  CHECK(std::abs(sides.rhs - oracle_rhs) <= 1e-11);
  CHECK(std::abs(sides.lhs - oracle_lhs) <= 1e-11);
  CHECK(std::abs(oracle_lhs - oracle_rhs) <= 1e-10);
}

TEST_CASE("kernel identity residual over the corpus grid") {
  const double grid[] = {0.0, 0.25, 1.0 / 3.0, 0.5, 1.0};
  double worst = 0.0;
  for (const auto& key : corpus_keys()) {
    const auto f = lookup_function(key);
    for (const auto& iv : {kUnit, kOneTwo, kWide}) {
      if (!f.valid_domain(iv)) continue;
      for (double alpha : grid) {
        for (double lambda : grid) {
          worst = std::max(worst, lemma_identity_residual(f, iv, make_params(alpha, lambda, 1.0)));
        }
      }
    }
  }
  CHECK(worst <= 1e-9);
}
