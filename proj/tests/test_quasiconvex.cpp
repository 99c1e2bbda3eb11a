#include <doctest.h>

#include <cmath>

#include "qcbounds/error.hpp"
#include "qcbounds/quasiconvex.hpp"
#include "test_support.hpp"

using namespace qcbounds;

TEST_CASE("monotone derivative powers hold") {
  const auto up = check_derivative_quasiconvex(lookup_function("pow:2"), Interval(0.0, 1.0), 1.0);
  CHECK(up.holds);
  REQUIRE(up.valley_point.has_value());
  CHECK(*up.valley_point == 0.0);
  CHECK(up.samples == kDefaultQcSamples);

  const auto down = check_derivative_quasiconvex(lookup_function("recip"), Interval(1.0, 2.0), 1.0);
  CHECK(down.holds);
  CHECK(*down.valley_point == 2.0);
  CHECK(down.worst_violation == 0.0);
}

TEST_CASE("interior maximum fails") {
  const auto bump = [](double x) { return -(x - 0.5) * (x - 0.5) + 1.0; };
  const Interval unit(0.0, 1.0);
  const auto fast = check_quasiconvex(bump, unit);
  CHECK_FALSE(fast.holds);
  CHECK(std::abs(fast.worst_violation - 0.25) <= 1e-12);
  const auto slow = brute_force_qc(bump, unit, 101);
  const auto fast_small = check_quasiconvex(bump, unit, 101);
  CHECK_FALSE(slow.holds);
  CHECK(std::abs(slow.worst_violation - fast_small.worst_violation) <= 1e-12);
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_qc([](double x) { return x * x; }, Interval(-1.0, 1.0), 61).holds);
  CHECK(brute_force_qc([](double x) { return std::exp(-x); }, Interval(-1.0, 1.0), 61).holds);
  CHECK_THROWS_AS(brute_force_qc([](double x) { return x; }, Interval(0.0, 1.0), 201), ValidationError);
  CHECK_THROWS_AS(check_quasiconvex([](double x) { return x; }, Interval(0.0, 1.0), 2), ValidationError);
  CHECK_THROWS_AS(check_quasiconvex([](double x) { return 1.0 / x; }, Interval(-1.0, 1.0), 3), DomainError);
}

TEST_CASE("absolute value kink is handled") {
  const auto v = check_derivative_quasiconvex(lookup_function("absshift:0.5"), Interval(0.0, 1.0), 2.0);
  CHECK(v.holds);
  // log has |f'| = 1/|x|, monotone on [1, 2]
  CHECK(check_derivative_quasiconvex(lookup_function("log"), Interval(1.0, 2.0), 1.5).holds);
  // |3x^2|^q on [-1, 2] has its valley at the grid point nearest 0
  const auto cubic = check_derivative_quasiconvex(lookup_function("pow:3"), Interval(-1.0, 2.0), 1.0);
  CHECK(cubic.holds);
  CHECK(std::abs(*cubic.valley_point) <= 3.0 / (kDefaultQcSamples - 1));
}

TEST_CASE("oracle equivalence on the corpus") {
  const Interval intervals[] = {Interval(0.0, 1.0), Interval(1.0, 2.0), Interval(-1.0, 2.0)};
  for (const auto& key : corpus_keys()) {
    const auto f = lookup_function(key);
    for (const auto& iv : intervals) {
      if (!f.valid_domain(iv)) continue;
      for (double q : {1.0, 1.5, 2.0, 3.0}) {
        const auto g = derivative_power_fn(f, q);
        for (int n : {3, 17, 60, 200}) {
          CAPTURE(key);
          CAPTURE(q);
          CAPTURE(n);
          const auto fast = check_quasiconvex(g, iv, n);
          const auto slow = brute_force_qc(g, iv, n);
          CHECK(fast.holds == slow.holds);
          CHECK(std::abs(fast.worst_violation - slow.worst_violation) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("oracle equivalence on random non-quasi-convex samples") {
  testing::Sampler s(9);
  for (int trial = 0; trial < 200; ++trial) {
    const double w1 = s.uniform(1.0, 12.0);
    const double w2 = s.uniform(1.0, 12.0);
    const double shift = s.uniform(-1.0, 1.0);
    const auto g = [=](double x) { return std::sin(w1 * x + shift) + 0.5 * std::cos(w2 * x); };
    const int n = s.integer(3, 80);
    const auto fast = check_quasiconvex(g, Interval(0.0, 1.0), n);
    const auto slow = brute_force_qc(g, Interval(0.0, 1.0), n);
    REQUIRE(fast.holds == slow.holds);
    REQUIRE(std::abs(fast.worst_violation - slow.worst_violation) <= 1e-12);
  }
}

TEST_CASE("monotone and convex samples always hold") {
  testing::Sampler s(13);
  for (int trial = 0; trial < 200; ++trial) {
    const double k = s.uniform(0.1, 5.0);
    const double c = s.uniform(-2.0, 2.0);
    const double sign = s.uniform() < 0.5 ? -1.0 : 1.0;
    const Interval iv(-1.0, 1.5);
    CHECK(check_quasiconvex([=](double x) { return sign * std::exp(k * x); }, iv).holds);
    CHECK(check_quasiconvex([=](double x) { return k * (x - c) * (x - c) + std::abs(x - c); }, iv).holds);
  }
}

TEST_CASE("holds iff violation within tolerance") {
  const auto g = [](double x) { return x < 0.5 ? 1.0 - x : 0.5 + 1e-6 * std::sin(40.0 * x); };
  for (double tol : {1e-10, 1e-8, 1e-5}) {
    const auto v = check_quasiconvex(g, Interval(0.0, 1.0), 501, tol);
    CHECK(v.holds == (v.worst_violation <= tol));
  }
}
