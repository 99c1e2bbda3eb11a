#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcbounds/error.hpp"
#include "qcbounds/means.hpp"
#include "qcbounds/quadrature.hpp"
#include "test_support.hpp"

using namespace qcbounds;

TEST_CASE("mean examples") {
  CHECK(arithmetic(1.0, 3.0) == 2.0);
  CHECK(weighted_arithmetic(1.0, 3.0, 0.25) == 2.5);
  CHECK(std::abs(harmonic(1.0, 2.0) - 4.0 / 3.0) <= 1e-15);
  CHECK(std::abs(weighted_harmonic(1.0, 2.0, 0.5) - 4.0 / 3.0) <= 1e-15);
  CHECK(std::abs(logarithmic(1.0, 2.0) - 1.0 / std::numbers::ln2) <= 1e-15);
  CHECK(std::abs(n_logarithmic(0.0, 1.0, 2) - std::sqrt(1.0 / 3.0)) <= 1e-15);
  CHECK(std::abs(n_logarithmic_power(0.0, 1.0, 2) - 1.0 / 3.0) <= 1e-15);
  CHECK(n_logarithmic(-2.0, -1.0, 3) < 0.0);
}

TEST_CASE("mean domain errors name the mean") {
  CHECK_THROWS_AS(harmonic(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(logarithmic(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(logarithmic(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(inverse_logarithmic(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(n_logarithmic(1.0, 1.0, 2), DomainError);
  try {
    logarithmic(-1.0, 2.0);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("logarithmic") != std::string::npos);
  }
}

TEST_CASE("logarithmic mean near the diagonal") {
  for (double a : {1e-3, 0.7, 5.0, 1e4}) {
    for (double rel : {1e-9, 1e-12, 1e-15}) {
      const double b = a * (1.0 + rel);
      const double L = logarithmic(a, b);
      CHECK(L >= a);
      CHECK(L <= b);
      // L lies within the geometric and arithmetic means
      CHECK(std::abs(L - 0.5 * (a + b)) <= 1e-14 * a);
    }
  }
  // continuity across the series switch
  const double a = 3.0;
  const double lo = logarithmic(a, a * (1.0 + 0.99e-8));
  const double hi = logarithmic(a, a * (1.0 + 1.01e-8));
  CHECK(std::abs(hi - lo) <= 1e-9 * a);
}

TEST_CASE("mean-value identities") {
  testing::Sampler s(31);
  for (int n = 2; n <= 6; ++n) {
    const auto f = lookup_function("pow:" + std::to_string(n));
    for (int i = 0; i < 20; ++i) {
      const double a = s.uniform(-2.0, 2.0);
      const double b = a + s.uniform(0.1, 2.0);
      const Interval iv(a, b);
      const double mean = reference_integral(f, iv, 1e-12, IntegrationPath::Adaptive).value / iv.width();
      CHECK(std::abs(n_logarithmic_power(a, b, n) - mean) <= 1e-12 * std::max(1.0, std::abs(mean)));
    }
  }
  const auto recip = lookup_function("recip");
  for (int i = 0; i < 20; ++i) {
    const double a = s.uniform(0.1, 3.0);
    const double b = a + s.uniform(0.1, 2.0);
    const Interval iv(a, b);
    const double mean = reference_integral(recip, iv, 1e-12, IntegrationPath::Adaptive).value / iv.width();
    CHECK(std::abs(inverse_logarithmic(a, b) - mean) <= 1e-12);
    CHECK(std::abs(1.0 / logarithmic(a, b) - mean) <= 1e-12);
  }
}

TEST_CASE("proposition examples") {
  const auto p1 = proposition_bound(Proposition::P1, {0.0, 1.0, 2}, make_params(0.5, 0.0, 1.0));
  CHECK(std::abs(p1.lhs - 1.0 / 12.0) <= 1e-15);
  CHECK(std::abs(p1.bound - 0.5) <= 1e-15);
  CHECK(p1.qc_holds);

  const auto p3 = proposition_bound(Proposition::P3, {1.0, 2.0, 2}, make_params(0.5, 1.0, 1.0));
  CHECK(std::abs(p3.lhs - (0.75 - std::numbers::ln2)) <= 1e-15);
  CHECK(std::abs(p3.bound - 0.25) <= 1e-15);
  CHECK(p3.slack > 0.0);

  CHECK_THROWS_AS(proposition_bound(Proposition::P1, {0.0, 1.0, 1}, make_params(0.5, 0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(proposition_bound(Proposition::P3, {-1.0, 2.0, 2}, make_params(0.5, 0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(proposition_bound(Proposition::P4, {-2.0, -1.0, 2}, make_params(0.5, 0.0, 2.0)), DomainError);
  CHECK_THROWS_AS(proposition_bound(Proposition::P2, {0.0, 1.0, 2}, make_params(0.5, 0.0, 1.0)),
                  UnsupportedExponentError);
  CHECK(parse_proposition("P2") == Proposition::P2);
  CHECK_FALSE(parse_proposition("P5").has_value());
}

TEST_CASE("proposition and theorem paths agree") {
  const double grid[] = {0.0, 0.25, 1.0 / 3.0, 0.5, 1.0};
  struct Case {
    Proposition which;
    PropositionInputs inputs;
    double qs[3];
  };
  const Case cases[] = {
      {Proposition::P1, {-1.0, 2.0, 3}, {1.0, 1.5, 2.0}},
      {Proposition::P1, {0.5, 2.0, 4}, {1.0, 1.5, 2.0}},
      {Proposition::P2, {-1.0, 2.0, 2}, {1.5, 2.0, 3.0}},
      {Proposition::P2, {0.0, 1.0, 5}, {1.5, 2.0, 3.0}},
      {Proposition::P3, {1.0, 2.0, 2}, {1.0, 1.5, 2.0}},
      {Proposition::P3, {-3.0, -1.0, 2}, {1.0, 1.5, 2.0}},
      {Proposition::P4, {0.5, 3.0, 2}, {1.5, 2.0, 3.0}},
  };
  for (const auto& c : cases) {
    for (double alpha : grid) {
      for (double lambda : grid) {
        for (double q : c.qs) {
          const auto r = proposition_bound(c.which, c.inputs, make_params(alpha, lambda, q));
          CAPTURE(to_string(c.which));
          CAPTURE(alpha);
          CAPTURE(lambda);
          CAPTURE(q);
          const double scale = std::max(1.0, std::abs(r.bound));
          CHECK(std::abs(r.bound - r.generic_bound) <= 1e-12 * scale);
          CHECK(std::abs(r.lhs - r.generic_lhs) <= 1e-12 * std::max(1.0, std::abs(r.lhs)));
          CHECK(r.qc_holds);
          CHECK(r.lhs <= r.bound + 1e-9);
        }
      }
    }
  }
}
