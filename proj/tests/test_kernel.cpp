#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "seczeros/errors.hpp"
#include "seczeros/kernel.hpp"

using sz::PowerTerm;
using sz::Real;

TEST_CASE("entropy endpoints and symmetry point") {
  CHECK(sz::entropy(0.0) == 0.0);
  CHECK(sz::entropy(1.0) == 0.0);
  CHECK(sz::entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // H(1/4) = (1/4)log 4 + (3/4)log(4/3)
  CHECK(sz::entropy(0.25) == doctest::Approx(0.56233514461880829).epsilon(1e-15));
}

TEST_CASE("entropy is symmetric about 1/2 and maximal there") {
  for (int i = 1; i < 1000; ++i) {
    double x = i / 1000.0;
    CHECK(sz::entropy(x) == doctest::Approx(sz::entropy(1.0 - x)).epsilon(1e-13));
    CHECK(sz::entropy(x) <= std::log(2.0) + 1e-15);
    CHECK(sz::entropy(x) > 0.0);
  }
}

TEST_CASE("exact binomials") {
  CHECK(sz::binomial(10, 3, 64).to_double() == 120.0);
  CHECK(sz::binomial(52, 5, 64).to_double() == 2598960.0);
  CHECK(sz::binomial(5, 0, 64).to_double() == 1.0);
  CHECK(sz::binomial(5, 5, 64).to_double() == 1.0);
  // C(60,30) = 118264581564861424, needs > 53 bits
  Real big = sz::binomial(60, 30, 128);
  CHECK((big - Real::parse("118264581564861424", 128)).is_zero());
}

TEST_CASE("entropy bound dominates log binomial") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      double lb = sz::log_binomial(n, k);
      CHECK(sz::log_binomial_upper(n, k) >= lb - 1e-9);
      // and is tight within the usual sqrt(n) polynomial factor
      if (n >= 4 && k > 0 && k < n) {
        CHECK(sz::log_binomial_upper(n, k) - lb <= std::log(static_cast<double>(n)));
      }
    }
  }
}

namespace {

double residual_ratio(const Real& lhs_coeff, std::int64_t lhs_degree,
                      const std::vector<PowerTerm>& rhs, const Real& x) {
  Real lhs = lhs_coeff * pow_si(x, lhs_degree);
  Real sum = Real::of(0.0, x.prec());
  for (const PowerTerm& t : rhs) sum += t.coeff * pow_si(x, t.degree);
  return (abs(lhs - sum) / lhs).to_double();
}

}  // namespace

TEST_CASE("positive_root: linear case returns the constant") {
  std::vector<PowerTerm> rhs;
  rhs.push_back({Real::of(7.5, 128), 0});
  Real x = sz::positive_root(Real::of(1.0, 128), 1, rhs);
  CHECK(x.to_double() == doctest::Approx(7.5).epsilon(1e-18));
}

TEST_CASE("positive_root: x^2 = x + 1 gives the golden ratio") {
  std::vector<PowerTerm> rhs;
  rhs.push_back({Real::of(1.0, 128), 1});
  rhs.push_back({Real::of(1.0, 128), 0});
  Real x = sz::positive_root(Real::of(1.0, 128), 2, rhs, 1e-30);
  CHECK(x.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-16));
  CHECK(residual_ratio(Real::of(1.0, 128), 2, rhs, x) <= 1e-30);
}

TEST_CASE("positive_root: reversed orientation 1 = x + x^2 gives 1/phi") {
  std::vector<PowerTerm> rhs;
  rhs.push_back({Real::of(1.0, 128), 1});
  rhs.push_back({Real::of(1.0, 128), 2});
  Real x = sz::positive_root(Real::of(1.0, 128), 0, rhs, 1e-25);
  CHECK(x.to_double() == doctest::Approx(0.61803398874989485).epsilon(1e-16));
}

TEST_CASE("positive_root: 2x^3 = x gives 1/sqrt(2)") {
  std::vector<PowerTerm> rhs;
  rhs.push_back({Real::of(1.0, 128), 1});
  Real x = sz::positive_root(Real::of(2.0, 128), 3, rhs, 1e-25);
  CHECK(x.to_double() == doctest::Approx(0.70710678118654752).epsilon(1e-16));
}

TEST_CASE("positive_root: merges duplicate degrees") {
  // x^2 = (0.5 + 0.5)x + (0.3 + 0.7)  ==  x + 1
  std::vector<PowerTerm> rhs;
  rhs.push_back({Real::of(0.5, 128), 1});
  rhs.push_back({Real::of(0.3, 128), 0});
  rhs.push_back({Real::of(0.5, 128), 1});
  rhs.push_back({Real::of(0.7, 128), 0});
  Real x = sz::positive_root(Real::of(1.0, 128), 2, rhs, 1e-25);
  CHECK(x.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-16));
}

TEST_CASE("positive_root: rejects degrees straddling the left side") {
  std::vector<PowerTerm> rhs;
  rhs.push_back({Real::of(1.0, 128), 0});
  rhs.push_back({Real::of(1.0, 128), 5});
  CHECK_THROWS_AS(sz::positive_root(Real::of(1.0, 128), 2, rhs), sz::DomainError);
}

TEST_CASE("positive_root: rejects empty/zero right side") {
  std::vector<PowerTerm> rhs;
  CHECK_THROWS_AS(sz::positive_root(Real::of(1.0, 128), 2, rhs), sz::NumericError);
  rhs.push_back({Real::of(0.0, 128), 0});
  CHECK_THROWS_AS(sz::positive_root(Real::of(1.0, 128), 2, rhs), sz::NumericError);
}

TEST_CASE("positive_root: extreme coefficient scales stay inside the bracket") {
  // x^3 = 1e-280 * x + 1e290: root ~ (1e290)^(1/3) ~ 2.15e96
  std::vector<PowerTerm> rhs;
  rhs.push_back({Real::parse("1e-280", 192), 1});
  rhs.push_back({Real::parse("1e290", 192), 0});
  Real x = sz::positive_root(Real::of(1.0, 192), 3, rhs, 1e-20);
  CHECK(residual_ratio(Real::of(1.0, 192), 3, rhs, x) <= 1e-20);
  CHECK(log(x).to_double() == doctest::Approx(290.0 * std::log(10.0) / 3.0).epsilon(1e-10));
}

TEST_CASE("positive_root: residual contract on random instances") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::int64_t> deg_dist(1, 40);
  std::uniform_real_distribution<double> log_c(-40.0, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t d = deg_dist(rng) + 2;
    int terms = 1 + static_cast<int>(rng() % 6);
    std::vector<PowerTerm> rhs;
    for (int t = 0; t < terms; ++t) {
      std::int64_t e = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d));
      rhs.push_back({exp(Real::of(log_c(rng), 160)), e});
    }
    Real a = exp(Real::of(log_c(rng), 160));
    Real x = sz::positive_root(a, d, rhs, 1e-20);
    CHECK(x.sign() > 0);
    CHECK(residual_ratio(a, d, rhs, x) <= 1e-19);
    // f(x) = lhs - rhs changes sign across the root: f < 0 below, f > 0 above
    Real below = x * Real::of(0.75, 160);
    Real above = x * Real::of(1.25, 160);
    Real f_below = a * pow_si(below, d);
    Real f_above = a * pow_si(above, d);
    for (const PowerTerm& t : rhs) {
      f_below -= t.coeff * pow_si(below, t.degree);
      f_above -= t.coeff * pow_si(above, t.degree);
    }
    CHECK(f_below.sign() < 0);
    CHECK(f_above.sign() > 0);
  }
}
