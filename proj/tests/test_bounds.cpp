#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "seczeros/bounds.hpp"
#include "seczeros/errors.hpp"
#include "seczeros/roots.hpp"
#include "seczeros/sections.hpp"
#include "seczeros/series.hpp"

using sz::Complex;
using sz::Real;

namespace {

std::vector<Complex> coeffs_from_doubles(const std::vector<double>& re, mpfr_prec_t prec = 128) {
  std::vector<Complex> out;
  for (double x : re) out.push_back(Complex::of(x, 0.0, prec));
  return out;
}

sz::NormalizedSection section_from(std::vector<Complex> coeffs) {
  sz::NormalizedSection s;
  s.mode = sz::NormalizationMode::kNone;
  s.precision = coeffs.front().prec();
  s.n = static_cast<std::int64_t>(coeffs.size()) - 1;
  s.effective_degree = 0;
  for (std::int64_t k = 0; k <= s.n; ++k) {
    if (!coeffs[static_cast<std::size_t>(k)].is_zero()) s.effective_degree = k;
  }
  for (const Complex& c : coeffs) {
    s.log_mags.push_back(c.is_zero() ? sz::kMinusInfinity : log(abs(c)).to_double());
  }
  s.coeffs = std::move(coeffs);
  return s;
}

constexpr double kPhi = 1.6180339887498949;

}  // namespace

TEST_CASE("Cauchy radius of z^2 - z - 1 is the golden ratio") {
  Real c = sz::cauchy_bound(coeffs_from_doubles({-1, -1, 1}));
  CHECK(c.to_double() == doctest::Approx(kPhi).epsilon(1e-15));
}

TEST_CASE("Cauchy radius contains every root (random polynomials)") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 10);
    std::vector<double> cs;
    for (int k = 0; k <= deg; ++k) cs.push_back(coeff(rng));
    if (std::abs(cs[0]) < 0.1) cs[0] = -1.0;
    if (std::abs(cs.back()) < 0.1) cs.back() = 1.0;
    auto coeffs = coeffs_from_doubles(cs);
    double bound = sz::cauchy_bound(coeffs).to_double();
    sz::SphericalRootSet r = sz::find_roots(section_from(coeffs));
    for (const Complex& w : r.finite_roots) {
      CHECK(abs(w).to_double() <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("all-lower-zero polynomial has Cauchy radius 0") {
  CHECK(sz::cauchy_bound(coeffs_from_doubles({0, 0, 0, 1})).is_zero());
}

TEST_CASE("Van Vleck radii: golden case z^2 - z - 1") {
  auto coeffs = coeffs_from_doubles({-1, -1, 1});
  // m=1: x^2 = |b_0| -> x = 1
  CHECK(sz::van_vleck_bound(coeffs, 1).to_double() == doctest::Approx(1.0).epsilon(1e-15));
  // m=2 = n: coincides with the Cauchy radius
  CHECK(sz::van_vleck_bound(coeffs, 2).to_double() == doctest::Approx(kPhi).epsilon(1e-15));
}

TEST_CASE("Van Vleck at m = n equals the Cauchy radius to full tolerance") {
  std::mt19937_64 rng(8080);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 14);
    std::vector<double> cs;
    for (int k = 0; k <= deg; ++k) cs.push_back(coeff(rng));
    if (std::abs(cs[0]) < 0.1) cs[0] = 1.0;
    if (std::abs(cs.back()) < 0.1) cs.back() = -1.0;
    auto coeffs = coeffs_from_doubles(cs);
    double vv = sz::van_vleck_bound(coeffs, deg).to_double();
    double cb = sz::cauchy_bound(coeffs).to_double();
    CHECK(vv == doctest::Approx(cb).epsilon(1e-12));
  }
}

TEST_CASE("Van Vleck disk contains at least m roots; outward leaves at least m outside") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    int deg = 3 + static_cast<int>(rng() % 10);
    std::vector<double> cs;
    for (int k = 0; k <= deg; ++k) cs.push_back(coeff(rng));
    if (std::abs(cs[0]) < 0.1) cs[0] = 1.0;
    if (std::abs(cs.back()) < 0.1) cs.back() = -1.0;
    auto coeffs = coeffs_from_doubles(cs);
    sz::SphericalRootSet r = sz::find_roots(section_from(coeffs));
    for (std::int64_t m = 1; m <= deg; ++m) {
      double vv = sz::van_vleck_bound(coeffs, m).to_double();
      double out_r = sz::outward_radius(coeffs, m).to_double();
      std::int64_t within = 0, outside = 0;
      for (const Complex& w : r.finite_roots) {
        double mod = abs(w).to_double();
        if (mod <= vv * (1.0 + 1e-10)) ++within;
        if (mod >= out_r * (1.0 - 1e-10)) ++outside;
      }
      CHECK(within >= m);
      CHECK(outside >= m);
    }
  }
}

TEST_CASE("outward radius: golden case and reversal duality") {
  auto coeffs = coeffs_from_doubles({-1, -1, 1});
  // m=1: 1 = x^2 -> 1; m=2: 1 = x + x^2 -> 1/phi
  CHECK(sz::outward_radius(coeffs, 1).to_double() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sz::outward_radius(coeffs, 2).to_double() ==
        doctest::Approx(1.0 / kPhi).epsilon(1e-15));
}

TEST_CASE("outward radius is the reciprocal Van Vleck radius of the reversal") {
  std::mt19937_64 rng(1618);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 12);
    std::vector<double> cs;
    for (int k = 0; k <= deg; ++k) cs.push_back(coeff(rng));
    if (std::abs(cs[0]) < 0.1) cs[0] = 1.0;
    if (std::abs(cs.back()) < 0.1) cs.back() = -1.0;
    auto coeffs = coeffs_from_doubles(cs);
    auto reversed = sz::reverse_companion(coeffs);
    for (std::int64_t m = 1; m <= deg; ++m) {
      double a = sz::outward_radius(coeffs, m).to_double();
      double b = 1.0 / sz::van_vleck_bound(reversed, m).to_double();
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }
}

TEST_CASE("reverse_companion reverses the coefficient list") {
  auto coeffs = coeffs_from_doubles({1, 2, 3});
  auto rev = sz::reverse_companion(coeffs);
  REQUIRE(rev.size() == 3);
  CHECK(rev[0].re.to_double() == 3.0);
  CHECK(rev[1].re.to_double() == 2.0);
  CHECK(rev[2].re.to_double() == 1.0);
}

TEST_CASE("outward radius is +infinity when the top window vanishes") {
  // formal n = 3 but degree 1: window for m = 2 is {2, 3}, all zero
  auto coeffs = coeffs_from_doubles({1, 1, 0, 0});
  CHECK(sz::outward_radius(coeffs, 2).is_inf());
  // and the matching pest check holds with infinite slack
  sz::PestCheck pc = sz::check_pest(coeffs, 2, sz::outward_radius(coeffs, 2));
  CHECK(pc.holds);
}

TEST_CASE("Van Vleck is 0 when the low window vanishes") {
  auto coeffs = coeffs_from_doubles({0, 0, 1, 1});
  CHECK(sz::van_vleck_bound(coeffs, 1).is_zero());
  CHECK(sz::van_vleck_bound(coeffs, 2).is_zero());
  // m=3 sees b_2 != 0
  CHECK(sz::van_vleck_bound(coeffs, 3).to_double() > 0.0);
}

TEST_CASE("pest inequality: golden case slack") {
  auto coeffs = coeffs_from_doubles({-1, -1, 1});
  Real v2 = sz::outward_radius(coeffs, 2);
  sz::PestCheck pc = sz::check_pest(coeffs, 2, v2);
  CHECK(pc.holds);
  // RHS - LHS = 2 H(1/2) + log 1 + 2 log max(1, 1/phi) - log 1 = 2 log 2
  CHECK(pc.log_slack == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("pest inequality holds across random polynomials and all m") {
  std::mt19937_64 rng(40490);
  std::uniform_real_distribution<double> coeff(-4.0, 4.0);
  for (int trial = 0; trial < 40; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 18);
    std::vector<double> cs;
    for (int k = 0; k <= deg; ++k) cs.push_back(coeff(rng));
    if (std::abs(cs[0]) < 0.1) cs[0] = 1.0;
    if (std::abs(cs.back()) < 0.1) cs.back() = -1.0;
    auto coeffs = coeffs_from_doubles(cs);
    for (std::int64_t m = 1; m <= deg; ++m) {
      sz::PestCheck pc = sz::check_pest(coeffs, m, sz::outward_radius(coeffs, m));
      CHECK(pc.holds);
      CHECK(pc.log_slack >= -1e-12);
    }
  }
}

TEST_CASE("bounds_report trims trailing zeros and counts containment") {
  sz::NormalizedSection s =
      sz::build(sz::family_power(1.0), 12, sz::NormalizationMode::kMaxGauge, 128);
  sz::SphericalRootSet r = sz::find_roots(s);
  sz::BoundsReport rep = sz::bounds_report(s, {1, 2, 12}, &r);
  CHECK(rep.n == 12);
  CHECK(rep.degree == 12);
  REQUIRE(rep.rows.size() == 3);
  for (const sz::BoundsRow& row : rep.rows) {
    CHECK(row.pest_holds);
    CHECK(row.roots_within_V >= row.m);
    CHECK(row.roots_outside_v >= row.m);
  }
  // m = degree: Van Vleck == Cauchy
  CHECK(rep.rows[2].van_vleck == doctest::Approx(rep.cauchy).epsilon(1e-14));
  // without roots the counts are absent
  sz::BoundsReport norep = sz::bounds_report(s, {1}, nullptr);
  CHECK(norep.rows[0].roots_within_V == -1);
  CHECK(norep.rows[0].roots_outside_v == -1);
}

TEST_CASE("bounds_report rejects vanishing constant terms") {
  auto coeffs = coeffs_from_doubles({0, 1, 1});
  CHECK_THROWS_AS(sz::bounds_report(section_from(coeffs), {1}, nullptr), sz::DomainError);
}

TEST_CASE("bounds csv is deterministic with the documented header") {
  sz::NormalizedSection s =
      sz::build(sz::family_power(1.0), 8, sz::NormalizationMode::kMaxGauge, 128);
  sz::BoundsReport rep = sz::bounds_report(s, {1, 8}, nullptr);
  std::string a = sz::bounds_csv_text(rep);
  CHECK(a == sz::bounds_csv_text(sz::bounds_report(s, {1, 8}, nullptr)));
  CHECK(a.find("# n=8 degree=8 cauchy_C=") == 0);
  CHECK(a.find("m,V_m,v_m,pest_slack,roots_within_V,roots_outside_v") != std::string::npos);
}
