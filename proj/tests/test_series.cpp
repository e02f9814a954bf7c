#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "seczeros/errors.hpp"
#include "seczeros/series.hpp"

using sz::CoefficientSequence;
using sz::LogCoefficient;

namespace {

std::string temp_path(const char* stem) {
  return (std::filesystem::temp_directory_path() / stem).string();
}

}  // namespace

TEST_CASE("make_coefficient wraps phase into [0, 2pi)") {
  double two_pi = 2.0 * M_PI;
  CHECK(sz::make_coefficient(0.0, -0.5).phase == doctest::Approx(two_pi - 0.5));
  CHECK(sz::make_coefficient(0.0, two_pi + 0.25).phase == doctest::Approx(0.25));
  CHECK(sz::make_coefficient(0.0, 0.0).phase == 0.0);
}

TEST_CASE("lacunary(2): support on powers of two, factorial magnitudes") {
  CoefficientSequence seq = sz::family_lacunary(2);
  CHECK(!seq.at(1).is_zero());
  CHECK(!seq.at(2).is_zero());
  CHECK(!seq.at(4).is_zero());
  CHECK(!seq.at(64).is_zero());
  CHECK(seq.at(3).is_zero());
  CHECK(seq.at(5).is_zero());
  CHECK(seq.at(96).is_zero());
  // a_4 = 4! = 24
  CHECK(seq.at(4).log_mag == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  // a_8 = 8! = 40320
  CHECK(seq.at(8).log_mag == doctest::Approx(std::log(40320.0)).epsilon(1e-14));
  CHECK(seq.at(0).is_zero());
}

TEST_CASE("lacunary(3): support on powers of three") {
  CoefficientSequence seq = sz::family_lacunary(3);
  CHECK(!seq.at(1).is_zero());
  CHECK(!seq.at(3).is_zero());
  CHECK(!seq.at(9).is_zero());
  CHECK(!seq.at(27).is_zero());
  CHECK(seq.at(2).is_zero());
  CHECK(seq.at(6).is_zero());
  CHECK(seq.at(81 - 1).is_zero());
}

TEST_CASE("dense(2): support exactly on perfect squares") {
  CoefficientSequence seq = sz::family_dense(2);
  for (std::int64_t k = 0; k <= 150; ++k) {
    std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(k))));
    bool square = r * r == k;
    CHECK(seq.at(k).is_zero() == !square);
  }
  // a_9 = 9! = 362880
  CHECK(seq.at(9).log_mag == doctest::Approx(std::log(362880.0)).epsilon(1e-14));
}

TEST_CASE("dense(3): support exactly on perfect cubes including big ones") {
  CoefficientSequence seq = sz::family_dense(3);
  CHECK(!seq.at(0).is_zero());
  CHECK(!seq.at(1).is_zero());
  CHECK(!seq.at(8).is_zero());
  CHECK(!seq.at(27).is_zero());
  CHECK(!seq.at(1000000).is_zero());
  CHECK(seq.at(999999).is_zero());
  CHECK(seq.at(1000001).is_zero());
}

TEST_CASE("power(p): log a_n = p n log n") {
  CoefficientSequence seq = sz::family_power(1.0);
  CHECK(seq.at(0).log_mag == 0.0);
  CHECK(seq.at(1).log_mag == 0.0);
  CHECK(seq.at(5).log_mag == doctest::Approx(5.0 * std::log(5.0)).epsilon(1e-15));
  CoefficientSequence half = sz::family_power(0.5);
  CHECK(half.at(8).log_mag == doctest::Approx(4.0 * std::log(8.0)).epsilon(1e-15));
}

TEST_CASE("geometric(r): alpha_k = r for every k, declared radius 1/r") {
  CoefficientSequence seq = sz::family_geometric(2.0);
  for (std::int64_t k = 1; k <= 40; ++k) {
    CHECK(sz::alpha(seq, k) == doctest::Approx(2.0).epsilon(1e-14));
  }
  REQUIRE(seq.declared_radius.has_value());
  CHECK(*seq.declared_radius == doctest::Approx(0.5));
}

TEST_CASE("gauge_t: power-of-two rows use n^n, off rows the t-blend") {
  CoefficientSequence seq = sz::family_gauge_t(0.5);
  CHECK(seq.at(4).log_mag == doctest::Approx(4.0 * std::log(4.0)).epsilon(1e-14));
  CHECK(seq.at(8).log_mag == doctest::Approx(8.0 * std::log(8.0)).epsilon(1e-14));
  // off the powers of two: log(1 + (t n + sqrt n)^n); n=3, t=0.5 gives
  // log(1 + (1.5 + sqrt 3)^3) = log(1 + 33.839...) = 3.5485...
  double base = 0.5 * 3.0 + std::sqrt(3.0);
  double expect = std::log1p(std::pow(base, 3.0));
  CHECK(seq.at(3).log_mag == doctest::Approx(expect).epsilon(1e-13));
  CHECK(seq.at(3).log_mag == doctest::Approx(3.5485390864797880).epsilon(1e-13));
}

TEST_CASE("gauge_t: t=0 rows grow like sqrt(n)^n off the powers of two") {
  CoefficientSequence seq = sz::family_gauge_t(0.0);
  double la9 = sz::log_alpha(seq, 9);
  CHECK(la9 == doctest::Approx(std::log1p(std::pow(3.0, 9.0)) / 9.0).epsilon(1e-13));
}

TEST_CASE("log_alpha rejects k < 1") {
  CoefficientSequence seq = sz::family_power(1.0);
  CHECK_THROWS_AS(sz::log_alpha(seq, 0), sz::DomainError);
}

TEST_CASE("coefficient file round-trip preserves support and values") {
  CoefficientSequence seq = sz::family_lacunary(2);
  std::string path = temp_path("sz_series_roundtrip.txt");
  sz::write_coefficient_file(seq, 64, path);
  CoefficientSequence back = sz::family_from_file(path);
  for (std::int64_t k = 0; k <= 64; ++k) {
    LogCoefficient a = seq.at(k);
    LogCoefficient b = back.at(k);
    CHECK(a.is_zero() == b.is_zero());
    if (!a.is_zero()) {
      CHECK(b.log_mag == a.log_mag);  // %.17g round-trips doubles exactly
      CHECK(b.phase == a.phase);
    }
  }
  // indices beyond the written range read as zero
  CHECK(back.at(65).is_zero());
  CHECK(back.at(1000).is_zero());
  std::remove(path.c_str());
}

TEST_CASE("coefficient file: comments, blank lines, -inf token") {
  std::string path = temp_path("sz_series_manual.txt");
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "\n";
    out << "0 0 0\n";
    out << "2 -inf 0\n";
    out << "5 1.5 3.25\n";
  }
  CoefficientSequence seq = sz::family_from_file(path);
  CHECK(seq.at(0).log_mag == 0.0);
  CHECK(seq.at(2).is_zero());
  CHECK(seq.at(5).log_mag == 1.5);
  CHECK(seq.at(5).phase == 3.25);
  CHECK(seq.at(1).is_zero());
  std::remove(path.c_str());
}

TEST_CASE("coefficient file: non-increasing indices rejected with line info") {
  std::string path = temp_path("sz_series_bad_order.txt");
  {
    std::ofstream out(path);
    out << "3 1.0 0\n";
    out << "3 2.0 0\n";
  }
  CHECK_THROWS_AS(sz::family_from_file(path), sz::IoError);
  std::remove(path.c_str());
}

TEST_CASE("coefficient file: malformed and trailing tokens rejected") {
  std::string path = temp_path("sz_series_bad_tokens.txt");
  {
    std::ofstream out(path);
    out << "0 1.0 0 junk\n";
  }
  CHECK_THROWS_AS(sz::family_from_file(path), sz::IoError);
  {
    std::ofstream out(path);
    out << "0 not_a_number 0\n";
  }
  CHECK_THROWS_AS(sz::family_from_file(path), sz::IoError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(sz::family_from_file(temp_path("sz_series_missing.txt")), sz::IoError);
}
