#include <cmath>
#include <map>
#include <string>

#include "doctest.h"
#include "seczeros/errors.hpp"
#include "seczeros/sections.hpp"

using sz::CoefficientSequence;
using sz::NormalizationMode;
using sz::NormalizedSection;

namespace {

CoefficientSequence table_sequence(std::map<std::int64_t, sz::LogCoefficient> table) {
  CoefficientSequence seq;
  seq.name = "table";
  seq.generator = [t = std::move(table)](std::int64_t k) {
    auto it = t.find(k);
    return it == t.end() ? sz::LogCoefficient{} : it->second;
  };
  return seq;
}

}  // namespace

TEST_CASE("mode names round-trip and unknown names are config errors") {
  for (auto m : {NormalizationMode::kMaxGauge, NormalizationMode::kLastCoeff,
                 NormalizationMode::kNone}) {
    CHECK(sz::parse_mode(sz::mode_name(m)) == m);
  }
  CHECK_THROWS_AS(sz::parse_mode("FULL_TILT"), sz::ConfigError);
}

TEST_CASE("MAX_GAUGE: argmax coefficient is exactly 1, others scale as (alpha_k/A_n)^k") {
  // log alpha: 1 -> log 1, 2 -> log 2, 3 -> log 3, 4 -> log 4 (a_k = k^k)
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[0] = sz::make_coefficient(0.0, 0.0);
  for (std::int64_t k = 1; k <= 4; ++k) {
    t[k] = sz::make_coefficient(static_cast<double>(k) * std::log(static_cast<double>(k)), 0.0);
  }
  NormalizedSection s = sz::build(table_sequence(t), 4, NormalizationMode::kMaxGauge, 128);
  CHECK(s.n == 4);
  CHECK(s.effective_degree == 4);
  CHECK(s.log_normalizer == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  // c_4 = (alpha_4 / A_4)^4 = 1 exactly by construction
  CHECK(s.coeffs[4].re.to_double() == 1.0);
  CHECK(s.log_mags[4] == 0.0);
  // c_k = (k/4)^k
  for (std::int64_t k = 1; k <= 3; ++k) {
    double expect = std::pow(static_cast<double>(k) / 4.0, static_cast<double>(k));
    CHECK(s.coeffs[k].re.to_double() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(s.log_mags[k] ==
          doctest::Approx(static_cast<double>(k) * std::log(static_cast<double>(k) / 4.0))
              .epsilon(1e-12));
  }
  // constant term never rescaled
  CHECK(s.coeffs[0].re.to_double() == 1.0);
}

TEST_CASE("LAST_COEFF: top coefficient is exactly 1") {
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[0] = sz::make_coefficient(0.0, 0.0);
  t[2] = sz::make_coefficient(std::log(9.0), 0.0);   // alpha_2 = 3
  t[4] = sz::make_coefficient(std::log(16.0), 0.0);  // alpha_4 = 2
  NormalizedSection s = sz::build(table_sequence(t), 4, NormalizationMode::kLastCoeff, 128);
  CHECK(s.log_normalizer == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(s.coeffs[4].re.to_double() == 1.0);
  // c_2 = 9 / 2^2 = 2.25
  CHECK(s.coeffs[2].re.to_double() == doctest::Approx(2.25).epsilon(1e-14));
}

TEST_CASE("LAST_COEFF requires a nonzero top coefficient") {
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[0] = sz::make_coefficient(0.0, 0.0);
  t[2] = sz::make_coefficient(1.0, 0.0);
  CHECK_THROWS_AS(sz::build(table_sequence(t), 4, NormalizationMode::kLastCoeff, 128),
                  sz::DomainError);
}

TEST_CASE("NONE keeps raw coefficient magnitudes") {
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[0] = sz::make_coefficient(std::log(5.0), 0.0);
  t[3] = sz::make_coefficient(2.5, 1.0);
  NormalizedSection s = sz::build(table_sequence(t), 3, NormalizationMode::kNone, 128);
  CHECK(s.log_normalizer == 0.0);
  CHECK(s.coeffs[0].re.to_double() == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(s.log_mags[3] == 2.5);
  CHECK(s.coeffs[3].re.to_double() ==
        doctest::Approx(std::exp(2.5) * std::cos(1.0)).epsilon(1e-14));
  CHECK(s.coeffs[3].im.to_double() ==
        doctest::Approx(std::exp(2.5) * std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("phases are preserved under normalization") {
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[0] = sz::make_coefficient(0.0, 0.0);
  t[2] = sz::make_coefficient(3.0, 2.0);
  NormalizedSection s = sz::build(table_sequence(t), 2, NormalizationMode::kMaxGauge, 128);
  double arg = std::atan2(s.coeffs[2].im.to_double(), s.coeffs[2].re.to_double());
  CHECK(arg == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("effective degree tracks the top nonzero index") {
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[0] = sz::make_coefficient(0.0, 0.0);
  t[2] = sz::make_coefficient(1.0, 0.0);
  NormalizedSection s = sz::build(table_sequence(t), 5, NormalizationMode::kMaxGauge, 128);
  CHECK(s.n == 5);
  CHECK(s.effective_degree == 2);
  CHECK(s.coeffs.size() == 6);
  CHECK(s.coeffs[5].is_zero());
  CHECK(sz::is_log_zero(s.log_mags[5]));
}

TEST_CASE("all-zero positive part is a domain error naming the mode") {
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[0] = sz::make_coefficient(0.0, 0.0);
  try {
    sz::build(table_sequence(t), 4, NormalizationMode::kMaxGauge, 128);
    FAIL("expected DomainError");
  } catch (const sz::DomainError& e) {
    CHECK(std::string(e.what()).find("MAX_GAUGE") != std::string::npos);
  }
}

TEST_CASE("strip_origin shifts leading zeros out and renames") {
  CoefficientSequence lac = sz::family_lacunary(2);  // a_0 = 0, a_1 != 0
  auto [shifted, m] = sz::strip_origin(lac);
  CHECK(m == 1);
  CHECK(!shifted.at(0).is_zero());
  CHECK(shifted.at(0).log_mag == lac.at(1).log_mag);
  CHECK(shifted.name.find("/z^") != std::string::npos);

  // no-op when a_0 != 0
  CoefficientSequence pw = sz::family_power(1.0);
  auto [same, m0] = sz::strip_origin(pw);
  CHECK(m0 == 0);
  CHECK(same.at(0).log_mag == pw.at(0).log_mag);
}

TEST_CASE("strip_origin on deep origin zeros") {
  std::map<std::int64_t, sz::LogCoefficient> t;
  t[7] = sz::make_coefficient(1.0, 0.5);
  t[9] = sz::make_coefficient(2.0, 0.0);
  auto [shifted, m] = sz::strip_origin(table_sequence(t));
  CHECK(m == 7);
  CHECK(shifted.at(0).log_mag == 1.0);
  CHECK(shifted.at(2).log_mag == 2.0);
  CHECK(shifted.at(1).is_zero());
}

TEST_CASE("huge dynamic range: MAX_GAUGE keeps c_k finite at extended precision") {
  // power(1) at n = 256: raw a_n = n^n ~ 1e617 overflows double; normalized
  // coefficients stay in [0, 1] and many underflow double but not Real.
  NormalizedSection s = sz::build(sz::family_power(1.0), 256, NormalizationMode::kMaxGauge, 128);
  CHECK(s.coeffs[256].re.to_double() == 1.0);
  for (std::int64_t k = 0; k <= 256; ++k) {
    CHECK(s.coeffs[k].is_finite());
    CHECK(s.log_mags[k] <= 1e-12);
  }
  sz::DynamicRange dr = sz::dynamic_range_report(s);
  CHECK(dr.max_log <= 1e-12);
  CHECK(dr.min_log < dr.max_log);
}

TEST_CASE("normalizer magnitudes way beyond double stay representable") {
  // gauge_t(1.0) at n = 4096: log a_n = n log n ~ 34000; exp overflows double
  // but the normalized build must succeed and the argmax lands at exactly 1.
  NormalizedSection s =
      sz::build(sz::family_gauge_t(1.0), 4096, NormalizationMode::kMaxGauge, 128);
  // The constant term is exempt from rescaling, so scan k >= 1 only.
  double top = -1e300;
  for (std::size_t k = 1; k < s.log_mags.size(); ++k) {
    if (!sz::is_log_zero(s.log_mags[k])) top = std::max(top, s.log_mags[k]);
  }
  CHECK(top == 0.0);
}

TEST_CASE("section dump is deterministic and carries the header fields") {
  NormalizedSection s = sz::build(sz::family_power(1.0), 8, NormalizationMode::kMaxGauge, 128);
  std::string a = sz::section_dump_text(s);
  std::string b = sz::section_dump_text(
      sz::build(sz::family_power(1.0), 8, NormalizationMode::kMaxGauge, 128));
  CHECK(a == b);
  CHECK(a.find("# section n=8 mode=MAX_GAUGE") == 0);
  CHECK(a.find("effective_degree=8") != std::string::npos);
}
