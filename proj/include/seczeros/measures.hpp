#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seczeros/roots.hpp"
#include "seczeros/sections.hpp"

namespace sz {

// Exact count-over-n bookkeeping for measure masses.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Probability measure on the sphere: one atom of weight 1/n per finite root,
// plus infinity_count/n at infinity.
struct ZeroCountingMeasure {
  std::vector<Complex> atoms;
  std::int64_t infinity_count = 0;
  std::int64_t n = 0;
};

ZeroCountingMeasure measure_from_roots(const SphericalRootSet& roots);

Fraction disk_mass(const ZeroCountingMeasure& measure, double r);
Fraction annulus_mass(const ZeroCountingMeasure& measure, double eps);
Fraction infinity_mass(const ZeroCountingMeasure& measure);

// Star discrepancy of the finite-root angles {theta/2pi} against the uniform
// law, by the sorted-points formula.  Roots at the origin have no angle and
// are excluded; the denominator is the number of angular points.
double star_discrepancy(const ZeroCountingMeasure& measure);

// |(1/n) sum over finite roots of e^{i m theta}|; origin roots contribute
// nothing but n stays the denominator.
double trig_moment(const ZeroCountingMeasure& measure, std::int64_t m);

// Jensen-chain slack (1/n)log((|a_0|+n)/|a_0|) - disk_mass(r)*log(1/r) for a
// MAX_GAUGE section with nonzero constant term; guaranteed >= 0 up to
// rounding, so a negative value beyond tolerance flags a broken measure.
double jensen_check(const NormalizedSection& section, const ZeroCountingMeasure& measure,
                    double r);

// (1/n) * max over `samples` equispaced points of log|p_n(z)| on |z| = radius.
// samples = 0 picks 8 * effective_degree; fewer than 4 * degree is rejected.
double circle_max_log(const NormalizedSection& section, double radius,
                      std::int64_t samples = 0);

struct AnnulusCheck {
  double lo = 0.0;
  double hi = 0.0;
  double fraction_inside = 0.0;
};

// Fraction of finite roots inside |a_0|/(1+|a_0|) <= |w| <= 2+eps for a
// LAST_COEFF section; reported, not asserted.
AnnulusCheck dilcher_rubel_annulus_check(const NormalizedSection& section,
                                         const SphericalRootSet& roots, double eps);

struct EquidistributionReport {
  std::int64_t n = 0;
  double star_disc = 0.0;
  std::array<double, 8> tau{};
  // Moduli quantiles at 5/25/50/75/95 percent.
  std::array<double, 5> radial_q{};
  double annulus_01 = 0.0;
  double annulus_02 = 0.0;
  Fraction disk_05;
  Fraction disk_09;
  Fraction infinity;
  std::optional<double> jensen_05;
  std::optional<double> jensen_09;
};

// Full diagnostics row for one measure.  jensen_section, when supplied, must
// be the MAX_GAUGE section whose own zeros the measure extends (the Jensen
// columns are computed against that section's measure, not the augmented one).
EquidistributionReport equidistribution_report(const ZeroCountingMeasure& measure,
                                               const NormalizedSection* jensen_section,
                                               const ZeroCountingMeasure* jensen_measure);

// CSV with the fixed diagnostics schema, one row per report.
std::string measures_csv_text(const std::vector<EquidistributionReport>& rows);
void write_measures_csv(const std::vector<EquidistributionReport>& rows,
                        const std::string& path);

}  // namespace sz
