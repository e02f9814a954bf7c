#include "seczeros/measures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "seczeros/errors.hpp"
#include "seczeros/format.hpp"

namespace sz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> angular_points(const ZeroCountingMeasure& measure) {
  std::vector<double> theta;
  theta.reserve(measure.atoms.size());
  for (const Complex& w : measure.atoms) {
    if (w.is_zero()) continue;
    theta.push_back(atan2(w.im, w.re).to_double());
  }
  return theta;
}

}  // namespace

ZeroCountingMeasure measure_from_roots(const SphericalRootSet& roots) {
  if (static_cast<std::int64_t>(roots.finite_roots.size()) + roots.infinity_count !=
      roots.nominal_n) {
    throw DomainError("measure_from_roots: root set does not conserve the zero count");
  }
  ZeroCountingMeasure m;
  m.atoms = roots.finite_roots;
  m.infinity_count = roots.infinity_count;
  m.n = roots.nominal_n;
  return m;
}

Fraction disk_mass(const ZeroCountingMeasure& measure, double r) {
  if (!(r > 0.0)) throw DomainError("disk_mass: radius must be positive");
  std::int64_t count = 0;
  Real rr = Real::of(r, 64);
  for (const Complex& w : measure.atoms) {
    if (abs(w) <= rr) ++count;
  }
  return {count, measure.n};
}

Fraction annulus_mass(const ZeroCountingMeasure& measure, double eps) {
  if (!(eps > 0.0)) throw DomainError("annulus_mass: eps must be positive");
  Real lo = Real::of(1.0 - eps, 64);
  Real hi = Real::of(1.0 + eps, 64);
  std::int64_t count = 0;
  for (const Complex& w : measure.atoms) {
    Real aw = abs(w);
    if (aw >= lo && aw <= hi) ++count;
  }
  return {count, measure.n};
}

Fraction infinity_mass(const ZeroCountingMeasure& measure) {
  return {measure.infinity_count, measure.n};
}

double star_discrepancy(const ZeroCountingMeasure& measure) {
  std::vector<double> theta = angular_points(measure);
  if (theta.empty()) {
    throw NumericError("star_discrepancy: no finite roots with a defined angle");
  }
  std::vector<double> u;
  u.reserve(theta.size());
  for (double t : theta) {
    double x = t / kTwoPi;
    if (x < 0.0) x += 1.0;
    if (x >= 1.0) x -= 1.0;
    u.push_back(x);
  }
  std::sort(u.begin(), u.end());
  double F = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double up = static_cast<double>(i + 1) / F - u[i];
    double down = u[i] - static_cast<double>(i) / F;
    d = std::max(d, std::max(up, down));
  }
  return d;
}

double trig_moment(const ZeroCountingMeasure& measure, std::int64_t m) {
  if (m < 1) throw DomainError("trig_moment: order must be >= 1");
  double re = 0.0, im = 0.0;
  for (double t : angular_points(measure)) {
    re += std::cos(static_cast<double>(m) * t);
    im += std::sin(static_cast<double>(m) * t);
  }
  return std::hypot(re, im) / static_cast<double>(measure.n);
}

double jensen_check(const NormalizedSection& section, const ZeroCountingMeasure& measure,
                    double r) {
  if (section.mode != NormalizationMode::kMaxGauge) {
    throw DomainError("jensen_check: section must use MAX_GAUGE normalization");
  }
  if (section.coeffs.front().is_zero()) {
    throw DomainError("jensen_check: constant term is zero; strip the origin first");
  }
  if (!(r > 0.0 && r < 1.0)) throw DomainError("jensen_check: radius must lie in (0,1)");
  if (measure.n != section.n) {
    throw DomainError("jensen_check: measure does not belong to this section");
  }
  Real a0 = abs(section.coeffs.front());
  Real nr = Real::of(section.n, section.precision);
  double bound = log((a0 + nr) / a0).to_double() / static_cast<double>(section.n);
  double mass = disk_mass(measure, r).value();
  return bound - mass * std::log(1.0 / r);
}

double circle_max_log(const NormalizedSection& section, double radius, std::int64_t samples) {
  if (!(radius > 0.0)) throw DomainError("circle_max_log: radius must be positive");
  std::int64_t deg = section.effective_degree;
  if (samples == 0) samples = 8 * std::max<std::int64_t>(deg, 1);
  if (samples < 4 * deg) {
    throw DomainError("circle_max_log: need at least 4*degree sample points");
  }
  mpfr_prec_t prec = section.precision;
  Real two_pi = Real::pi(prec).ldexp_si(1);
  Real rad = Real::of(radius, prec);
  Real samples_r = Real::of(samples, prec);
  double best = kMinusInfinity;
  for (std::int64_t t = 0; t < samples; ++t) {
    Real theta = two_pi * Real::of(t, prec) / samples_r;
    Complex z(rad * cos(theta), rad * sin(theta));
    Complex p = Complex::zero(prec);
    for (std::size_t k = section.coeffs.size(); k-- > 0;) {
      p = p * z + section.coeffs[k];
    }
    Real ap = abs(p);
    if (ap.is_zero()) continue;
    best = std::max(best, log(ap).to_double());
  }
  return best / static_cast<double>(section.n);
}

AnnulusCheck dilcher_rubel_annulus_check(const NormalizedSection& section,
                                         const SphericalRootSet& roots, double eps) {
  if (section.mode != NormalizationMode::kLastCoeff) {
    throw DomainError("dilcher_rubel_annulus_check: section must use LAST_COEFF normalization");
  }
  if (section.coeffs.front().is_zero()) {
    throw DomainError("dilcher_rubel_annulus_check: constant term is zero");
  }
  if (!(eps > 0.0)) throw DomainError("dilcher_rubel_annulus_check: eps must be positive");
  double a0 = abs(section.coeffs.front()).to_double();
  AnnulusCheck check;
  check.lo = a0 / (1.0 + a0);
  check.hi = 2.0 + eps;
  if (roots.finite_roots.empty()) return check;
  Real lo = Real::of(check.lo, section.precision);
  Real hi = Real::of(check.hi, section.precision);
  std::int64_t inside = 0;
  for (const Complex& w : roots.finite_roots) {
    Real aw = abs(w);
    if (aw >= lo && aw <= hi) ++inside;
  }
  check.fraction_inside =
      static_cast<double>(inside) / static_cast<double>(roots.finite_roots.size());
  return check;
}

EquidistributionReport equidistribution_report(const ZeroCountingMeasure& measure,
                                               const NormalizedSection* jensen_section,
                                               const ZeroCountingMeasure* jensen_measure) {
  EquidistributionReport rep;
  rep.n = measure.n;
  std::vector<double> theta = angular_points(measure);
  rep.star_disc = theta.empty() ? std::numeric_limits<double>::quiet_NaN()
                                : star_discrepancy(measure);
  for (std::int64_t m = 1; m <= 8; ++m) {
    rep.tau[static_cast<std::size_t>(m - 1)] = trig_moment(measure, m);
  }
  std::vector<double> moduli;
  moduli.reserve(measure.atoms.size());
  for (const Complex& w : measure.atoms) moduli.push_back(abs(w).to_double());
  std::sort(moduli.begin(), moduli.end());
  const double ps[5] = {0.05, 0.25, 0.5, 0.75, 0.95};
  for (int i = 0; i < 5; ++i) {
    if (moduli.empty()) {
      rep.radial_q[static_cast<std::size_t>(i)] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    auto idx = static_cast<std::int64_t>(
        std::ceil(ps[i] * static_cast<double>(moduli.size())) - 1.0);
    idx = std::clamp<std::int64_t>(idx, 0, static_cast<std::int64_t>(moduli.size()) - 1);
    rep.radial_q[static_cast<std::size_t>(i)] = moduli[static_cast<std::size_t>(idx)];
  }
  rep.annulus_01 = annulus_mass(measure, 0.1).value();
  rep.annulus_02 = annulus_mass(measure, 0.2).value();
  rep.disk_05 = disk_mass(measure, 0.5);
  rep.disk_09 = disk_mass(measure, 0.9);
  rep.infinity = infinity_mass(measure);
  if (jensen_section != nullptr && jensen_measure != nullptr &&
      jensen_section->mode == NormalizationMode::kMaxGauge &&
      !jensen_section->coeffs.front().is_zero()) {
    rep.jensen_05 = jensen_check(*jensen_section, *jensen_measure, 0.5);
    rep.jensen_09 = jensen_check(*jensen_section, *jensen_measure, 0.9);
  }
  return rep;
}

std::string measures_csv_text(const std::vector<EquidistributionReport>& rows) {
  std::ostringstream out;
  out << "n,star_discrepancy";
  for (int m = 1; m <= 8; ++m) out << ",tau_" << m;
  out << ",q05,q25,q50,q75,q95,annulus_mass(0.1),annulus_mass(0.2),disk_mass(0.5),"
         "disk_mass(0.9),infinity_mass,jensen_slack(0.5),jensen_slack(0.9)\n";
  for (const EquidistributionReport& r : rows) {
    out << r.n << "," << fmt_g17(r.star_disc);
    for (double t : r.tau) out << "," << fmt_g17(t);
    for (double q : r.radial_q) out << "," << fmt_g17(q);
    out << "," << fmt_g17(r.annulus_01) << "," << fmt_g17(r.annulus_02) << ","
        << fmt_g17(r.disk_05.value()) << "," << fmt_g17(r.disk_09.value()) << ","
        << fmt_g17(r.infinity.value());
    out << "," << (r.jensen_05 ? fmt_g17(*r.jensen_05) : "nan");
    out << "," << (r.jensen_09 ? fmt_g17(*r.jensen_09) : "nan");
    out << "\n";
  }
  return out.str();
}

void write_measures_csv(const std::vector<EquidistributionReport>& rows,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << measures_csv_text(rows);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sz
