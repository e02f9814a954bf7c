#include "seczeros/sections.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "seczeros/errors.hpp"
#include "seczeros/format.hpp"
#include "seczeros/gauge.hpp"

namespace sz {

namespace {

// Largest natural-log magnitude the widened binary exponent range can hold,
// with headroom; beyond this exp() would flush or overflow even at extended
// precision, which would silently fabricate gaps in the section.
constexpr double kLogCapacity = 2.9e18;

// exp of log|c_k| would be exactly 0 in a 64-bit double.
const double kDoubleFlushLog = std::log(std::numeric_limits<double>::denorm_min());

}  // namespace

std::string mode_name(NormalizationMode mode) {
  switch (mode) {
    case NormalizationMode::kMaxGauge:
      return "MAX_GAUGE";
    case NormalizationMode::kLastCoeff:
      return "LAST_COEFF";
    case NormalizationMode::kNone:
      return "NONE";
  }
  throw DomainError("unknown normalization mode");
}

NormalizationMode parse_mode(const std::string& name) {
  if (name == "MAX_GAUGE") return NormalizationMode::kMaxGauge;
  if (name == "LAST_COEFF") return NormalizationMode::kLastCoeff;
  if (name == "NONE") return NormalizationMode::kNone;
  throw ConfigError("unknown normalization mode: '" + name + "'");
}

std::pair<CoefficientSequence, std::int64_t> strip_origin(const CoefficientSequence& seq,
                                                          std::int64_t scan_cap) {
  std::int64_t m = -1;
  for (std::int64_t k = 0; k <= scan_cap; ++k) {
    if (!seq.at(k).is_zero()) {
      m = k;
      break;
    }
  }
  if (m < 0) {
    throw NumericError("strip_origin: no nonzero coefficient within the scan cap");
  }
  if (m == 0) return {seq, 0};
  CoefficientSequence shifted;
  shifted.name = seq.name + "/z^" + std::to_string(m);
  shifted.declared_radius = seq.declared_radius;
  shifted.declared_gauge = seq.declared_gauge;
  auto base = seq.generator;
  shifted.generator = [base, m](std::int64_t k) { return base(k + m); };
  return {shifted, m};
}

NormalizedSection build(const CoefficientSequence& seq, std::int64_t n, NormalizationMode mode,
                        mpfr_prec_t precision) {
  if (n < 1) throw DomainError("build: n must be >= 1");

  double log_norm = 0.0;
  if (mode == NormalizationMode::kMaxGauge) {
    log_norm = prefix_max(seq, n);
    if (is_log_zero(log_norm)) {
      throw DomainError("build: MAX_GAUGE normalizer A_n is zero at n = " + std::to_string(n));
    }
  } else if (mode == NormalizationMode::kLastCoeff) {
    log_norm = log_alpha(seq, n);
    if (is_log_zero(log_norm)) {
      throw DomainError("build: LAST_COEFF normalizer alpha_n is zero at n = " +
                        std::to_string(n));
    }
  }

  NormalizedSection sec;
  sec.n = n;
  sec.mode = mode;
  sec.precision = precision;
  sec.log_normalizer = log_norm;
  sec.coeffs.reserve(static_cast<std::size_t>(n) + 1);
  sec.log_mags.reserve(static_cast<std::size_t>(n) + 1);

  Real log_norm_r = Real::of(log_norm, precision);
  std::int64_t degree = -1;
  for (std::int64_t k = 0; k <= n; ++k) {
    LogCoefficient a = seq.at(k);
    if (a.is_zero()) {
      sec.coeffs.push_back(Complex::zero(precision));
      sec.log_mags.push_back(kMinusInfinity);
      continue;
    }
    Real lc(precision);
    double lc_d;
    if (mode == NormalizationMode::kNone || k == 0) {
      lc = Real::of(a.log_mag, precision);
      lc_d = a.log_mag;
    } else {
      double la = a.log_mag / static_cast<double>(k);
      lc = Real::of(k, precision) * (Real::of(la, precision) - log_norm_r);
      lc_d = static_cast<double>(k) * (la - log_norm);
    }
    if (std::abs(lc_d) > kLogCapacity) {
      throw NumericError("build: coefficient log magnitude " + fmt_g17(lc_d) +
                         " at k = " + std::to_string(k) + " exceeds the exponent capacity");
    }
    Real mag = exp(lc);
    Real ph = Real::of(a.phase, precision);
    sec.coeffs.push_back(Complex(mag * cos(ph), mag * sin(ph)));
    sec.log_mags.push_back(lc_d);
    degree = k;
  }
  if (degree < 0) {
    throw NumericError("build: section has no nonzero coefficient up to n = " +
                       std::to_string(n));
  }
  sec.effective_degree = degree;
  return sec;
}

DynamicRange dynamic_range_report(const NormalizedSection& section) {
  DynamicRange r;
  r.min_log = std::numeric_limits<double>::infinity();
  r.max_log = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (double lm : section.log_mags) {
    if (is_log_zero(lm)) continue;
    any = true;
    r.min_log = std::min(r.min_log, lm);
    r.max_log = std::max(r.max_log, lm);
    if (lm < kDoubleFlushLog) ++r.underflow_count_at_double;
  }
  if (!any) {
    r.min_log = kMinusInfinity;
    r.max_log = kMinusInfinity;
  }
  return r;
}

std::string section_dump_text(const NormalizedSection& section) {
  std::ostringstream out;
  out << "# section n=" << section.n << " mode=" << mode_name(section.mode)
      << " precision=" << section.precision << " effective_degree=" << section.effective_degree
      << " origin_stripped=" << section.origin_multiplicity_stripped << "\n";
  for (std::int64_t k = 0; k <= section.n; ++k) {
    const Complex& c = section.coeffs[static_cast<std::size_t>(k)];
    out << k << " " << c.re.to_string() << " " << c.im.to_string() << " "
        << fmt_g17(section.log_mags[static_cast<std::size_t>(k)]) << "\n";
  }
  return out.str();
}

void write_section_dump(const NormalizedSection& section, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << section_dump_text(section);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sz
