#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seczeros/bigfloat.hpp"
#include "seczeros/series.hpp"

namespace sz {

enum class NormalizationMode { kMaxGauge, kLastCoeff, kNone };

std::string mode_name(NormalizationMode mode);
NormalizationMode parse_mode(const std::string& name);

// A materialized, normalized section sum c_k z^k, k = 0..n.  MAX_GAUGE divides
// a_k by A_n^k, LAST_COEFF by alpha_n^k, NONE keeps a_k.  The constant term is
// never rescaled.  log_mags carries log|c_k| in double for log-domain
// consumers; coeffs carries the extended-precision values.
struct NormalizedSection {
  std::int64_t n = 0;
  NormalizationMode mode = NormalizationMode::kNone;
  mpfr_prec_t precision = 128;
  std::vector<Complex> coeffs;
  std::vector<double> log_mags;
  std::int64_t effective_degree = 0;
  std::int64_t origin_multiplicity_stripped = 0;
  double log_normalizer = 0.0;
};

struct DynamicRange {
  double min_log = 0.0;
  double max_log = 0.0;
  std::int64_t underflow_count_at_double = 0;
};

// Divides out the leading z^m so the constant term is nonzero; returns the
// shifted sequence and m.  Scans at most scan_cap indices.
std::pair<CoefficientSequence, std::int64_t> strip_origin(const CoefficientSequence& seq,
                                                          std::int64_t scan_cap = 1 << 20);

NormalizedSection build(const CoefficientSequence& seq, std::int64_t n, NormalizationMode mode,
                        mpfr_prec_t precision);

DynamicRange dynamic_range_report(const NormalizedSection& section);

// Dump: header line, then one `k Re(c_k) Im(c_k) log|c_k|` line per k.
void write_section_dump(const NormalizedSection& section, const std::string& path);
std::string section_dump_text(const NormalizedSection& section);

}  // namespace sz
