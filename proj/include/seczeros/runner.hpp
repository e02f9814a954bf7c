#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seczeros/bounds.hpp"
#include "seczeros/config.hpp"
#include "seczeros/gauge.hpp"
#include "seczeros/measures.hpp"
#include "seczeros/roots.hpp"
#include "seczeros/sections.hpp"

namespace sz {

// One n-slot of a zeros run.  The section is built at n - origin_multiplicity
// on the stripped sequence; augmented_roots restores the stripped origin zeros
// so the measure counts all n zeros of the original section.
struct ZerosSlot {
  std::int64_t n = 0;
  bool ok = false;
  std::string error;
  NormalizedSection section;
  SphericalRootSet section_roots;
  SphericalRootSet augmented_roots;
  ZeroCountingMeasure measure;
  EquidistributionReport report;
};

struct ZerosRun {
  std::int64_t origin_multiplicity = 0;
  std::vector<ZerosSlot> slots;
  std::string verdict;
  std::vector<std::string> warnings;
};

struct GaugeRun {
  GaugeProfile profile;
  std::optional<OstrowskiReport> gaps;
};

struct BoundsSlot {
  std::int64_t n = 0;
  bool ok = false;
  std::string error;
  BoundsReport report;
};

struct BoundsRun {
  std::int64_t origin_multiplicity = 0;
  std::vector<BoundsSlot> slots;
  std::vector<std::string> warnings;
};

// Pure computation stages (no file output).
GaugeRun compute_gauge(const ScenarioConfig& cfg);
ZerosRun compute_zeros(const ScenarioConfig& cfg);
BoundsRun compute_bounds(const ScenarioConfig& cfg);

// Full commands: compute, then write the scenario's files under cfg.out_dir.
// Throw ConfigError / NumericError / IoError on failure.
void cmd_gauge(const ScenarioConfig& cfg);
void cmd_zeros(const ScenarioConfig& cfg);
void cmd_bounds(const ScenarioConfig& cfg);
void cmd_report(const ScenarioConfig& cfg);

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

}  // namespace sz
