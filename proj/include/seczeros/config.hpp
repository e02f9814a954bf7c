#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seczeros/gauge.hpp"
#include "seczeros/sections.hpp"
#include "seczeros/series.hpp"

namespace sz {

// One experiment scenario.  Parsed from a key = value config file organized in
// [section] blocks; CLI flags override file values.  Validation happens in
// validate(), which reports field-level messages.
struct ScenarioConfig {
  // [sequence]
  std::string family;
  std::map<std::string, std::string> params;
  std::string coeff_file;

  // [grid]
  std::vector<std::int64_t> n_grid;
  std::vector<double> gamma_grid = kDefaultGammaGrid;
  double tail_fraction = 0.5;

  // [solver]
  NormalizationMode mode = NormalizationMode::kMaxGauge;
  std::int64_t precision = 128;
  int max_iter = 200;
  double rel_tol = 1e-25;
  std::int64_t samples_per_degree = 8;

  // [gaps]
  std::optional<double> radius;

  // [bounds]
  double bounds_gamma = 0.1;
  bool bounds_counts = true;

  // [run]
  std::string out_dir = "out";
  int workers = 0;
  bool strip = true;
  bool dump_sections = false;

  // [verdict]
  double verdict_discrepancy = 0.1;
  double verdict_infinity = 0.02;
  double verdict_annulus = 0.8;
};

ScenarioConfig parse_config_file(const std::string& path);

// Applies one dotted override, e.g. ("sequence.family", "power") or a family
// parameter ("sequence.param", "p=1").  Shared by the file parser and CLI.
void apply_config_key(ScenarioConfig& cfg, const std::string& section, const std::string& key,
                      const std::string& value, const std::string& where);

// Grid used when only an n cap is given: powers of two and three-halves
// points 3*2^{j-1}, capped at n_max, plus n_max itself.
std::vector<std::int64_t> default_n_grid(std::int64_t n_max);

void validate(const ScenarioConfig& cfg);

// Instantiates the configured coefficient sequence.
CoefficientSequence make_sequence(const ScenarioConfig& cfg);

// Canonical key = value echo of the scenario, used in manifests.
std::string canonical_config_text(const ScenarioConfig& cfg);

}  // namespace sz
