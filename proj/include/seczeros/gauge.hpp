#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seczeros/series.hpp"

namespace sz {

// Per-n slice of a gauge profile.  Vector entries are parallel to the profile's
// gamma grid.
struct GaugeRow {
  std::int64_t n = 0;
  double log_alpha = kMinusInfinity;
  double log_prefix = kMinusInfinity;
  std::vector<double> log_window;
  std::vector<double> ratio;
};

// Finite-n picture of the gauge: window/prefix maxima per n, the ratio
// L_n(gamma), suffix infima of the ratio as a liminf proxy, and the summary
// estimates L_hat(gamma) and G_hat.
struct GaugeProfile {
  std::string sequence_name;
  std::vector<std::int64_t> n_grid;
  std::vector<double> gamma_grid;
  double tail_fraction = 0.5;
  std::vector<GaugeRow> rows;
  // running_inf[i][j] = min of rows[i..].ratio[j]; the l_hat entries read this
  // curve at the first row inside the tail window.
  std::vector<std::vector<double>> running_inf;
  std::vector<double> l_hat;
  double g_hat = 0.0;
};

struct OstrowskiGammaRow {
  double gamma = 0.0;
  double tail_inf_window = 0.0;
  bool triggered = false;
};

struct OstrowskiReport {
  double radius = 0.0;
  std::vector<OstrowskiGammaRow> rows;
  bool has_gaps = false;
};

inline const std::vector<double> kDefaultGammaGrid = {0.5, 0.25, 0.1, 0.05, 0.02};

// log A_n(gamma) = max of log alpha_k over ceil((1-gamma)*n) <= k <= n,
// clamped to k >= 1; -infinity when every window coefficient vanishes.
double window_max(const CoefficientSequence& seq, std::int64_t n, double gamma);

// log A_n = max of log alpha_k over 1 <= k <= n.
double prefix_max(const CoefficientSequence& seq, std::int64_t n);

// L_n(gamma) = A_n(gamma) / A_n in [0,1]; exactly 0 on an all-zero window.
double ratio_L(const CoefficientSequence& seq, std::int64_t n, double gamma);

// Evaluates the gauge machinery over the grid.  L_hat(gamma) is the infimum of
// L_n(gamma) over the tail {n >= (1-tail_fraction)*max n}; G_hat is L_hat at
// the smallest gamma.
GaugeProfile profile(const CoefficientSequence& seq, const std::vector<std::int64_t>& n_grid,
                     const std::vector<double>& gamma_grid = kDefaultGammaGrid,
                     double tail_fraction = 0.5);

// Flags Ostrowski gaps for a sequence of radius R: some gamma whose window
// maxima A_n(gamma) drop below 1/R in the tail of the grid.
OstrowskiReport ostrowski_gaps(const CoefficientSequence& seq, double radius,
                               const std::vector<std::int64_t>& n_grid,
                               const std::vector<double>& gamma_grid = kDefaultGammaGrid,
                               double tail_fraction = 0.5);

// CSV: n, log_alpha, log_A, then one (log_A_gamma, L) column pair per gamma.
void write_gauge_csv(const GaugeProfile& prof, const std::string& path);
std::string gauge_csv_text(const GaugeProfile& prof);

}  // namespace sz
