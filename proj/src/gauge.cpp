#include "seczeros/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "seczeros/errors.hpp"
#include "seczeros/format.hpp"

namespace sz {

namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in (0,1]");
  }
}

// First window index.  The nudge keeps ceil from skipping past an endpoint
// when (1-gamma)*n is mathematically integral but rounds a hair above it.
std::int64_t window_lo(std::int64_t n, double gamma) {
  double edge = (1.0 - gamma) * static_cast<double>(n);
  auto lo = static_cast<std::int64_t>(std::ceil(edge - 1e-9));
  return std::max<std::int64_t>(1, lo);
}

void check_grids(const std::vector<std::int64_t>& n_grid, const std::vector<double>& gamma_grid) {
  if (n_grid.empty()) throw DomainError("n-grid must be nonempty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) throw DomainError("n-grid entries must be >= 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw DomainError("n-grid must be strictly increasing");
    }
  }
  if (gamma_grid.empty()) throw DomainError("gamma grid must be nonempty");
  for (std::size_t j = 0; j < gamma_grid.size(); ++j) {
    check_gamma(gamma_grid[j]);
    if (j > 0 && gamma_grid[j] >= gamma_grid[j - 1]) {
      throw DomainError("gamma grid must be strictly decreasing");
    }
  }
}

}  // namespace

double window_max(const CoefficientSequence& seq, std::int64_t n, double gamma) {
  if (n < 1) throw DomainError("window_max: n must be >= 1");
  check_gamma(gamma);
  double best = kMinusInfinity;
  for (std::int64_t k = window_lo(n, gamma); k <= n; ++k) {
    best = std::max(best, log_alpha(seq, k));
  }
  return best;
}

double prefix_max(const CoefficientSequence& seq, std::int64_t n) {
  if (n < 1) throw DomainError("prefix_max: n must be >= 1");
  double best = kMinusInfinity;
  for (std::int64_t k = 1; k <= n; ++k) {
    best = std::max(best, log_alpha(seq, k));
  }
  return best;
}

double ratio_L(const CoefficientSequence& seq, std::int64_t n, double gamma) {
  double prefix = prefix_max(seq, n);
  if (is_log_zero(prefix)) {
    throw NumericError("ratio_L: A_n = 0, the ratio is undefined");
  }
  double window = window_max(seq, n, gamma);
  if (is_log_zero(window)) return 0.0;
  return std::min(1.0, std::exp(window - prefix));
}

GaugeProfile profile(const CoefficientSequence& seq, const std::vector<std::int64_t>& n_grid,
                     const std::vector<double>& gamma_grid, double tail_fraction) {
  check_grids(n_grid, gamma_grid);
  if (!(tail_fraction > 0.0 && tail_fraction < 1.0)) {
    throw DomainError("tail fraction must lie in (0,1)");
  }

  std::int64_t n_max = n_grid.back();
  std::vector<double> la(static_cast<std::size_t>(n_max) + 1, kMinusInfinity);
  for (std::int64_t k = 1; k <= n_max; ++k) {
    la[static_cast<std::size_t>(k)] = log_alpha(seq, k);
  }
  std::vector<double> prefix(la.size(), kMinusInfinity);
  for (std::int64_t k = 1; k <= n_max; ++k) {
    prefix[static_cast<std::size_t>(k)] =
        std::max(prefix[static_cast<std::size_t>(k - 1)], la[static_cast<std::size_t>(k)]);
  }

  GaugeProfile prof;
  prof.sequence_name = seq.name;
  prof.n_grid = n_grid;
  prof.gamma_grid = gamma_grid;
  prof.tail_fraction = tail_fraction;
  prof.rows.reserve(n_grid.size());
  for (std::int64_t n : n_grid) {
    GaugeRow row;
    row.n = n;
    row.log_alpha = la[static_cast<std::size_t>(n)];
    row.log_prefix = prefix[static_cast<std::size_t>(n)];
    if (is_log_zero(row.log_prefix)) {
      throw NumericError("profile: A_n = 0 at n = " + std::to_string(n));
    }
    for (double gamma : gamma_grid) {
      double w = kMinusInfinity;
      for (std::int64_t k = window_lo(n, gamma); k <= n; ++k) {
        w = std::max(w, la[static_cast<std::size_t>(k)]);
      }
      row.log_window.push_back(w);
      row.ratio.push_back(is_log_zero(w) ? 0.0 : std::min(1.0, std::exp(w - row.log_prefix)));
    }
    prof.rows.push_back(std::move(row));
  }

  std::size_t rows = prof.rows.size();
  std::size_t gammas = gamma_grid.size();
  prof.running_inf.assign(rows, std::vector<double>(gammas, 1.0));
  for (std::size_t j = 0; j < gammas; ++j) {
    double inf = prof.rows[rows - 1].ratio[j];
    prof.running_inf[rows - 1][j] = inf;
    for (std::size_t i = rows - 1; i-- > 0;) {
      inf = std::min(inf, prof.rows[i].ratio[j]);
      prof.running_inf[i][j] = inf;
    }
  }

  double tail_start = (1.0 - tail_fraction) * static_cast<double>(n_max);
  std::size_t tail_row = rows - 1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (static_cast<double>(prof.rows[i].n) >= tail_start) {
      tail_row = i;
      break;
    }
  }
  prof.l_hat.assign(gammas, 1.0);
  for (std::size_t j = 0; j < gammas; ++j) prof.l_hat[j] = prof.running_inf[tail_row][j];
  prof.g_hat = prof.l_hat.back();
  return prof;
}

OstrowskiReport ostrowski_gaps(const CoefficientSequence& seq, double radius,
                               const std::vector<std::int64_t>& n_grid,
                               const std::vector<double>& gamma_grid, double tail_fraction) {
  if (!(radius > 0.0) || std::isinf(radius)) {
    throw DomainError("ostrowski_gaps: radius must be finite and positive");
  }
  check_grids(n_grid, gamma_grid);
  std::int64_t n_max = n_grid.back();
  double tail_start = (1.0 - tail_fraction) * static_cast<double>(n_max);
  double threshold = 1.0 / radius;

  OstrowskiReport report;
  report.radius = radius;
  for (double gamma : gamma_grid) {
    OstrowskiGammaRow row;
    row.gamma = gamma;
    double inf = std::numeric_limits<double>::infinity();
    for (std::int64_t n : n_grid) {
      if (static_cast<double>(n) < tail_start) continue;
      double w = window_max(seq, n, gamma);
      inf = std::min(inf, is_log_zero(w) ? 0.0 : std::exp(w));
    }
    row.tail_inf_window = inf;
    row.triggered = inf < threshold;
    report.has_gaps = report.has_gaps || row.triggered;
    report.rows.push_back(row);
  }
  return report;
}

std::string gauge_csv_text(const GaugeProfile& prof) {
  std::ostringstream out;
  out << "n,log_alpha,log_A";
  for (double gamma : prof.gamma_grid) {
    out << ",log_A_g" << fmt_label(gamma) << ",L_g" << fmt_label(gamma);
  }
  out << "\n";
  for (const GaugeRow& row : prof.rows) {
    out << row.n << "," << fmt_g17(row.log_alpha) << "," << fmt_g17(row.log_prefix);
    for (std::size_t j = 0; j < prof.gamma_grid.size(); ++j) {
      out << "," << fmt_g17(row.log_window[j]) << "," << fmt_g17(row.ratio[j]);
    }
    out << "\n";
  }
  return out.str();
}

void write_gauge_csv(const GaugeProfile& prof, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << gauge_csv_text(prof);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sz
