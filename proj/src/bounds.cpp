#include "seczeros/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "seczeros/errors.hpp"
#include "seczeros/format.hpp"
#include "seczeros/kernel.hpp"

namespace sz {

namespace {

std::int64_t formal_degree(const std::vector<Complex>& coeffs) {
  if (coeffs.size() < 2) {
    throw DomainError("bound: polynomial degree must be >= 1");
  }
  return static_cast<std::int64_t>(coeffs.size()) - 1;
}

mpfr_prec_t coeff_prec(const std::vector<Complex>& coeffs) {
  mpfr_prec_t p = 2;
  for (const Complex& c : coeffs) p = std::max(p, c.prec());
  return p;
}

}  // namespace

Real cauchy_bound(const std::vector<Complex>& coeffs) {
  std::int64_t n = formal_degree(coeffs);
  if (coeffs.back().is_zero()) {
    throw DomainError("cauchy_bound: leading coefficient must be nonzero");
  }
  std::vector<PowerTerm> rhs;
  for (std::int64_t k = 0; k < n; ++k) {
    const Complex& c = coeffs[static_cast<std::size_t>(k)];
    if (!c.is_zero()) rhs.push_back({abs(c), k});
  }
  if (rhs.empty()) return Real::of(0.0, coeff_prec(coeffs));
  return positive_root(abs(coeffs.back()), n, rhs);
}

Real van_vleck_bound(const std::vector<Complex>& coeffs, std::int64_t m) {
  std::int64_t n = formal_degree(coeffs);
  if (coeffs.back().is_zero()) {
    throw DomainError("van_vleck_bound: leading coefficient must be nonzero");
  }
  if (m < 1 || m > n) throw DomainError("van_vleck_bound: need 1 <= m <= n");
  mpfr_prec_t prec = coeff_prec(coeffs);
  std::vector<PowerTerm> rhs;
  for (std::int64_t j = 0; j < m; ++j) {
    const Complex& c = coeffs[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    rhs.push_back({binomial(n - j - 1, m - j - 1, prec) * abs(c), j});
  }
  if (rhs.empty()) return Real::of(0.0, prec);
  return positive_root(abs(coeffs.back()), n, rhs);
}

std::vector<Complex> reverse_companion(const std::vector<Complex>& coeffs) {
  return {coeffs.rbegin(), coeffs.rend()};
}

Real outward_radius(const std::vector<Complex>& coeffs, std::int64_t m) {
  std::int64_t n = formal_degree(coeffs);
  if (coeffs.front().is_zero()) {
    throw DomainError("outward_radius: constant coefficient must be nonzero");
  }
  if (m < 1 || m > n) throw DomainError("outward_radius: need 1 <= m <= n");
  mpfr_prec_t prec = coeff_prec(coeffs);
  std::vector<PowerTerm> rhs;
  for (std::int64_t k = n - m + 1; k <= n; ++k) {
    const Complex& c = coeffs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    rhs.push_back({binomial(k - 1, k - (n - m) - 1, prec) * abs(c), k});
  }
  if (rhs.empty()) {
    // Degree deficit: the top m formal coefficients vanish, so >= m zeros sit
    // at infinity and every finite radius qualifies.
    return Real::of(std::numeric_limits<double>::infinity(), prec);
  }
  return positive_root(abs(coeffs.front()), 0, rhs);
}

PestCheck check_pest(const std::vector<Complex>& coeffs, std::int64_t m, const Real& v) {
  std::int64_t n = formal_degree(coeffs);
  if (coeffs.front().is_zero()) {
    throw DomainError("check_pest: constant coefficient must be nonzero");
  }
  if (m < 1 || m > n) throw DomainError("check_pest: need 1 <= m <= n");
  double lhs = log(abs(coeffs.front())).to_double();
  double window_max_log = kMinusInfinity;
  for (std::int64_t k = n - m + 1; k <= n; ++k) {
    const Complex& c = coeffs[static_cast<std::size_t>(k)];
    if (!c.is_zero()) window_max_log = std::max(window_max_log, log(abs(c)).to_double());
  }
  PestCheck result;
  if (v.is_inf()) {
    // Infinite-radius sentinel: the window vanished, >= m zeros sit at
    // infinity, and the inequality holds vacuously.
    result.log_slack = std::numeric_limits<double>::infinity();
    result.holds = true;
    return result;
  }
  Real one = Real::of(1.0, v.prec());
  double log_max1v = log(max(one, v)).to_double();
  double nH = static_cast<double>(n) *
              entropy(static_cast<double>(m - 1) / static_cast<double>(n));
  double rhs = nH + window_max_log + static_cast<double>(n) * log_max1v;
  result.log_slack = rhs - lhs;
  result.holds = result.log_slack >= -1e-12;
  return result;
}

BoundsReport bounds_report(const NormalizedSection& section, const std::vector<std::int64_t>& ms,
                           const SphericalRootSet* roots) {
  std::int64_t deg = section.effective_degree;
  if (deg < 1) throw DomainError("bounds_report: effective degree must be >= 1");
  if (section.coeffs.front().is_zero()) {
    throw DomainError("bounds_report: constant term is zero; strip the origin first");
  }
  std::vector<Complex> coeffs(section.coeffs.begin(),
                              section.coeffs.begin() + static_cast<std::ptrdiff_t>(deg) + 1);

  BoundsReport report;
  report.n = section.n;
  report.degree = deg;
  Real cauchy = cauchy_bound(coeffs);
  report.cauchy = cauchy.to_double();

  std::set<std::int64_t> wanted;
  for (std::int64_t m : ms) {
    if (m < 1 || m > deg) throw DomainError("bounds_report: m out of range");
    wanted.insert(m);
  }
  for (std::int64_t m : wanted) {
    BoundsRow row;
    row.m = m;
    Real V = van_vleck_bound(coeffs, m);
    Real v = outward_radius(coeffs, m);
    row.van_vleck = V.to_double();
    row.outward = v.to_double();
    PestCheck pest = check_pest(coeffs, m, v);
    row.pest_slack = pest.log_slack;
    row.pest_holds = pest.holds;
    if (roots != nullptr) {
      mpfr_prec_t prec = section.precision;
      Real vv_hi = V * Real::of(1.0 + 1e-10, prec);
      Real vv_lo = v.is_inf() ? v : v * Real::of(1.0 - 1e-10, prec);
      std::int64_t within = 0, outside = 0;
      for (const Complex& w : roots->finite_roots) {
        Real aw = abs(w);
        if (aw <= vv_hi) ++within;
        if (!vv_lo.is_inf() && aw >= vv_lo) ++outside;
      }
      row.roots_within_V = within;
      row.roots_outside_v = outside;
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string bounds_csv_text(const BoundsReport& report) {
  std::ostringstream out;
  out << "# n=" << report.n << " degree=" << report.degree << " cauchy_C="
      << fmt_g17(report.cauchy) << "\n";
  out << "m,V_m,v_m,pest_slack,roots_within_V,roots_outside_v\n";
  for (const BoundsRow& row : report.rows) {
    out << row.m << "," << fmt_g17(row.van_vleck) << "," << fmt_g17(row.outward) << ","
        << fmt_g17(row.pest_slack) << ",";
    if (row.roots_within_V >= 0) out << row.roots_within_V;
    out << ",";
    if (row.roots_outside_v >= 0) out << row.roots_outside_v;
    out << "\n";
  }
  return out.str();
}

void write_bounds_csv(const BoundsReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << bounds_csv_text(report);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sz
