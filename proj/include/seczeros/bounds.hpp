#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seczeros/bigfloat.hpp"
#include "seczeros/roots.hpp"
#include "seczeros/sections.hpp"

namespace sz {

// Cauchy radius: unique positive root of |b_n| x^n = sum_{k<n} |b_k| x^k.
// Every root of the polynomial lies in the closed disk of this radius.
// Returns 0 when all lower coefficients vanish (all roots at the origin).
Real cauchy_bound(const std::vector<Complex>& coeffs);

// Van Vleck radius V_m: unique positive root of
// |b_n| x^n = sum_{j<m} C(n-j-1, m-j-1) |b_j| x^j; at least m roots lie in the
// closed disk.  Coincides with the Cauchy radius at m = n.  Returns 0 when all
// of b_0..b_{m-1} vanish (at least m roots at the origin).
Real van_vleck_bound(const std::vector<Complex>& coeffs, std::int64_t m);

// Coefficients of z^n P(1/z); zeros map to reciprocals.
std::vector<Complex> reverse_companion(const std::vector<Complex>& coeffs);

// Outward radius v_m: unique positive root of
// |b_0| = sum_{k=n-m+1}^{n} C(k-1, k-(n-m)-1) |b_k| x^k; at least m roots have
// modulus >= v_m.  Returns +infinity when the coefficient window is all zero
// (the degree deficit already parks >= m zeros at infinity).
Real outward_radius(const std::vector<Complex>& coeffs, std::int64_t m);

struct PestCheck {
  bool holds = false;
  double log_slack = 0.0;
};

// Checks log|b_0| <= n*H((m-1)/n) + log max_{n-m+1<=k<=n} |b_k|
//                    + n*log max{1, v} in log domain; slack = RHS - LHS.
PestCheck check_pest(const std::vector<Complex>& coeffs, std::int64_t m, const Real& v);

struct BoundsRow {
  std::int64_t m = 0;
  double van_vleck = 0.0;
  double outward = 0.0;
  double pest_slack = 0.0;
  bool pest_holds = false;
  // Filled when a root set is supplied; -1 otherwise.
  std::int64_t roots_within_V = -1;
  std::int64_t roots_outside_v = -1;
};

struct BoundsReport {
  std::int64_t n = 0;
  std::int64_t degree = 0;
  double cauchy = 0.0;
  std::vector<BoundsRow> rows;
};

// Rows for each m over the section's deflation-free coefficient list
// c_0..c_degree, with root-containment counts when roots are supplied.
BoundsReport bounds_report(const NormalizedSection& section, const std::vector<std::int64_t>& ms,
                           const SphericalRootSet* roots);

// CSV: header comment with n/degree/cauchy, then m,V_m,v_m,pest_slack,counts.
void write_bounds_csv(const BoundsReport& report, const std::string& path);
std::string bounds_csv_text(const BoundsReport& report);

}  // namespace sz
