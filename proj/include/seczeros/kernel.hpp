#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "seczeros/bigfloat.hpp"

namespace sz {

// log 0: the magnitude slot of an exactly-zero coefficient.
inline constexpr double kMinusInfinity = -std::numeric_limits<double>::infinity();

inline bool is_log_zero(double log_mag) { return log_mag == kMinusInfinity; }

// H(x) = x log(1/x) + (1-x) log(1/(1-x)), with H(0) = H(1) = 0.
double entropy(double x);

// n*H(k/n) >= log C(n,k).
double log_binomial_upper(std::int64_t n, std::int64_t k);

// Exact C(n,k) by integer arithmetic, converted to a Real of precision prec.
Real binomial(std::int64_t n, std::int64_t k, mpfr_prec_t prec);

// log C(n,k) from the exact integer value.
double log_binomial(std::int64_t n, std::int64_t k);

struct PowerTerm {
  Real coeff;
  std::int64_t degree;
};

// Unique positive root of  lhs_coeff * x^lhs_degree = sum_j coeff_j * x^degree_j.
// All right-hand degrees must lie strictly on one side of lhs_degree, which makes
// the coefficient sequence of the difference have a single sign change and the
// positive root unique.  Bisection on log x brackets the root, damped Newton
// polishes it; the result satisfies |lhs - rhs| <= rel_tol * lhs at x*.
Real positive_root(const Real& lhs_coeff, std::int64_t lhs_degree,
                   const std::vector<PowerTerm>& rhs_terms, double rel_tol = 1e-20);

}  // namespace sz
