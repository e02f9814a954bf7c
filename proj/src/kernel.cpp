#include "seczeros/kernel.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "seczeros/errors.hpp"

namespace sz {

double entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("entropy: argument must lie in [0,1]");
  }
  double h = 0.0;
  if (x > 0.0) h += x * std::log(1.0 / x);
  if (x < 1.0) h += (1.0 - x) * std::log(1.0 / (1.0 - x));
  return h;
}

double log_binomial_upper(std::int64_t n, std::int64_t k) {
  if (n <= 0 || k < 0 || k > n) {
    throw DomainError("log_binomial_upper: need 0 <= k <= n, n >= 1");
  }
  return static_cast<double>(n) * entropy(static_cast<double>(k) / static_cast<double>(n));
}

namespace {

void binomial_mpz(mpz_t out, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial: need 0 <= k <= n");
  }
  mpz_bin_uiui(out, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

}  // namespace

Real binomial(std::int64_t n, std::int64_t k, mpfr_prec_t prec) {
  mpz_t b;
  mpz_init(b);
  binomial_mpz(b, n, k);
  Real r(prec);
  mpfr_set_z(r.raw(), b, MPFR_RNDN);
  mpz_clear(b);
  return r;
}

double log_binomial(std::int64_t n, std::int64_t k) {
  Real b = binomial(n, k, 128);
  return log(b).to_double();
}

namespace {

// f(x) = lhs*x^d - sum_j c_j*x^{e_j}, evaluated at x = exp(t).
Real eval_diff(const Real& lhs, std::int64_t d, const std::vector<PowerTerm>& rhs,
               const Real& t) {
  Real x = exp(t);
  Real acc = lhs * pow_si(x, d);
  for (const auto& term : rhs) acc -= term.coeff * pow_si(x, term.degree);
  return acc;
}

// d/dt f(exp(t)) = d*lhs*x^d - sum_j e_j*c_j*x^{e_j}.
Real eval_diff_deriv(const Real& lhs, std::int64_t d, const std::vector<PowerTerm>& rhs,
                     const Real& t) {
  Real x = exp(t);
  mpfr_prec_t p = t.prec();
  Real acc = Real::of(d, p) * lhs * pow_si(x, d);
  for (const auto& term : rhs) {
    acc -= Real::of(term.degree, p) * term.coeff * pow_si(x, term.degree);
  }
  return acc;
}

}  // namespace

Real positive_root(const Real& lhs_coeff, std::int64_t lhs_degree,
                   const std::vector<PowerTerm>& rhs_terms, double rel_tol) {
  if (lhs_coeff.is_nan() || lhs_coeff.is_inf() || lhs_coeff.sign() <= 0) {
    throw DomainError("positive_root: left-hand coefficient must be finite and positive");
  }
  // Merge duplicate degrees and drop zero coefficients.
  std::map<std::int64_t, Real> merged;
  for (const auto& term : rhs_terms) {
    if (term.coeff.is_nan() || term.coeff.is_inf() || term.coeff.sign() < 0) {
      throw DomainError("positive_root: right-hand coefficients must be finite and >= 0");
    }
    if (term.coeff.is_zero()) continue;
    if (term.degree == lhs_degree) {
      throw DomainError("positive_root: right-hand degree equals left-hand degree");
    }
    auto it = merged.find(term.degree);
    if (it == merged.end()) {
      merged.emplace(term.degree, term.coeff);
    } else {
      it->second += term.coeff;
    }
  }
  if (merged.empty()) {
    throw NumericError("positive_root: all right-hand coefficients are zero, no root");
  }
  bool below = merged.begin()->first < lhs_degree;
  bool above = merged.rbegin()->first > lhs_degree;
  if (below && above) {
    throw DomainError(
        "positive_root: right-hand degrees must lie on one side of the left-hand degree");
  }

  mpfr_prec_t work = lhs_coeff.prec();
  std::vector<PowerTerm> rhs;
  rhs.reserve(merged.size());
  for (auto& [deg, coeff] : merged) {
    work = std::max(work, coeff.prec());
    rhs.push_back({std::move(coeff), deg});
  }
  work += 32;

  Real lhs(work);
  lhs = lhs_coeff;
  double log_lhs = log(lhs).to_double();

  // Per-term balance exponents t_j with lhs*x^d = c_j*x^{e_j}; the root's log
  // sits within an O(log #terms / |d - e|) neighborhood of their span.
  double t_min = std::numeric_limits<double>::infinity();
  double t_max = -std::numeric_limits<double>::infinity();
  for (const auto& term : rhs) {
    double tj = (log(term.coeff).to_double() - log_lhs) /
                static_cast<double>(lhs_degree - term.degree);
    t_min = std::min(t_min, tj);
    t_max = std::max(t_max, tj);
  }
  double pad = std::log(static_cast<double>(rhs.size())) + 1.0;
  Real lo = Real::of(t_min - pad, work);
  Real hi = Real::of(t_max + pad, work);

  int f_lo = eval_diff(lhs, lhs_degree, rhs, lo).sign();
  int f_hi = eval_diff(lhs, lhs_degree, rhs, hi).sign();
  if (f_lo == 0) return exp(lo);
  if (f_hi == 0) return exp(hi);
  Real step = Real::of(2.0, work);
  for (int iter = 0; f_lo == f_hi; ++iter) {
    if (iter >= 64 || std::abs(lo.to_double()) > 4e9 || std::abs(hi.to_double()) > 4e9) {
      throw NumericError("positive_root: failed to bracket a sign change");
    }
    lo -= step;
    hi += step;
    step += step;
    f_lo = eval_diff(lhs, lhs_degree, rhs, lo).sign();
    f_hi = eval_diff(lhs, lhs_degree, rhs, hi).sign();
    if (f_lo == 0) return exp(lo);
    if (f_hi == 0) return exp(hi);
  }

  Real half = Real::of(0.5, work);
  Real width_goal = Real::of(1e-2, work);
  while (hi - lo > width_goal) {
    Real mid = (lo + hi) * half;
    int f_mid = eval_diff(lhs, lhs_degree, rhs, mid).sign();
    if (f_mid == 0) return exp(mid);
    if (f_mid == f_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  Real t = (lo + hi) * half;
  Real tol = Real::of(0.5 * rel_tol, work);
  for (int iter = 0; iter < 200; ++iter) {
    Real f = eval_diff(lhs, lhs_degree, rhs, t);
    Real scale = lhs * pow_si(exp(t), lhs_degree);
    if (abs(f) <= tol * scale) return exp(t);
    Real df = eval_diff_deriv(lhs, lhs_degree, rhs, t);
    if (df.is_zero()) {
      t = (lo + hi) * half;
      continue;
    }
    if (f.sign() == f_lo) {
      lo = t;
    } else {
      hi = t;
    }
    Real next = t - f / df;
    if (next <= lo || next >= hi) next = (lo + hi) * half;
    t = next;
  }
  throw NumericError("positive_root: Newton polish did not reach the residual tolerance");
}

}  // namespace sz
