#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "seczeros/kernel.hpp"

namespace sz {

// One power-series coefficient in log-polar form: a_k = exp(log_mag) * e^{i*phase}.
// log_mag = -infinity encodes an exactly-zero coefficient; phase lies in [0, 2pi)
// and is meaningful only for nonzero coefficients.
struct LogCoefficient {
  double log_mag = kMinusInfinity;
  double phase = 0.0;

  bool is_zero() const { return is_log_zero(log_mag); }
};

LogCoefficient make_coefficient(double log_mag, double phase);

// A coefficient sequence k |-> a_k with optional declared metadata.  The
// generator is pure: repeated evaluation at the same index gives the same
// value, so sequences are safe to share across threads.
struct CoefficientSequence {
  std::string name;
  std::function<LogCoefficient(std::int64_t)> generator;
  std::optional<double> declared_radius;
  std::optional<double> declared_gauge;

  LogCoefficient at(std::int64_t k) const { return generator(k); }
};

// a_m = (rho^n)! when m = rho^n for some n >= 0, else 0.
CoefficientSequence family_lacunary(std::int64_t rho);

// a_m = m! when m = n^kexp for some n >= 0, else 0.
CoefficientSequence family_dense(std::int64_t kexp);

// a_n = n^n when n is a power of two, else 1 + (t*n + sqrt(n))^n.
CoefficientSequence family_gauge_t(double t);

// a_n = n^{p*n} for n >= 1, a_0 = 1.
CoefficientSequence family_power(double p);

// a_k = r^k; radius of convergence 1/r.
CoefficientSequence family_geometric(double r);

// Sequence backed by explicit records from a coefficient file (see read format
// below); indices absent from the file are zero coefficients.
CoefficientSequence family_from_file(const std::string& path);

// Writes indices 0..k_max as `k log_mag phase` lines; zero coefficients are
// omitted (absence encodes zero).  Values print with round-trip fidelity.
void write_coefficient_file(const CoefficientSequence& seq, std::int64_t k_max,
                            const std::string& path);

// log alpha_k = log|a_k| / k for k >= 1; -infinity for a zero coefficient.
double log_alpha(const CoefficientSequence& seq, std::int64_t k);

// alpha_k = |a_k|^{1/k}.
double alpha(const CoefficientSequence& seq, std::int64_t k);

}  // namespace sz
