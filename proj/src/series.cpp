#include "seczeros/series.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "seczeros/errors.hpp"

namespace sz {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double normalize_phase(double phase) {
  double p = std::fmod(phase, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

// Largest n with n = rho^j <= k, or 0 if k is not a power of rho.
bool is_power_of(std::int64_t k, std::int64_t rho) {
  if (k < 1) return false;
  while (k % rho == 0) k /= rho;
  return k == 1;
}

// Exact test for m = n^kexp with integer n >= 0.
bool is_perfect_power(std::int64_t m, std::int64_t kexp, std::int64_t* root_out) {
  if (m < 0) return false;
  double guess = std::pow(static_cast<double>(m), 1.0 / static_cast<double>(kexp));
  for (std::int64_t n = std::max<std::int64_t>(0, static_cast<std::int64_t>(guess) - 2);
       n <= static_cast<std::int64_t>(guess) + 2; ++n) {
    std::int64_t acc = 1;
    bool overflow = false;
    for (std::int64_t i = 0; i < kexp; ++i) {
      if (n != 0 && acc > m / n) {
        overflow = true;
        break;
      }
      acc *= n;
    }
    if (!overflow && acc == m) {
      if (root_out) *root_out = n;
      return true;
    }
  }
  return false;
}

double log_factorial(std::int64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log(1 + e^L) without overflow.
double log1p_exp(double L) {
  if (L > 0.0) return L + std::log1p(std::exp(-L));
  return std::log1p(std::exp(L));
}

}  // namespace

LogCoefficient make_coefficient(double log_mag, double phase) {
  LogCoefficient c;
  c.log_mag = log_mag;
  c.phase = is_log_zero(log_mag) ? 0.0 : normalize_phase(phase);
  return c;
}

CoefficientSequence family_lacunary(std::int64_t rho) {
  if (rho < 2) throw DomainError("family_lacunary: rho must be >= 2");
  CoefficientSequence seq;
  seq.name = "lacunary(" + std::to_string(rho) + ")";
  seq.declared_radius = 0.0;
  seq.declared_gauge = 0.0;
  seq.generator = [rho](std::int64_t k) {
    if (!is_power_of(k, rho)) return LogCoefficient{};
    return make_coefficient(log_factorial(k), 0.0);
  };
  return seq;
}

CoefficientSequence family_dense(std::int64_t kexp) {
  if (kexp < 1) throw DomainError("family_dense: exponent must be >= 1");
  CoefficientSequence seq;
  seq.name = "dense(" + std::to_string(kexp) + ")";
  seq.declared_radius = 0.0;
  seq.declared_gauge = 1.0;
  seq.generator = [kexp](std::int64_t k) {
    if (!is_perfect_power(k, kexp, nullptr)) return LogCoefficient{};
    return make_coefficient(log_factorial(k), 0.0);
  };
  return seq;
}

CoefficientSequence family_gauge_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("family_gauge_t: t must lie in [0,1]");
  CoefficientSequence seq;
  std::ostringstream name;
  name << "gauge_t(" << t << ")";
  seq.name = name.str();
  seq.declared_radius = 0.0;
  seq.declared_gauge = t;
  seq.generator = [t](std::int64_t n) {
    if (n >= 1 && is_power_of(n, 2)) {
      double nn = static_cast<double>(n);
      return make_coefficient(nn * std::log(nn), 0.0);
    }
    if (n == 0) return make_coefficient(std::log(2.0), 0.0);
    double nn = static_cast<double>(n);
    double base = t * nn + std::sqrt(nn);
    return make_coefficient(log1p_exp(nn * std::log(base)), 0.0);
  };
  return seq;
}

CoefficientSequence family_power(double p) {
  if (!(p > 0.0)) throw DomainError("family_power: p must be positive");
  CoefficientSequence seq;
  std::ostringstream name;
  name << "power(" << p << ")";
  seq.name = name.str();
  seq.declared_radius = 0.0;
  seq.declared_gauge = 1.0;
  seq.generator = [p](std::int64_t n) {
    if (n == 0) return make_coefficient(0.0, 0.0);
    double nn = static_cast<double>(n);
    return make_coefficient(p * nn * std::log(nn), 0.0);
  };
  return seq;
}

CoefficientSequence family_geometric(double r) {
  if (!(r > 0.0)) throw DomainError("family_geometric: ratio must be positive");
  CoefficientSequence seq;
  std::ostringstream name;
  name << "geometric(" << r << ")";
  seq.name = name.str();
  seq.declared_radius = 1.0 / r;
  double logr = std::log(r);
  seq.generator = [logr](std::int64_t k) {
    return make_coefficient(static_cast<double>(k) * logr, 0.0);
  };
  return seq;
}

CoefficientSequence family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coefficient file: " + path);
  auto records = std::make_shared<std::map<std::int64_t, LogCoefficient>>();
  std::string line;
  std::int64_t line_no = 0;
  std::int64_t last_index = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::int64_t k;
    std::string mag_tok;
    double phase;
    if (!(ls >> k >> mag_tok >> phase)) {
      throw IoError(path + ":" + std::to_string(line_no) + ": malformed record");
    }
    std::string trailing;
    if (ls >> trailing) {
      throw IoError(path + ":" + std::to_string(line_no) + ": trailing data");
    }
    if (k < 0) throw IoError(path + ":" + std::to_string(line_no) + ": negative index");
    if (k <= last_index) {
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": indices must be strictly increasing (duplicate or out of order)");
    }
    last_index = k;
    double log_mag;
    if (mag_tok == "-inf") {
      log_mag = kMinusInfinity;
    } else {
      try {
        std::size_t pos = 0;
        log_mag = std::stod(mag_tok, &pos);
        if (pos != mag_tok.size()) throw std::invalid_argument(mag_tok);
      } catch (const std::exception&) {
        throw IoError(path + ":" + std::to_string(line_no) + ": bad log magnitude '" +
                      mag_tok + "'");
      }
    }
    if (std::isnan(log_mag) || log_mag == -kMinusInfinity) {
      throw IoError(path + ":" + std::to_string(line_no) + ": log magnitude must be finite or -inf");
    }
    if (!std::isfinite(phase)) {
      throw IoError(path + ":" + std::to_string(line_no) + ": phase must be finite");
    }
    (*records)[k] = make_coefficient(log_mag, phase);
  }
  CoefficientSequence seq;
  seq.name = "file(" + path + ")";
  seq.generator = [records](std::int64_t k) {
    auto it = records->find(k);
    return it == records->end() ? LogCoefficient{} : it->second;
  };
  return seq;
}

void write_coefficient_file(const CoefficientSequence& seq, std::int64_t k_max,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "# coefficient records: k log_mag phase\n";
  char buf[80];
  for (std::int64_t k = 0; k <= k_max; ++k) {
    LogCoefficient c = seq.at(k);
    if (c.is_zero()) continue;
    std::snprintf(buf, sizeof(buf), "%lld %.17g %.17g\n", static_cast<long long>(k),
                  c.log_mag, c.phase);
    out << buf;
  }
  if (!out) throw IoError("write failed: " + path);
}

double log_alpha(const CoefficientSequence& seq, std::int64_t k) {
  if (k < 1) throw DomainError("log_alpha: index must be >= 1");
  LogCoefficient c = seq.at(k);
  if (c.is_zero()) return kMinusInfinity;
  return c.log_mag / static_cast<double>(k);
}

double alpha(const CoefficientSequence& seq, std::int64_t k) {
  double la = log_alpha(seq, k);
  return is_log_zero(la) ? 0.0 : std::exp(la);
}

}  // namespace sz
