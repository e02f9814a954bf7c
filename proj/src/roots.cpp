#include "seczeros/roots.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "seczeros/errors.hpp"
#include "seczeros/format.hpp"

namespace sz {

namespace {

constexpr double kGolden = 0.61803398874989484820;

// p(w) and p'(w) in one Horner pass at the precision of w.
void horner2(const std::vector<Complex>& q, const Complex& w, Complex* p, Complex* dp) {
  mpfr_prec_t prec = w.prec();
  Complex b = q.back();
  Complex db = Complex::zero(prec);
  for (std::size_t k = q.size() - 1; k-- > 0;) {
    db = db * w + b;
    b = b * w + q[k];
  }
  *p = b;
  *dp = db;
}

// Lowest index with a nonzero coefficient.
std::int64_t valuation_of(const NormalizedSection& sec) {
  for (std::int64_t k = 0; k <= sec.effective_degree; ++k) {
    if (!is_log_zero(sec.log_mags[static_cast<std::size_t>(k)])) return k;
  }
  throw NumericError("root solve: section is identically zero");
}

// Deflated coefficient slice q_j = c_{v+j}, j = 0..D.
std::vector<Complex> deflated_poly(const NormalizedSection& sec, std::int64_t v) {
  std::vector<Complex> q;
  q.reserve(static_cast<std::size_t>(sec.effective_degree - v) + 1);
  for (std::int64_t k = v; k <= sec.effective_degree; ++k) {
    q.push_back(sec.coeffs[static_cast<std::size_t>(k)]);
  }
  return q;
}

struct StartCircle {
  double log_radius;
  std::int64_t count;
};

// Upper convex hull of (j, log|q_j|) over nonzero coefficients; each hull
// segment (j1,y1)-(j2,y2) contributes j2-j1 starting radii exp((y1-y2)/(j2-j1)).
std::vector<StartCircle> newton_polygon_circles(const NormalizedSection& sec, std::int64_t v) {
  std::vector<std::pair<std::int64_t, double>> pts;
  for (std::int64_t k = v; k <= sec.effective_degree; ++k) {
    double lm = sec.log_mags[static_cast<std::size_t>(k)];
    if (!is_log_zero(lm)) pts.emplace_back(k - v, lm);
  }
  std::vector<std::pair<std::int64_t, double>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Keep b only if it lies strictly above chord a-pt.
      double lhs = (b.second - a.second) * static_cast<double>(pt.first - b.first);
      double rhs = (pt.second - b.second) * static_cast<double>(b.first - a.first);
      if (lhs > rhs) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<StartCircle> circles;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    double y1 = hull[s].second, y2 = hull[s + 1].second;
    std::int64_t j1 = hull[s].first, j2 = hull[s + 1].first;
    circles.push_back({(y1 - y2) / static_cast<double>(j2 - j1), j2 - j1});
  }
  return circles;
}

std::vector<Complex> initial_points(const std::vector<StartCircle>& circles, mpfr_prec_t prec) {
  std::vector<Complex> z;
  std::int64_t i = 0;
  for (const StartCircle& circle : circles) {
    Real r = exp(Real::of(circle.log_radius, prec));
    for (std::int64_t c = 0; c < circle.count; ++c, ++i) {
      double frac = std::fmod(0.5 + static_cast<double>(i + 1) * kGolden, 1.0);
      double theta = 6.283185307179586 * frac;
      z.push_back(Complex(r * Real::of(std::cos(theta), prec), r * Real::of(std::sin(theta), prec)));
    }
  }
  return z;
}

bool complex_less(const Complex& a, const Complex& b) {
  if (a.re < b.re) return true;
  if (b.re < a.re) return false;
  return a.im < b.im;
}

SphericalRootSet assemble(const NormalizedSection& sec, std::int64_t v,
                          std::vector<Complex> solved) {
  SphericalRootSet out;
  out.nominal_n = sec.n;
  out.infinity_count = sec.n - sec.effective_degree;
  out.finite_roots.reserve(static_cast<std::size_t>(sec.effective_degree));
  for (std::int64_t k = 0; k < v; ++k) out.finite_roots.push_back(Complex::zero(sec.precision));
  for (auto& w : solved) out.finite_roots.push_back(std::move(w));
  std::sort(out.finite_roots.begin(), out.finite_roots.end(), complex_less);
  out.residuals = residual_check(sec, out.finite_roots);
  return out;
}

}  // namespace

SphericalRootSet find_roots(const NormalizedSection& section, int max_iter, double rel_tol) {
  if (section.effective_degree < 1) {
    throw DomainError("find_roots: effective degree must be >= 1");
  }
  mpfr_prec_t prec = section.precision;
  std::int64_t v = valuation_of(section);
  std::int64_t D = section.effective_degree - v;
  if (D == 0) return assemble(section, v, {});

  std::vector<Complex> q = deflated_poly(section, v);
  if (D == 1) {
    std::vector<Complex> solved;
    solved.push_back(-(q[0] / q[1]));
    return assemble(section, v, std::move(solved));
  }

  std::vector<StartCircle> circles = newton_polygon_circles(section, v);
  std::vector<Complex> z = initial_points(circles, prec);
  double min_log_radius = circles.front().log_radius;
  for (const StartCircle& c : circles) min_log_radius = std::min(min_log_radius, c.log_radius);
  Real floor_scale = exp(Real::of(min_log_radius, prec));
  Real tol = Real::of(rel_tol, prec);
  Real nudge = floor_scale * Real::of(1e-3, prec);

  std::vector<Complex> znew(z.size(), Complex::zero(prec));
  std::vector<bool> frozen(z.size(), false);
  Real one = Real::of(1.0, prec);
  double worst_corr = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_done = true;
    worst_corr = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (frozen[i]) {
        znew[i] = z[i];
        continue;
      }
      Complex p(prec), dp(prec);
      horner2(q, z[i], &p, &dp);
      if (p.is_zero()) {
        znew[i] = z[i];
        frozen[i] = true;
        continue;
      }
      double theta = 6.283185307179586 *
                     std::fmod(0.7 + static_cast<double>(i + 1) * kGolden, 1.0);
      Complex kick(nudge * Real::of(std::cos(theta), prec),
                   nudge * Real::of(std::sin(theta), prec));
      if (dp.is_zero()) {
        znew[i] = z[i] + kick;
        all_done = false;
        continue;
      }
      Complex newton = p / dp;
      Complex repulsion = Complex::zero(prec);
      bool collided = false;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff.is_zero()) {
          collided = true;
          break;
        }
        repulsion += Complex(one, Real::of(0.0, prec)) / diff;
      }
      if (collided) {
        znew[i] = z[i] + kick;
        all_done = false;
        continue;
      }
      Complex denom = Complex(one, Real::of(0.0, prec)) - newton * repulsion;
      Complex w = denom.is_zero() ? newton : newton / denom;
      znew[i] = z[i] - w;
      Real scale = max(abs(znew[i]), floor_scale);
      Real corr = abs(w);
      if (corr <= tol * scale) {
        frozen[i] = true;
      } else {
        all_done = false;
        worst_corr = std::max(worst_corr, (corr / scale).to_double());
      }
    }
    z.swap(znew);
    if (all_done) return assemble(section, v, std::move(z));
  }
  throw NumericError("find_roots: no convergence after " + std::to_string(max_iter) +
                     " sweeps; worst relative correction " + fmt_g17(worst_corr));
}

namespace {

// One complex Givens rotation [c, s; -conj(s), c] with real c, c^2+|s|^2 = 1,
// chosen so the (a,b) pair maps to (r,0).
struct Givens {
  Real c;
  Complex s;
};

Complex div_scale(const Complex& a, const Real& s) { return Complex(a.re / s, a.im / s); }

Givens make_givens(const Complex& a, const Complex& b, mpfr_prec_t prec) {
  Givens g{Real::of(1.0, prec), Complex::zero(prec)};
  if (b.is_zero()) return g;
  Real na = abs(a);
  Real nb = abs(b);
  Real r = hypot(na, nb);
  if (a.is_zero()) {
    g.c = Real::of(0.0, prec);
    g.s = div_scale(conj(b), nb);
    return g;
  }
  g.c = na / r;
  Complex alpha = div_scale(a, na);
  g.s = div_scale(alpha * conj(b), r);
  return g;
}

}  // namespace

SphericalRootSet oracle_roots(const NormalizedSection& section) {
  if (section.effective_degree < 1) {
    throw DomainError("oracle_roots: effective degree must be >= 1");
  }
  if (section.effective_degree > 32) {
    throw DomainError("oracle_roots: effective degree exceeds the cap of 32");
  }
  std::int64_t v = valuation_of(section);
  std::int64_t D = section.effective_degree - v;
  if (D == 0) return assemble(section, v, {});

  mpfr_prec_t prec = section.precision + 64;
  std::vector<Complex> q = deflated_poly(section, v);

  // Companion matrix of the monic polynomial, upper Hessenberg by construction.
  auto idx = [D](std::int64_t r, std::int64_t c) {
    return static_cast<std::size_t>(r * D + c);
  };
  std::vector<Complex> H(static_cast<std::size_t>(D * D), Complex::zero(prec));
  for (std::int64_t r = 0; r + 1 < D; ++r) {
    H[idx(r + 1, r)] = Complex(Real::of(1.0, prec), Real::of(0.0, prec));
  }
  Complex lead = Complex(q[static_cast<std::size_t>(D)].re.round_to(prec),
                         q[static_cast<std::size_t>(D)].im.round_to(prec));
  for (std::int64_t r = 0; r < D; ++r) {
    Complex cr(q[static_cast<std::size_t>(r)].re.round_to(prec),
               q[static_cast<std::size_t>(r)].im.round_to(prec));
    H[idx(r, D - 1)] = -(cr / lead);
  }

  Real eps = Real::of(1.0, prec).ldexp_si(-(prec - 2));
  std::vector<Complex> eig;
  eig.reserve(static_cast<std::size_t>(D));
  std::int64_t hi = D - 1;
  int since_deflation = 0;
  int total_iter = 0;
  const int iter_cap = 64 * static_cast<int>(D) + 128;

  auto solve2x2 = [&](std::int64_t m) {
    Complex a = H[idx(m - 1, m - 1)], b = H[idx(m - 1, m)];
    Complex c = H[idx(m, m - 1)], d = H[idx(m, m)];
    Complex half = Complex::of(0.5, 0.0, prec);
    Complex mid = (a + d) * half;
    Complex disc = sqrt((a - d) * half * ((a - d) * half) + b * c);
    eig.push_back(mid + disc);
    eig.push_back(mid - disc);
  };

  while (hi >= 0) {
    if (hi == 0) {
      eig.push_back(H[idx(0, 0)]);
      break;
    }
    // Zero negligible subdiagonal entries inside the active block.
    for (std::int64_t m = hi; m >= 1; --m) {
      Real sub = abs(H[idx(m, m - 1)]);
      if (sub.is_zero()) continue;
      Real neighborhood = abs(H[idx(m - 1, m - 1)]) + abs(H[idx(m, m)]);
      if (!neighborhood.is_zero() && sub <= eps * neighborhood) {
        H[idx(m, m - 1)] = Complex::zero(prec);
      }
    }
    if (H[idx(hi, hi - 1)].is_zero()) {
      eig.push_back(H[idx(hi, hi)]);
      --hi;
      since_deflation = 0;
      continue;
    }
    if (hi >= 2 && H[idx(hi - 1, hi - 2)].is_zero()) {
      solve2x2(hi);
      hi -= 2;
      since_deflation = 0;
      continue;
    }
    if (hi == 1) {
      solve2x2(1);
      break;
    }
    std::int64_t lo = hi - 1;
    while (lo >= 1 && !H[idx(lo, lo - 1)].is_zero()) --lo;

    if (++total_iter > iter_cap) {
      throw NumericError("oracle_roots: QR iteration exceeded its sweep budget");
    }
    Complex shift(prec);
    if (++since_deflation % 16 == 0) {
      // Exceptional shift breaks rare shift cycles.
      Real mag = abs(H[idx(hi, hi - 1)]) + abs(H[idx(hi - 1, hi - 2)]);
      shift = H[idx(hi, hi)] + Complex(mag * Real::of(1.5, prec), mag * Real::of(0.5, prec));
    } else {
      // Wilkinson-style: eigenvalue of the trailing 2x2 nearest H[hi][hi].
      Complex a = H[idx(hi - 1, hi - 1)], b = H[idx(hi - 1, hi)];
      Complex c = H[idx(hi, hi - 1)], d = H[idx(hi, hi)];
      Complex half = Complex::of(0.5, 0.0, prec);
      Complex mid = (a + d) * half;
      Complex disc = sqrt((a - d) * half * ((a - d) * half) + b * c);
      Complex lam1 = mid + disc, lam2 = mid - disc;
      shift = abs(lam1 - d) < abs(lam2 - d) ? lam1 : lam2;
    }

    for (std::int64_t r = lo; r <= hi; ++r) H[idx(r, r)] -= shift;
    std::vector<Givens> rots;
    rots.reserve(static_cast<std::size_t>(hi - lo));
    for (std::int64_t i = lo; i < hi; ++i) {
      Givens g = make_givens(H[idx(i, i)], H[idx(i + 1, i)], prec);
      for (std::int64_t col = i; col <= hi; ++col) {
        Complex top = H[idx(i, col)], bot = H[idx(i + 1, col)];
        H[idx(i, col)] = top.scaled(g.c) + g.s * bot;
        H[idx(i + 1, col)] = bot.scaled(g.c) - conj(g.s) * top;
      }
      rots.push_back(std::move(g));
    }
    for (std::int64_t i = lo; i < hi; ++i) {
      const Givens& g = rots[static_cast<std::size_t>(i - lo)];
      std::int64_t row_hi = std::min(hi, i + 1);
      for (std::int64_t row = lo; row <= row_hi; ++row) {
        Complex left = H[idx(row, i)], right = H[idx(row, i + 1)];
        H[idx(row, i)] = left.scaled(g.c) + right * conj(g.s);
        H[idx(row, i + 1)] = right.scaled(g.c) - left * g.s;
      }
    }
    for (std::int64_t r = lo; r <= hi; ++r) H[idx(r, r)] += shift;
  }

  std::vector<Complex> solved;
  solved.reserve(eig.size());
  for (Complex& w : eig) {
    solved.push_back(Complex(w.re.round_to(section.precision), w.im.round_to(section.precision)));
  }
  return assemble(section, v, std::move(solved));
}

ResidualStats residual_check(const NormalizedSection& section,
                             const std::vector<Complex>& finite_roots) {
  ResidualStats stats;
  if (finite_roots.empty()) return stats;
  mpfr_prec_t prec2 = section.precision * 2;
  std::vector<double> residuals;
  residuals.reserve(finite_roots.size());
  for (const Complex& root : finite_roots) {
    Complex w(root.re.round_to(prec2), root.im.round_to(prec2));
    Complex p = Complex::zero(prec2);
    Real scale = Real::of(0.0, prec2);
    Real aw = abs(w);
    for (std::size_t k = section.coeffs.size(); k-- > 0;) {
      p = p * w + section.coeffs[k];
      scale = scale * aw + abs(section.coeffs[k]);
    }
    double res;
    if (scale.is_zero()) {
      res = abs(p).is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
      res = (abs(p) / scale).to_double();
    }
    residuals.push_back(res);
  }
  std::sort(residuals.begin(), residuals.end());
  stats.max = residuals.back();
  std::size_t half = residuals.size() / 2;
  stats.median = residuals.size() % 2 == 1
                     ? residuals[half]
                     : 0.5 * (residuals[half - 1] + residuals[half]);
  return stats;
}

std::string root_dump_text(const SphericalRootSet& roots) {
  std::ostringstream out;
  for (const Complex& w : roots.finite_roots) {
    out << w.re.to_string() << " " << w.im.to_string() << "\n";
  }
  out << "INF " << roots.infinity_count << "\n";
  return out.str();
}

void write_root_dump(const SphericalRootSet& roots, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << root_dump_text(roots);
  if (!out) throw IoError("write failed: " + path);
}

SphericalRootSet read_root_dump(const std::string& path, mpfr_prec_t precision) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open root dump: " + path);
  SphericalRootSet roots;
  std::string line;
  std::int64_t line_no = 0;
  bool saw_inf = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "INF") {
      if (!(ls >> roots.infinity_count) || roots.infinity_count < 0) {
        throw IoError(path + ":" + std::to_string(line_no) + ": malformed INF record");
      }
      saw_inf = true;
      continue;
    }
    if (saw_inf) {
      throw IoError(path + ":" + std::to_string(line_no) + ": records after the INF line");
    }
    std::string second;
    if (!(ls >> second)) {
      throw IoError(path + ":" + std::to_string(line_no) + ": malformed root record");
    }
    roots.finite_roots.push_back(
        Complex(Real::parse(first, precision), Real::parse(second, precision)));
  }
  if (!saw_inf) throw IoError(path + ": missing trailing INF record");
  roots.nominal_n = static_cast<std::int64_t>(roots.finite_roots.size()) + roots.infinity_count;
  return roots;
}

}  // namespace sz
