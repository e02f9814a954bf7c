#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seczeros/bigfloat.hpp"
#include "seczeros/sections.hpp"

namespace sz {

struct ResidualStats {
  double max = 0.0;
  double median = 0.0;
};

// Zeros of a section viewed on the sphere: finite roots plus a point mass at
// infinity for the degree deficit, so the count always equals the nominal n.
struct SphericalRootSet {
  std::vector<Complex> finite_roots;
  std::int64_t infinity_count = 0;
  std::int64_t nominal_n = 0;
  ResidualStats residuals;
};

// All zeros of the section polynomial by Aberth-Ehrlich simultaneous
// iteration at the section's precision.  Starting points sit on circles whose
// radii come from the upper convex hull of (k, log|c_k|), with golden-ratio
// angle spacing; sweeps are Jacobi-style so results are reproducible.  Origin
// zeros (trailing zero coefficients below the valuation) deflate exactly;
// nominal_n - effective_degree zeros are assigned to infinity.
SphericalRootSet find_roots(const NormalizedSection& section, int max_iter = 200,
                            double rel_tol = 1e-25);

// Independent cross-check for effective degree <= 32: eigenvalues of the
// companion matrix by complex Hessenberg shifted-QR at 64 extra bits.
SphericalRootSet oracle_roots(const NormalizedSection& section);

// Normalized residuals |p(w)| / sum_k |c_k||w|^k at doubled precision.
ResidualStats residual_check(const NormalizedSection& section,
                             const std::vector<Complex>& finite_roots);

// Dump: one `Re Im` line per finite root, then a trailing `INF count` line.
void write_root_dump(const SphericalRootSet& roots, const std::string& path);
std::string root_dump_text(const SphericalRootSet& roots);
SphericalRootSet read_root_dump(const std::string& path, mpfr_prec_t precision);

}  // namespace sz
