#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "lpball/exponent.hpp"
#include "lpball/vector_ops.hpp"

namespace lpball {

/// Result of probing the operator norm of the pairwise-difference map at a
/// given exponent and tuple size.
struct PhiNormReport {
  Exponent p;
  int n = 0;
  std::optional<double> exact;  // known closed form at p in {1, 2, inf}
  double upper_bound = 0.0;
  double numeric_lower_bound = 0.0;
  std::vector<Vector> witness;  // n vectors attaining numeric_lower_bound
  long iterations = 0;
  std::uint64_t seed = 0;
};

/// All pairwise differences v_i - v_j, ordered lexicographically by (i, j)
/// with i < j. Requires n >= 2.
std::vector<Vector> apply_phi(const std::vector<Vector>& tuple);

/// Exact operator norm when known: n-1 at p=1, sqrt(n) at p=2, 2 at p=inf;
/// nullopt otherwise.
std::optional<double> phi_norm_exact(Exponent p, int n);

/// Upper bound on the operator norm. Exact at p in {1, 2, inf}; otherwise the
/// q-th root of the interpolation bound on the q-th power of the norm:
/// n^(q-1) (n-1)^(2-q) for 1 < q < 2, and n 2^(q-2) for q > 2.
double phi_norm_upper(Exponent q, int n);

/// |sum_{i<j} N_2(x_i-x_j)^2 - (n sum N_2(x_i)^2 - N_2(sum x_i)^2)|, zero up
/// to roundoff for every tuple.
double n2_identity_residual(const std::vector<Vector>& tuple);

/// Multi-start finite-difference ascent on the ratio
/// aggregate_norm(phi(v), q) / aggregate_norm(v, q) over tuples of n vectors
/// in dimension d. Deterministic given the seed; `budget` counts restarts.
PhiNormReport phi_norm_estimate(Exponent q, int n, int d, std::uint64_t seed,
                                int budget);

}  // namespace lpball
