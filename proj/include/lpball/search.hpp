#pragma once

#include <cstdint>
#include <optional>

#include "lpball/config.hpp"
#include "lpball/exponent.hpp"

namespace lpball {

struct SearchParams {
  Exponent p;
  int d = 1;
  int n = 1;
  double radius = 0.0;
  int restarts = 20;
  int max_steps = 200;
  std::uint64_t seed = 0;
  double penalty_tol = 1e-12;
};

/// Outcome of a penalty search. A success carries a configuration that
/// re-validates admissible at tolerance 1e-6; a failure is evidence only,
/// never a proof of infeasibility.
struct SearchReport {
  bool success = false;
  std::optional<PointConfig> config;
  double final_penalty = 0.0;
  int restarts_used = 0;
  long steps_total = 0;
  std::uint64_t seed = 0;
};

/// Sum of squared constraint violations:
/// sum_{i<j} max(0, 1 - dist_p(v_i,v_j))^2 + sum_i max(0, N_p(v_i) - R)^2.
/// Zero iff the configuration is exactly admissible.
double penalty(const std::vector<Vector>& points, Exponent p, double radius);

/// Multi-start coordinatewise pattern descent on the penalty. Each restart
/// draws points uniformly in the ball (seeded per restart index) and halves
/// the step on non-improving sweeps. Deterministic given params.
SearchReport search(const SearchParams& params);

/// Largest n <= n_cap for which search succeeds, scanning upward and stopping
/// at the first failure. A lower bound on the packing number in dimension d.
int empirical_N(Exponent p, int d, double radius, int n_cap,
                const SearchParams& base);

}  // namespace lpball
