#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "lpball/exponent.hpp"
#include "lpball/vector_ops.hpp"

namespace lpball {

/// Tolerance on the radius and unit-distance constraints when validating
/// floating-point configurations.
inline constexpr double kAdmissibilityTol = 1e-9;

/// n points claimed to lie in the radius-R ball of l_p with pairwise
/// distances >= 1.
struct PointConfig {
  Exponent p;
  double radius = 0.0;
  std::vector<Vector> points;
};

struct ValidationReport {
  double max_norm = 0.0;
  double min_pairwise_distance = std::numeric_limits<double>::infinity();
  bool admissible = false;
  std::optional<std::pair<int, int>> worst_pair;  // pair attaining the min distance
};

/// Checks every norm against the radius and every unordered pair against the
/// unit separation, at tolerance kAdmissibilityTol. With n <= 1 the pair
/// condition holds vacuously.
inline ValidationReport validate(const PointConfig& config) {
  ValidationReport report;
  const int n = static_cast<int>(config.points.size());
  Eigen::Index m = 0;
  for (const auto& v : config.points) {
    report.max_norm = std::max(report.max_norm, norm_p(v, config.p));
    m = std::max(m, v.size());
  }
  // pad once so the pair loop works on equal-length columns
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(m, n);
  for (int i = 0; i < n; ++i)
    padded.col(i).head(config.points[i].size()) = config.points[i];
  Vector diff(m);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      diff = padded.col(i) - padded.col(j);
      const double d = norm_p(diff, config.p);
      if (d < report.min_pairwise_distance) {
        report.min_pairwise_distance = d;
        report.worst_pair = {i, j};
      }
    }
  }
  report.admissible = report.max_norm <= config.radius + kAdmissibilityTol &&
                      (n <= 1 || report.min_pairwise_distance >= 1.0 - kAdmissibilityTol);
  return report;
}

}  // namespace lpball
