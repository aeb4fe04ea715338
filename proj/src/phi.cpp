#include "lpball/phi.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <random>
#include <stdexcept>

namespace lpball {

std::vector<Vector> apply_phi(const std::vector<Vector>& tuple) {
  const int n = static_cast<int>(tuple.size());
  if (n < 2) throw std::invalid_argument("apply_phi needs at least 2 vectors");
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Eigen::Index m = std::max(tuple[i].size(), tuple[j].size());
      Vector d = Vector::Zero(m);
      d.head(tuple[i].size()) = tuple[i];
      d.head(tuple[j].size()) -= tuple[j];
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::optional<double> phi_norm_exact(Exponent p, int n) {
  if (n < 2) throw std::invalid_argument("phi norm needs n >= 2");
  if (p.is_inf()) return 2.0;
  if (p.value() == 1.0) return static_cast<double>(n - 1);
  if (p.value() == 2.0) return std::sqrt(static_cast<double>(n));
  return std::nullopt;
}

double phi_norm_upper(Exponent q, int n) {
  if (n < 2) throw std::invalid_argument("phi norm needs n >= 2");
  if (auto exact = phi_norm_exact(q, n)) return *exact;
  const double qv = q.value();
  if (qv < 2.0)
    return std::pow(std::pow(n, qv - 1.0) * std::pow(n - 1.0, 2.0 - qv), 1.0 / qv);
  return std::pow(n * std::pow(2.0, qv - 2.0), 1.0 / qv);
}

double n2_identity_residual(const std::vector<Vector>& tuple) {
  const int n = static_cast<int>(tuple.size());
  if (n < 2) throw std::invalid_argument("n2_identity_residual needs n >= 2");
  const Exponent two(2.0);
  double lhs = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = distance_p(tuple[i], tuple[j], two);
      lhs += d * d;
    }
  Eigen::Index m = 0;
  double sum_sq = 0.0;
  for (const auto& v : tuple) {
    m = std::max(m, v.size());
    sum_sq += v.squaredNorm();
  }
  Vector total = Vector::Zero(m);
  for (const auto& v : tuple) total.head(v.size()) += v;
  const double rhs = n * sum_sq - total.squaredNorm();
  return std::abs(lhs - rhs);
}

namespace {

// The ratio aggregate_norm(phi(v), q) / aggregate_norm(v, q) evaluated on a
// flat n*d parameter block, with scratch reused across calls.
class RatioObjective {
 public:
  RatioObjective(Exponent q, int n, int d) : q_(q), n_(n), d_(d), diff_(d) {}

  double operator()(const Eigen::VectorXd& x) {
    const double denom = tuple_norm(x);
    if (denom == 0.0) return 0.0;
    return phi_norm(x) / denom;
  }

 private:
  double member_norm(const Eigen::VectorXd& v) const {
    if (q_.is_inf()) return v.cwiseAbs().maxCoeff();
    const double qv = q_.value();
    if (qv == 1.0) return v.cwiseAbs().sum();
    if (qv == 2.0) return v.norm();
    return std::pow(v.array().abs().pow(qv).sum(), 1.0 / qv);
  }

  double reduce(double acc) const {
    if (q_.is_inf()) return acc;
    return std::pow(acc, 1.0 / q_.value());
  }

  double accumulate(double acc, double norm) const {
    if (q_.is_inf()) return std::max(acc, norm);
    return acc + std::pow(norm, q_.value());
  }

  double tuple_norm(const Eigen::VectorXd& x) const {
    double acc = 0.0;
    for (int i = 0; i < n_; ++i) acc = accumulate(acc, member_norm(x.segment(i * d_, d_)));
    return reduce(acc);
  }

  double phi_norm(const Eigen::VectorXd& x) {
    double acc = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        diff_ = x.segment(i * d_, d_) - x.segment(j * d_, d_);
        acc = accumulate(acc, member_norm(diff_));
      }
    return reduce(acc);
  }

  Exponent q_;
  int n_, d_;
  Eigen::VectorXd diff_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 on the pair, so per-restart generators are decorrelated
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

PhiNormReport phi_norm_estimate(Exponent q, int n, int d, std::uint64_t seed,
                                int budget) {
  if (n < 2) throw std::invalid_argument("phi_norm_estimate needs n >= 2");
  if (d < 1) throw std::invalid_argument("phi_norm_estimate needs d >= 1");
  if (budget < 1) throw std::invalid_argument("phi_norm_estimate needs budget >= 1");

  RatioObjective ratio(q, n, d);
  const int dim = n * d;

  PhiNormReport report{q, n, phi_norm_exact(q, n), phi_norm_upper(q, n),
                       -1.0, {}, 0, seed};
  Eigen::VectorXd best_x;

  constexpr int kMaxSteps = 500;
  constexpr double kRelTol = 1e-10;
  const double fd_h = 1e-7;

  Eigen::VectorXd x(dim), grad(dim), trial(dim);
  for (int restart = 0; restart < budget; ++restart) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < dim; ++k) x[k] = gauss(rng);
    x /= x.norm();

    double f = ratio(x);
    double step = 0.5;
    for (int it = 0; it < kMaxSteps; ++it) {
      ++report.iterations;
      // central-difference gradient of the ratio
      for (int k = 0; k < dim; ++k) {
        const double saved = x[k];
        x[k] = saved + fd_h;
        const double fp = ratio(x);
        x[k] = saved - fd_h;
        const double fm = ratio(x);
        x[k] = saved;
        grad[k] = (fp - fm) / (2.0 * fd_h);
      }
      const double gn = grad.norm();
      if (gn == 0.0) break;

      double f_new = f;
      bool accepted = false;
      while (step > 1e-12) {
        trial = x + (step / gn) * grad;
        trial /= trial.norm();
        const double ft = ratio(trial);
        if (ft > f) {
          x = trial;
          f_new = ft;
          accepted = true;
          step *= 1.5;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
      if (f_new - f <= kRelTol * std::max(1.0, f)) {
        f = f_new;
        break;
      }
      f = f_new;
    }

    if (f > report.numeric_lower_bound) {
      report.numeric_lower_bound = f;
      best_x = x;
    }
  }

  report.witness.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) report.witness.push_back(best_x.segment(i * d, d));
  // the reported bound is the witness ratio, re-evaluated
  report.numeric_lower_bound =
      aggregate_norm(apply_phi(report.witness), q) / aggregate_norm(report.witness, q);
  return report;
}

}  // namespace lpball
