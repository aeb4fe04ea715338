#include "lpball/search.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace lpball {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double hinge_sq(double violation) {
  return violation > 0.0 ? violation * violation : 0.0;
}

// Penalty terms touching point i only; comparing before/after a single-point
// move needs nothing else.
double partial_penalty(const std::vector<Vector>& pts, int i, Exponent p,
                       double radius) {
  double acc = hinge_sq(norm_p(pts[i], p) - radius);
  for (int j = 0; j < static_cast<int>(pts.size()); ++j)
    if (j != i) acc += hinge_sq(1.0 - distance_p(pts[i], pts[j], p));
  return acc;
}

// Uniform sample in the radius-R l_p ball by rejection from the cube, with a
// radial fallback after too many rejections.
Vector sample_in_ball(std::mt19937_64& rng, int d, Exponent p, double radius) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vector v(d);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (int k = 0; k < d; ++k) v[k] = radius * unit(rng);
    if (norm_p(v, p) <= radius) return v;
  }
  const double nrm = norm_p(v, p);
  if (nrm > 0.0) v *= radius * std::abs(unit(rng)) / nrm;
  return v;
}

// Constraints within this margin of tight are treated as equalities during
// the final polish.
constexpr double kActiveMargin = 1e-3;

struct ActiveSet {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> norms;
};

// Signed residuals of the near-active constraints: 1 - dist for pairs,
// norm - R for points. A zero is an exactly tight, feasible configuration.
Eigen::VectorXd residuals(const std::vector<Vector>& pts, const ActiveSet& act,
                          Exponent p, double radius) {
  Eigen::VectorXd r(act.pairs.size() + act.norms.size());
  int row = 0;
  for (const auto& [i, j] : act.pairs)
    r[row++] = 1.0 - distance_p(pts[i], pts[j], p);
  for (int i : act.norms) r[row++] = norm_p(pts[i], p) - radius;
  return r;
}

// Levenberg-Marquardt on the active equalities with a finite-difference
// Jacobian; finishes off the near-feasible iterates the pattern search
// delivers. Returns the true hinge penalty of the polished points.
double gauss_newton_polish(std::vector<Vector>& pts, Exponent p, double radius,
                           double target) {
  const int n = static_cast<int>(pts.size());
  const int d = n ? static_cast<int>(pts[0].size()) : 0;
  const int dim = n * d;

  ActiveSet act;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (distance_p(pts[i], pts[j], p) < 1.0 + kActiveMargin) act.pairs.emplace_back(i, j);
    if (norm_p(pts[i], p) > radius - kActiveMargin) act.norms.push_back(i);
  }
  if (act.pairs.empty() && act.norms.empty()) return penalty(pts, p, radius);

  Eigen::VectorXd r = residuals(pts, act, p, radius);
  double pen = r.squaredNorm();
  double lambda = 1e-8;
  Eigen::MatrixXd jac(r.size(), dim);
  const double h = 1e-7;
  for (int iter = 0; iter < 40 && pen > target; ++iter) {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k) {
        const double saved = pts[i][k];
        pts[i][k] = saved + h;
        jac.col(i * d + k) = (residuals(pts, act, p, radius) - r) / h;
        pts[i][k] = saved;
      }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    bool accepted = false;
    for (int attempt = 0; attempt < 8; ++attempt) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda;
      const Eigen::VectorXd delta = damped.ldlt().solve(-jtr);
      std::vector<Vector> trial = pts;
      for (int i = 0; i < n; ++i) trial[i] += delta.segment(i * d, d);
      const Eigen::VectorXd rt = residuals(trial, act, p, radius);
      const double pt = rt.squaredNorm();
      if (pt < pen) {
        pts.swap(trial);
        r = rt;
        pen = pt;
        lambda = std::max(lambda * 0.1, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted) break;
  }
  return penalty(pts, p, radius);
}

}  // namespace

double penalty(const std::vector<Vector>& points, Exponent p, double radius) {
  const int n = static_cast<int>(points.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += hinge_sq(norm_p(points[i], p) - radius);
    for (int j = i + 1; j < n; ++j)
      acc += hinge_sq(1.0 - distance_p(points[i], points[j], p));
  }
  return acc;
}

SearchReport search(const SearchParams& params) {
  if (params.d < 1 || params.n < 1 || params.radius < 0.0 ||
      params.restarts < 1 || params.max_steps < 1 || !(params.penalty_tol > 0.0))
    throw std::invalid_argument("invalid search parameters");

  SearchReport report;
  report.seed = params.seed;
  report.final_penalty = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < params.restarts; ++restart) {
    std::mt19937_64 rng(mix_seed(params.seed, static_cast<std::uint64_t>(restart)));
    std::vector<Vector> pts;
    pts.reserve(static_cast<std::size_t>(params.n));
    for (int i = 0; i < params.n; ++i)
      pts.push_back(sample_in_ball(rng, params.d, params.p, params.radius));

    double pen = penalty(pts, params.p, params.radius);
    double step = std::max(params.radius, 0.25) * 0.5;
    std::vector<Vector> prev = pts, trial_pts(pts.size());
    for (int sweep = 0; sweep < params.max_steps && pen > params.penalty_tol &&
                        step > 1e-12;
         ++sweep) {
      ++report.steps_total;
      const double pen_before = pen;
      bool improved = false;
      for (int i = 0; i < params.n; ++i) {
        for (int k = 0; k < params.d; ++k) {
          const double before = partial_penalty(pts, i, params.p, params.radius);
          const double saved = pts[i][k];
          double best = before, best_coord = saved;
          for (const double trial : {saved + step, saved - step}) {
            pts[i][k] = trial;
            const double after = partial_penalty(pts, i, params.p, params.radius);
            if (after < best) {
              best = after;
              best_coord = trial;
            }
          }
          pts[i][k] = best_coord;
          if (best < before) improved = true;
        }
      }
      pen = penalty(pts, params.p, params.radius);
      if (!improved) {
        step *= 0.5;
        prev = pts;
        continue;
      }
      // pattern move: extrapolate along the direction the sweep just moved,
      // doubling the stride while it keeps paying off (ridge following)
      std::vector<Vector> dir(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) dir[i] = pts[i] - prev[i];
      for (int hop = 0; hop < 60 && pen > params.penalty_tol; ++hop) {
        for (std::size_t i = 0; i < pts.size(); ++i) trial_pts[i] = pts[i] + dir[i];
        const double trial_pen = penalty(trial_pts, params.p, params.radius);
        if (trial_pen >= pen) break;
        pts.swap(trial_pts);
        pen = trial_pen;
        for (auto& v : dir) v *= 2.0;
      }
      prev = pts;
      // stalling at this scale: refine
      if (pen > 0.5 * pen_before) step *= 0.5;
    }

    if (pen > params.penalty_tol && pen <= 1e-4)
      pen = gauss_newton_polish(pts, params.p, params.radius, params.penalty_tol * 0.1);

    report.restarts_used = restart + 1;
    if (pen < report.final_penalty) report.final_penalty = pen;
    if (pen <= params.penalty_tol) {
      // polish: pull any slightly-out point back onto the sphere, then
      // re-validate at the looser reporting tolerance
      for (auto& v : pts) {
        const double nrm = norm_p(v, params.p);
        if (nrm > params.radius && nrm > 0.0) v *= params.radius / nrm;
      }
      PointConfig config{params.p, params.radius, pts};
      ValidationReport vr = validate(config);
      const bool ok = vr.max_norm <= params.radius + 1e-6 &&
                      (params.n <= 1 || vr.min_pairwise_distance >= 1.0 - 1e-6);
      if (ok) {
        report.success = true;
        report.config = std::move(config);
        report.final_penalty = pen;
        return report;
      }
    }
  }
  return report;
}

int empirical_N(Exponent p, int d, double radius, int n_cap,
                const SearchParams& base) {
  if (n_cap < 1) throw std::invalid_argument("empirical_N requires n_cap >= 1");
  int found = 0;
  for (int n = 1; n <= n_cap; ++n) {
    SearchParams params = base;
    params.p = p;
    params.d = d;
    params.n = n;
    params.radius = radius;
    if (!search(params).success) break;
    found = n;
  }
  return found;
}

}  // namespace lpball
