#pragma once

#include <Eigen/Core>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "lpball/exponent.hpp"

namespace lpball {

/// Finitely supported point of l_p; trailing zeros are semantically irrelevant.
using Vector = Eigen::VectorXd;

namespace detail {

inline void require_finite(const Vector& v) {
  if (!v.allFinite())
    throw std::invalid_argument("vector has a non-finite coordinate");
}

inline double int_pow(double x, int e) {
  double acc = 1.0;
  for (double base = x; e; e >>= 1, base *= base)
    if (e & 1) acc *= base;
  return acc;
}

// (sum |x_i|^p)^(1/p) over an abs-valued array expression. For p <= 64 the
// sum runs directly, with cheap paths for integer and half-integer p (the
// common grid exponents); beyond that the max is factored out so that large
// exponents do not underflow the summands to zero prematurely.
template <typename Derived>
double pow_sum_root(const Eigen::ArrayBase<Derived>& expr, double p) {
  const auto& a = expr.derived();
  double sum = 0.0;
  if (p <= 64.0) {
    const double r = std::rint(p), r2 = std::rint(2.0 * p);
    if (r == p) {
      const int e = static_cast<int>(r);
      for (Eigen::Index i = 0; i < a.size(); ++i) sum += int_pow(a[i], e);
    } else if (r2 == 2.0 * p) {
      const int e = static_cast<int>(r2);
      for (Eigen::Index i = 0; i < a.size(); ++i) sum += std::sqrt(int_pow(a[i], e));
    } else {
      for (Eigen::Index i = 0; i < a.size(); ++i) sum += std::pow(a[i], p);
    }
    return sum == 0.0 ? 0.0 : std::pow(sum, 1.0 / p);
  }
  const double m = a.maxCoeff();
  if (m == 0.0) return 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) sum += std::pow(a[i] / m, p);
  return m * std::pow(sum, 1.0 / p);
}

}  // namespace detail

/// N_p norm of a finitely supported vector. Empty vector has norm 0.
inline double norm_p(const Vector& v, Exponent p) {
  detail::require_finite(v);
  if (v.size() == 0) return 0.0;
  if (p.is_inf()) return v.cwiseAbs().maxCoeff();
  const double pv = p.value();
  if (pv == 1.0) return v.cwiseAbs().sum();
  if (pv == 2.0) return v.norm();
  return detail::pow_sum_root(v.array().abs(), pv);
}

/// N_p distance; shorter vectors are zero-extended to the longer length.
inline double distance_p(const Vector& u, const Vector& v, Exponent p) {
  detail::require_finite(u);
  detail::require_finite(v);
  const Eigen::Index m = std::max(u.size(), v.size());
  Vector d = Vector::Zero(m);
  d.head(u.size()) = u;
  d.head(v.size()) -= v;
  return norm_p(d, p);
}

/// Aggregate norm N_{p,s} of a tuple: (sum_i N_p(v_i)^p)^(1/p), max of the
/// member norms at p = inf.
inline double aggregate_norm(std::span<const Vector> tuple, Exponent p) {
  if (tuple.empty()) throw std::invalid_argument("aggregate_norm of empty tuple");
  Vector norms(static_cast<Eigen::Index>(tuple.size()));
  for (std::size_t i = 0; i < tuple.size(); ++i)
    norms[static_cast<Eigen::Index>(i)] = norm_p(tuple[i], p);
  return norm_p(norms, p);
}

inline double aggregate_norm(const std::vector<Vector>& tuple, Exponent p) {
  return aggregate_norm(std::span<const Vector>(tuple), p);
}

}  // namespace lpball
