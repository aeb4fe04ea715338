#include "lpball/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lpball {

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

// Floors after a snap: a value within 1e-12 below an integer counts as that
// integer, so radii chosen exactly at a jump keep their point.
long floor_snapped(const Real50& x) {
  Real50 f = floor(x);
  if (x - f >= Real50(1) - Real50("1e-12")) f += 1;
  return static_cast<long>(f);
}

void require_radius_nonnegative(double radius) {
  if (!(radius >= 0.0)) throw std::domain_error("radius must be >= 0");
}

}  // namespace

BoundResult rankin_bound(double radius) {
  require_radius_nonnegative(radius);
  if (radius >= 1.0 / std::sqrt(2.0))
    throw std::domain_error("rankin_bound requires R < 1/sqrt(2)");
  const Real50 r(radius);
  const long n = floor_snapped(1 / (1 - 2 * r * r));
  return {n, BoundFormula::rankin, Exponent(2.0), radius, true};
}

BoundResult psi_one(Exponent q, double radius) {
  require_radius_nonnegative(radius);
  if (q.is_inf() || q.value() <= 1.0 || q.value() >= 2.0)
    throw std::domain_error("psi_one requires 1 < q < 2");
  const double qv = q.value();
  if (radius >= std::pow(2.0, -1.0 / qv))
    throw std::domain_error("psi_one requires R < 2^(-1/q)");
  const Real50 r(radius), qq(qv);
  const Real50 inner = pow(2 * pow(r, qq), 1 / (qq - 1));
  const long n = floor_snapped(1 / (1 - inner));
  return {n, BoundFormula::bound_one, q, radius, true};
}

BoundResult psi_two(Exponent q, double radius) {
  require_radius_nonnegative(radius);
  // The derivation interpolates the difference map between exponents 2 and
  // inf, so the formula is justified only for q >= 2. Below 2 it is in fact
  // false: four unit-separated points fit in the radius-0.6 ball of l_1.5
  // (penalty search finds them with strict margins) while the formula would
  // cap the count at two.
  if (!(q.value() >= 2.0)) throw std::domain_error("psi_two requires q >= 2");
  if (q.is_inf()) {
    // limit case: 2^(q-1) R^q = (2R)^q / 2 -> 0 for R < 1/2
    if (radius >= 0.5) throw std::domain_error("psi_two at q = inf requires R < 1/2");
    return {1, BoundFormula::bound_two, q, radius, true};
  }
  const double qv = q.value();
  if (radius >= std::pow(2.0, 1.0 / qv - 1.0))
    throw std::domain_error("psi_two requires R < 2^(1/q-1)");
  const Real50 r(radius), qq(qv);
  const Real50 term = pow(Real50(2), qq - 1) * pow(r, qq);
  const long n = floor_snapped(1 / (1 - term));
  return {n, BoundFormula::bound_two, q, radius, true};
}

BoundResult psi(Exponent q, double radius) {
  if (!(q.value() > 1.0)) throw std::domain_error("psi requires q > 1");
  // bound_one covers 1 < q < 2, bound_two covers q >= 2; they meet at q = 2
  // where ties go to bound_two.
  std::optional<BoundResult> one, two;
  if (!q.is_inf() && q.value() < 2.0) {
    try {
      one = psi_one(q, radius);
    } catch (const std::domain_error&) {
    }
  }
  try {
    two = psi_two(q, radius);
  } catch (const std::domain_error&) {
  }
  if (one && two) return one->n_max < two->n_max ? *one : *two;
  if (one) return *one;
  if (two) return *two;
  std::ostringstream msg;
  msg << "psi: no formula applies at q=" << q.value() << ", R=" << radius
      << " (bound_one needs R < "
      << (q.value() < 2.0 ? std::pow(2.0, -1.0 / q.value()) : 0.0)
      << ", bound_two needs R < "
      << (q.is_inf() ? 0.5 : std::pow(2.0, 1.0 / q.value() - 1.0)) << ")";
  throw std::domain_error(msg.str());
}

double critical_radius(Exponent p) {
  if (p.is_inf()) return 0.5;
  const double pv = p.value();
  if (pv <= 2.0) return std::pow(2.0, -1.0 / pv);
  return std::pow(2.0, 1.0 / pv - 1.0);
}

}  // namespace lpball
