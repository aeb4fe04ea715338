#pragma once

#include <string>

#include "lpball/exponent.hpp"

namespace lpball {

enum class BoundFormula { rankin, bound_one, bound_two };

inline const char* to_string(BoundFormula f) {
  switch (f) {
    case BoundFormula::rankin: return "rankin";
    case BoundFormula::bound_one: return "bound_one";
    case BoundFormula::bound_two: return "bound_two";
  }
  return "?";
}

/// A closed-form upper bound on the number of unit-separated points in the
/// radius-R ball of l_q.
struct BoundResult {
  long n_max = 0;
  BoundFormula formula = BoundFormula::rankin;
  Exponent q;
  double radius = 0.0;
  bool in_domain = true;
};

/// Rankin's Euclidean bound floor(1/(1-2R^2)), valid for 0 <= R < 1/sqrt(2).
BoundResult rankin_bound(double radius);

/// floor(1/(1-(2R^q)^(1/(q-1)))) for 1 < q < 2 and R < 2^(-1/q).
BoundResult psi_one(Exponent q, double radius);

/// floor(1/(1-2^(q-1) R^q)) for q >= 2 and R < 2^(1/q-1). Below q = 2 the
/// formula is not sound (see the counterexample in the implementation) and
/// the domain excludes it.
BoundResult psi_two(Exponent q, double radius);

/// Minimum of psi_one and psi_two over the formulas whose domain contains
/// (q, R); ties (including q = 2) go to bound_two. Throws std::domain_error
/// when neither applies.
BoundResult psi(Exponent q, double radius);

/// Conjugate exponent, 1/p + 1/q = 1.
inline Exponent conjugate(Exponent p) { return p.conjugate(); }

/// Critical radius of l_p: 2^(-1/p) for p <= 2, 2^(1/p-1) for p >= 2.
double critical_radius(Exponent p);

}  // namespace lpball
