#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lpball {

/// An l_p exponent: a real value in [1, inf], with inf representable.
class Exponent {
 public:
  explicit Exponent(double value) : value_(value) {
    if (std::isnan(value) || value < 1.0)
      throw std::invalid_argument("exponent must be in [1, inf], got " +
                                  std::to_string(value));
  }

  static Exponent inf() { return Exponent(std::numeric_limits<double>::infinity()); }

  double value() const { return value_; }
  bool is_inf() const { return std::isinf(value_); }

  /// Conjugate exponent q with 1/p + 1/q = 1; conjugate(1) = inf, conjugate(inf) = 1.
  Exponent conjugate() const {
    if (value_ == 1.0) return inf();
    if (is_inf()) return Exponent(1.0);
    return Exponent(value_ / (value_ - 1.0));
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value_ == b.value_;
  }

 private:
  double value_;
};

}  // namespace lpball
