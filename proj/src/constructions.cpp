#include "lpball/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace lpball {

namespace {

void require_finite_exponent(const Exponent& p, const char* what) {
  if (p.is_inf())
    throw std::invalid_argument(std::string(what) + " is not defined at p = inf");
}

}  // namespace

HadamardMatrix sylvester_hadamard(int r) {
  if (r < 0) throw std::invalid_argument("sylvester_hadamard requires r >= 0");
  if (r > 14) throw std::length_error("sylvester_hadamard capped at r <= 14");
  const int n = 1 << r;
  Eigen::MatrixXi h(n, n);
  h(0, 0) = 1;
  for (int k = 1; k <= n / 2; k *= 2) {
    h.block(0, k, k, k) = h.topLeftCorner(k, k);
    h.block(k, 0, k, k) = h.topLeftCorner(k, k);
    h.block(k, k, k, k) = -h.topLeftCorner(k, k);
  }
  return {n, std::move(h)};
}

CertifiedConfig basis_config(Exponent p, int n) {
  require_finite_exponent(p, "basis_config");
  if (n < 1) throw std::invalid_argument("basis_config requires n >= 1");
  const double scale = std::pow(2.0, -1.0 / p.value());
  PointConfig config{p, scale, {}};
  config.points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vector v = Vector::Zero(n);
    v[i] = scale;
    config.points.push_back(std::move(v));
  }
  // Each difference e_i - e_j has exactly two nonzero coordinates of
  // magnitude 2^(-1/p), so N_p(e_i - e_j)^p = 2 * 2^(-1) = 1 exactly.
  Certificate cert{Certificate::Kind::basis, p, n, scale, 1.0, true};
  return {std::move(config), cert};
}

CertifiedConfig hadamard_config(Exponent p, int r) {
  require_finite_exponent(p, "hadamard_config");
  if (r < 1) throw std::invalid_argument("hadamard_config requires r >= 1");
  const HadamardMatrix hm = sylvester_hadamard(r);
  const int n = hm.order;
  const int h = n / 2;
  const double scale = 1.0 / (2.0 * std::pow(h, 1.0 / p.value()));
  const double radius = std::pow(2.0, 1.0 / p.value() - 1.0);

  // Integer certificate: distinct rows of a Hadamard matrix differ in exactly
  // h positions, which makes every pairwise difference have h nonzero
  // coordinates of magnitude h^(-1/p) and hence N_p distance exactly 1.
  bool exact = true;
  for (int i = 0; i < n && exact; ++i)
    for (int j = i + 1; j < n && exact; ++j) {
      int differing = 0;
      for (int k = 0; k < n; ++k)
        if (hm.entries(i, k) != hm.entries(j, k)) ++differing;
      if (differing != h) exact = false;
    }
  if (!exact)
    throw std::logic_error("sylvester matrix failed the row-difference count");

  PointConfig config{p, radius, {}};
  config.points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    config.points.push_back(hm.entries.row(i).transpose().cast<double>() * scale);
  Certificate cert{Certificate::Kind::hadamard, p, n, radius, 1.0, true};
  return {std::move(config), cert};
}

}  // namespace lpball
