#pragma once

#include <Eigen/Core>

#include "lpball/config.hpp"
#include "lpball/exponent.hpp"

namespace lpball {

/// +-1 matrix with mutually orthogonal rows; distinct rows differ in exactly
/// order/2 positions.
struct HadamardMatrix {
  int order = 1;
  Eigen::MatrixXi entries;
};

/// Certifies a constructed configuration. `exact` means the unit-distance
/// claim was established by integer counting of differing coordinates, not by
/// floating-point evaluation.
struct Certificate {
  enum class Kind { basis, hadamard };
  Kind kind = Kind::basis;
  Exponent p;
  int n = 0;
  double claimed_norm = 0.0;
  double claimed_pairwise_distance = 1.0;
  bool exact = false;
};

struct CertifiedConfig {
  PointConfig config;
  Certificate certificate;
};

/// Sylvester doubling: H_0 = [1], H_{k+1} = [[H, H], [H, -H]]. Capped at
/// r <= 14 to bound memory.
HadamardMatrix sylvester_hadamard(int r);

/// n scaled basis vectors e_i with single nonzero coordinate 2^(-1/p); all
/// pairwise distances are exactly 1 and the config radius is 2^(-1/p).
/// Finite p only.
CertifiedConfig basis_config(Exponent p, int n);

/// 2^r scaled Hadamard rows with coordinates a_ij / (2 h^(1/p)), h = 2^(r-1);
/// norms 2^(1/p-1), pairwise distances exactly 1 (h differing coordinates of
/// magnitude h^(-1/p) per pair, verified by integer counting). Finite p,
/// r >= 1.
CertifiedConfig hadamard_config(Exponent p, int r);

}  // namespace lpball
