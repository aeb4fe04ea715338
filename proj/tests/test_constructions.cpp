#include <doctest.h>

#include <cmath>

#include "lpball/bounds.hpp"
#include "lpball/constructions.hpp"

using namespace lpball;

TEST_CASE("sylvester_hadamard base cases") {
  const auto h0 = sylvester_hadamard(0);
  CHECK(h0.order == 1);
  CHECK(h0.entries(0, 0) == 1);

  const auto h1 = sylvester_hadamard(1);
  CHECK(h1.order == 2);
  CHECK(h1.entries(0, 0) == 1);
  CHECK(h1.entries(0, 1) == 1);
  CHECK(h1.entries(1, 0) == 1);
  CHECK(h1.entries(1, 1) == -1);

  CHECK_THROWS_AS(sylvester_hadamard(-1), std::invalid_argument);
  CHECK_THROWS_AS(sylvester_hadamard(15), std::length_error);
}

TEST_CASE("sylvester rows are orthogonal and differ in half the positions") {
  for (int r = 1; r <= 10; ++r) {
    const auto hm = sylvester_hadamard(r);
    const int n = hm.order;
    // integer arithmetic throughout
    const Eigen::MatrixXi gram = hm.entries * hm.entries.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(gram(i, j) == (i == j ? n : 0));
  }
  const auto h3 = sylvester_hadamard(3);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      int agree = 0;
      for (int k = 0; k < 8; ++k)
        if (h3.entries(i, k) == h3.entries(j, k)) ++agree;
      CHECK(agree == 4);
    }
}

TEST_CASE("basis_config matches the closed form") {
  const auto cc = basis_config(Exponent(2), 3);
  CHECK(cc.config.points.size() == 3);
  CHECK(cc.config.radius == doctest::Approx(std::pow(2.0, -0.5)));
  for (const auto& v : cc.config.points)
    CHECK(norm_p(v, Exponent(2)) == doctest::Approx(std::pow(2.0, -0.5)));
  const auto report = validate(cc.config);
  CHECK(report.admissible);
  CHECK(report.min_pairwise_distance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cc.certificate.exact);

  const auto p1 = basis_config(Exponent(1), 5);
  for (const auto& v : p1.config.points) CHECK(norm_p(v, Exponent(1)) == 0.5);
  CHECK(validate(p1.config).admissible);

  CHECK(validate(basis_config(Exponent(2), 1).config).admissible);
  CHECK_THROWS_AS(basis_config(Exponent::inf(), 3), std::invalid_argument);
  CHECK_THROWS_AS(basis_config(Exponent(2), 0), std::invalid_argument);
}

TEST_CASE("hadamard_config matches the closed form") {
  const auto p1 = hadamard_config(Exponent(1), 1);
  REQUIRE(p1.config.points.size() == 2);
  CHECK(p1.config.points[0][0] == doctest::Approx(0.5));
  CHECK(p1.config.points[0][1] == doctest::Approx(0.5));
  CHECK(p1.config.points[1][1] == doctest::Approx(-0.5));
  CHECK(p1.config.radius == doctest::Approx(1.0));  // 2^(1/1-1) = 1
  CHECK(validate(p1.config).admissible);

  const auto p2 = hadamard_config(Exponent(2), 2);
  CHECK(p2.config.points.size() == 4);
  CHECK(p2.config.radius == doctest::Approx(std::pow(2.0, -0.5)));
  const auto report = validate(p2.config);
  CHECK(report.admissible);
  CHECK(report.min_pairwise_distance == doctest::Approx(1.0).epsilon(1e-12));

  const auto p3 = hadamard_config(Exponent(3), 3);
  CHECK(p3.config.points.size() == 8);
  CHECK(p3.config.radius == doctest::Approx(std::pow(2.0, 1.0 / 3.0 - 1.0)));
  for (const auto& v : p3.config.points)
    CHECK(norm_p(v, Exponent(3)) == doctest::Approx(std::pow(2.0, -2.0 / 3.0)));
  CHECK(validate(p3.config).admissible);
  CHECK(p3.certificate.exact);

  CHECK_THROWS_AS(hadamard_config(Exponent::inf(), 2), std::invalid_argument);
  CHECK_THROWS_AS(hadamard_config(Exponent(2), 0), std::invalid_argument);
}

TEST_CASE("constructions stay admissible across a p grid") {
  for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
    const auto b = basis_config(Exponent(p), 32);
    const auto br = validate(b.config);
    CHECK(br.admissible);
    CHECK(br.min_pairwise_distance >= 1.0 - 1e-12);

    const auto h = hadamard_config(Exponent(p), 6);
    const auto hr = validate(h.config);
    CHECK(hr.admissible);
    CHECK(std::abs(hr.min_pairwise_distance - 1.0) <= 1e-12);
  }
}

TEST_CASE("the smaller construction radius equals the critical radius") {
  for (double p : {1.0, 1.2, 1.5, 2.0, 2.7, 4.0, 16.0}) {
    const double basis_r = std::pow(2.0, -1.0 / p);
    const double hada_r = std::pow(2.0, 1.0 / p - 1.0);
    if (p <= 2.0) CHECK(hada_r >= basis_r - 1e-15);
    if (p >= 2.0) CHECK(basis_r >= hada_r - 1e-15);
    CHECK(std::min(basis_r, hada_r) ==
          doctest::Approx(critical_radius(Exponent(p))).epsilon(1e-14));
  }
}

TEST_CASE("constructions witness unboundedness at the critical radius") {
  // p <= 2: arbitrarily many points at radius 2^(-1/p) via the basis family
  const auto b = basis_config(Exponent(1.5), 40);
  CHECK(b.config.radius == doctest::Approx(critical_radius(Exponent(1.5))));
  CHECK(validate(b.config).admissible);
  // p >= 2: via the Hadamard family, n = 2^r >= target
  const int target = 20;
  int r = 1;
  while ((1 << r) < target) ++r;
  const auto h = hadamard_config(Exponent(3), r);
  CHECK(static_cast<int>(h.config.points.size()) >= target);
  CHECK(h.config.radius == doctest::Approx(critical_radius(Exponent(3))));
  CHECK(validate(h.config).admissible);
}
