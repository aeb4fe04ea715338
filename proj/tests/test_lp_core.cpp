#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lpball/config.hpp"
#include "lpball/constructions.hpp"
#include "lpball/vector_ops.hpp"

using namespace lpball;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Vector random_vec(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g;
  Vector v(d);
  for (int i = 0; i < d; ++i) v[i] = g(rng);
  return v;
}

Exponent random_exponent(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double pick = u(rng);
  if (pick < 0.1) return Exponent(1.0);
  if (pick < 0.2) return Exponent::inf();
  return Exponent(1.0 + 9.0 * u(rng));
}

}  // namespace

TEST_CASE("norm_p on known values") {
  CHECK(norm_p(vec({3, 4}), Exponent(2)) == doctest::Approx(5.0));
  CHECK(norm_p(vec({1, -1, 0}), Exponent(1)) == doctest::Approx(2.0));
  CHECK(norm_p(vec({1, -2, 3}), Exponent::inf()) == doctest::Approx(3.0));
  CHECK(norm_p(Vector(), Exponent(2)) == 0.0);
  CHECK(norm_p(vec({0, 0}), Exponent(1.7)) == 0.0);
}

TEST_CASE("norm_p rejects non-finite coordinates") {
  Vector v = vec({1.0, std::nan("")});
  CHECK_THROWS_AS(norm_p(v, Exponent(2)), std::invalid_argument);
  v[1] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(norm_p(v, Exponent(1)), std::invalid_argument);
}

TEST_CASE("norm_p stable at large p") {
  // factored form keeps large exponents from overflowing
  const Vector v = vec({1e-200, 2e-200});
  const double n = norm_p(v, Exponent(100.0));
  CHECK(n == doctest::Approx(2e-200 * std::pow(1.0 + std::pow(0.5, 100.0), 0.01)));
  CHECK(std::isfinite(norm_p(vec({1e300, 1e300}), Exponent(80.0))));
}

TEST_CASE("distance_p on known values") {
  CHECK(distance_p(vec({1, 0}), vec({0, 1}), Exponent(2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(distance_p(vec({1, 0}), vec({0, 1}), Exponent(1)) == doctest::Approx(2.0));
  const Vector v = vec({0.3, -0.7, 2.0});
  CHECK(distance_p(v, v, Exponent(3.5)) == 0.0);
}

TEST_CASE("distance_p zero-extends unequal lengths") {
  CHECK(distance_p(vec({1, 0, 5}), vec({1, 0}), Exponent(2)) == doctest::Approx(5.0));
  CHECK(distance_p(vec({1}), vec({1, 0, 0, 0}), Exponent(1)) == 0.0);
}

TEST_CASE("aggregate_norm") {
  std::vector<Vector> two = {vec({1, 0}), vec({0, 1})};
  CHECK(aggregate_norm(two, Exponent(2)) == doctest::Approx(std::sqrt(2.0)));
  std::vector<Vector> ones = {vec({1}), vec({1}), vec({1})};
  CHECK(aggregate_norm(ones, Exponent(1)) == doctest::Approx(3.0));
  std::vector<Vector> mix = {vec({2, 0}), vec({0, -3})};
  CHECK(aggregate_norm(mix, Exponent::inf()) == doctest::Approx(3.0));
  CHECK_THROWS_AS(aggregate_norm(std::vector<Vector>{}, Exponent(2)), std::invalid_argument);
}

TEST_CASE("aggregate_norm at p = inf matches the large-p limit") {
  std::mt19937_64 rng(11);
  std::vector<Vector> tuple;
  for (int i = 0; i < 4; ++i) tuple.push_back(random_vec(rng, 5));
  const double at_inf = aggregate_norm(tuple, Exponent::inf());
  const double at_big = aggregate_norm(tuple, Exponent(200.0));
  CHECK(at_big == doctest::Approx(at_inf).epsilon(0.02));
  CHECK(at_big >= at_inf);
}

TEST_CASE("validate known configs") {
  PointConfig two{Exponent(2), 0.5, {vec({0.5}), vec({-0.5})}};
  auto r = validate(two);
  CHECK(r.admissible);
  CHECK(r.min_pairwise_distance == doctest::Approx(1.0));
  CHECK(r.max_norm == doctest::Approx(0.5));

  PointConfig tight{Exponent(2), 0.49, {vec({0.49}), vec({-0.49})}};
  auto r2 = validate(tight);
  CHECK_FALSE(r2.admissible);
  CHECK(r2.min_pairwise_distance == doctest::Approx(0.98));
  CHECK(r2.worst_pair == std::pair<int, int>{0, 1});

  auto basis = basis_config(Exponent(2), 4);
  basis.config.radius = std::pow(2.0, -0.5);
  CHECK(validate(basis.config).admissible);
}

TEST_CASE("validate degenerate configs are vacuous") {
  PointConfig empty{Exponent(2), 0.1, {}};
  CHECK(validate(empty).admissible);
  PointConfig one{Exponent(1), 0.0, {vec({0, 0})}};
  auto r = validate(one);
  CHECK(r.admissible);
  CHECK_FALSE(r.worst_pair.has_value());
}

TEST_CASE("triangle inequality and homogeneity over random inputs") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    const Exponent p = random_exponent(rng);
    const Vector a = random_vec(rng, 6), b = random_vec(rng, 6);
    CHECK(norm_p(a + b, p) <= norm_p(a, p) + norm_p(b, p) + 1e-12);
    const double c = u(rng);
    CHECK(norm_p(c * a, p) ==
          doctest::Approx(std::abs(c) * norm_p(a, p)).epsilon(1e-12));
  }
}

TEST_CASE("norm_p is non-increasing in p") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1.0, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector v = random_vec(rng, 5);
    double p1 = u(rng), p2 = u(rng);
    if (p1 > p2) std::swap(p1, p2);
    CHECK(norm_p(v, Exponent(p1)) >= norm_p(v, Exponent(p2)) - 1e-12);
    CHECK(norm_p(v, Exponent(p2)) >= norm_p(v, Exponent::inf()) - 1e-12);
  }
}

TEST_CASE("zero padding changes nothing") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Exponent p = random_exponent(rng);
    const Vector v = random_vec(rng, 4);
    Vector padded = Vector::Zero(9);
    padded.head(4) = v;
    CHECK(norm_p(v, p) == norm_p(padded, p));
    const Vector w = random_vec(rng, 4);
    CHECK(distance_p(v, w, p) == distance_p(padded, w, p));
  }

  PointConfig config{Exponent(1.5), 0.8, {vec({0.1, 0.7}), vec({-0.4, 0.2})}};
  PointConfig padded = config;
  for (auto& v : padded.points) {
    Vector longer = Vector::Zero(v.size() + 3);
    longer.head(v.size()) = v;
    v = longer;
  }
  const auto a = validate(config), b = validate(padded);
  CHECK(a.max_norm == b.max_norm);
  CHECK(a.min_pairwise_distance == b.min_pairwise_distance);
  CHECK(a.admissible == b.admissible);
}

TEST_CASE("validate is permutation invariant") {
  std::mt19937_64 rng(5);
  PointConfig config{Exponent(2), 0.7, {}};
  for (int i = 0; i < 5; ++i) config.points.push_back(random_vec(rng, 3) * 0.3);
  const auto before = validate(config);
  std::shuffle(config.points.begin(), config.points.end(), rng);
  const auto after = validate(config);
  CHECK(before.max_norm == after.max_norm);
  CHECK(before.min_pairwise_distance == after.min_pairwise_distance);
  CHECK(before.admissible == after.admissible);
}

TEST_CASE("exponent conjugation is an involution") {
  for (double p : {1.0, 1.2, 1.5, 2.0, 3.0, 7.5, 64.0}) {
    const Exponent e(p);
    CHECK(e.conjugate().conjugate().value() == doctest::Approx(p).epsilon(1e-14));
  }
  CHECK(Exponent(1.0).conjugate().is_inf());
  CHECK(Exponent::inf().conjugate().value() == 1.0);
  CHECK_THROWS_AS(Exponent(0.9), std::invalid_argument);
}
