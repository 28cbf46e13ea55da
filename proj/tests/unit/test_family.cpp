#include <cmath>
#include <numbers>

#include <doctest.h>

#include "framekit/errors.hpp"
#include "framekit/family.hpp"
#include "framekit/generators.hpp"
#include "framekit/gramian.hpp"
#include "oracles.hpp"

using namespace framekit;

namespace {

WeightedFamily standard_basis(std::size_t n) {
  std::vector<WeightedPoint> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    pts[j].weight = 1.0;
    pts[j].value.assign(n, Scalar{0.0, 0.0});
    pts[j].value[j] = Scalar{1.0, 0.0};
  }
  return WeightedFamily(Field::Real, n, std::move(pts));
}

}  // namespace

TEST_CASE("weighted inner product of constant functions sums the weights") {
  const WeightedFamily basis = standard_basis(2);
  const std::vector<Scalar> ones{Scalar{1.0, 0.0}, Scalar{1.0, 0.0}};
  const Scalar ip = weighted_inner(ones, ones, basis);
  CHECK(ip.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ip.imag() == 0.0);
}

TEST_CASE("weighted inner product respects the conjugate-linear slot") {
  const WeightedFamily basis = standard_basis(2);
  const std::vector<Scalar> f{Scalar{0.0, 1.0}, Scalar{0.0, 0.0}};
  const std::vector<Scalar> g{Scalar{1.0, 0.0}, Scalar{0.0, 0.0}};
  CHECK(weighted_inner(f, g, basis) == Scalar{0.0, 1.0});
  CHECK(weighted_inner(g, f, basis) == Scalar{0.0, -1.0});
}

TEST_CASE("equispaced circle components are weighted-orthogonal") {
  const WeightedFamily circle = circle_frame(64, 1.0);
  const Scalar ip = weighted_inner(circle.component(0), circle.component(1), circle);
  CHECK(std::abs(ip) <= 1e-12);
}

TEST_CASE("dirichlet cross inner product matches the alternating series") {
  const WeightedFamily fam = dirichlet_family(0.5, 0.0, 100000).family;
  const Scalar ip = weighted_inner(fam.component(0), fam.component(1), fam);
  CHECK(std::abs(ip - Scalar{oracle::alternating_partial(100000), 0.0}) <= 1e-8);
  const double pi_sq_12 = std::numbers::pi * std::numbers::pi / 12.0;
  CHECK(std::abs(ip.real() + pi_sq_12) <= 1e-5);
  CHECK(std::abs(ip.imag()) <= 1e-8);
}

TEST_CASE("weighted inner product rejects length mismatches") {
  const WeightedFamily basis = standard_basis(2);
  const std::vector<Scalar> short_f{Scalar{1.0, 0.0}};
  CHECK_THROWS_AS(weighted_inner(short_f, short_f, basis), InputError);
}

TEST_CASE("total energy of the standard basis counts the vectors") {
  CHECK(total_energy(standard_basis(2)) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("total energy of the circle family is 2 pi scale^2") {
  CHECK(std::abs(total_energy(circle_frame(64, 1.0)) - 2.0 * std::numbers::pi) <= 1e-12);
  CHECK(std::abs(total_energy(circle_frame(7, 2.0)) - 8.0 * std::numbers::pi) <= 1e-12);
}

TEST_CASE("dirichlet energy approaches 2 * pi^2/6 with tail below the recorded bound") {
  const DirichletFamily d = dirichlet_family(0.5, 0.0, 100000);
  const double limit = 2.0 * std::numbers::pi * std::numbers::pi / 6.0;
  const double energy = total_energy(d.family);
  CHECK(std::abs(energy - limit) <= d.family.meta().tail_bound);
  CHECK(std::abs(energy - limit) <= 2e-5);
}

TEST_CASE("energy equals the Gramian trace") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const WeightedFamily fam = random_family(9, 4, Field::Complex, seed);
    const double energy = total_energy(fam);
    CHECK(std::abs(energy - gramian(fam).trace()) <= 1e-12 * std::max(1.0, energy));
  }
}

TEST_CASE("gramian of a disjoint-support concatenation is the sum of gramians") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const WeightedFamily a = random_family(6, 3, Field::Complex, seed);
    const WeightedFamily b = random_family(4, 3, Field::Complex, seed + 100);
    const Gramian whole = gramian(oracle::concat(a, b));
    const Gramian ga = gramian(a);
    const Gramian gb = gramian(b);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t l = 0; l < 3; ++l)
        CHECK(std::abs(whole.at(k, l) - ga.at(k, l) - gb.at(k, l)) <=
              1e-12 * std::max(1.0, std::abs(whole.at(k, l))));
  }
}

TEST_CASE("scaling the vectors scales the Gramian by |alpha|^2") {
  const WeightedFamily fam = random_family(7, 3, Field::Complex, 5);
  const Scalar alpha{1.5, -2.0};
  const Gramian scaled = gramian(scale_vectors(fam, alpha));
  const Gramian base = gramian(fam);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l)
      CHECK(std::abs(scaled.at(k, l) - std::norm(alpha) * base.at(k, l)) <=
            1e-12 * std::max(1.0, std::abs(scaled.at(k, l))));
}

TEST_CASE("scaling a real family by a complex alpha promotes the field") {
  const WeightedFamily fam = random_family(4, 2, Field::Real, 3);
  CHECK(scale_vectors(fam, Scalar{2.0, 0.0}).field() == Field::Real);
  CHECK(scale_vectors(fam, Scalar{0.0, 1.0}).field() == Field::Complex);
}

TEST_CASE("family construction rejects invalid input") {
  CHECK_THROWS_AS(WeightedFamily(Field::Real, 0, {WeightedPoint{1.0, {}}}), InputError);
  CHECK_THROWS_AS(WeightedFamily(Field::Real, 1, {}), InputError);
  CHECK_THROWS_AS(
      WeightedFamily(Field::Real, 1, {WeightedPoint{-1.0, {Scalar{1.0, 0.0}}}}),
      InputError);
  CHECK_THROWS_AS(
      WeightedFamily(Field::Real, 2, {WeightedPoint{1.0, {Scalar{1.0, 0.0}}}}),
      InputError);
  CHECK_THROWS_AS(
      WeightedFamily(Field::Real, 1,
                     {WeightedPoint{1.0, {Scalar{std::nan(""), 0.0}}}}),
      InputError);
  CHECK_THROWS_AS(
      WeightedFamily(Field::Real, 1, {WeightedPoint{1.0, {Scalar{0.0, 0.5}}}}),
      InputError);
  CHECK_THROWS_AS(
      WeightedFamily(Field::Real, 1, {WeightedPoint{0.0, {Scalar{1.0, 0.0}}}}),
      InputError);
}

TEST_CASE("zero-weight points are allowed alongside positive ones") {
  const WeightedFamily fam(Field::Real, 1,
                           {WeightedPoint{0.0, {Scalar{5.0, 0.0}}},
                            WeightedPoint{2.0, {Scalar{1.0, 0.0}}}});
  CHECK(total_energy(fam) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("template comparison checks field, dimension, size, and weights") {
  const WeightedFamily a = random_family(5, 2, Field::Real, 1);
  const WeightedFamily b = random_family(5, 2, Field::Real, 2);
  CHECK(same_template(a, b));
  CHECK_FALSE(same_template(a, random_family(6, 2, Field::Real, 1)));
  CHECK_FALSE(same_template(a, random_family(5, 3, Field::Real, 1)));
  CHECK_FALSE(same_template(a, random_family(5, 2, Field::Complex, 1)));
  CHECK_FALSE(same_template(a, circle_frame(5, 1.0)));
  CHECK_THROWS_AS(require_same_template(a, circle_frame(5, 1.0)), InputError);
}

TEST_CASE("family inner product pairs blocks pointwise") {
  const WeightedFamily a = random_family(6, 3, Field::Complex, 11);
  const WeightedFamily b = random_family(6, 3, Field::Complex, 12);
  Scalar expected{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < 3; ++k)
      expected += a.weight(j) * a.value(j)[k] * std::conj(b.value(j)[k]);
  CHECK(std::abs(family_inner(a, b) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
  CHECK(std::abs(family_inner(a, a).real() - total_energy(a)) <= 1e-12 * total_energy(a));
}

TEST_CASE("weighted distance is the L2 distance of the difference") {
  const WeightedFamily a = random_family(6, 2, Field::Real, 21);
  const WeightedFamily b = random_family(6, 2, Field::Real, 22);
  CHECK(weighted_distance(a, a) == 0.0);
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < 2; ++k) acc += std::norm(a.value(j)[k] - b.value(j)[k]);
  CHECK(weighted_distance(a, b) == doctest::Approx(std::sqrt(acc)).epsilon(1e-13));
}
