#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "framekit/errors.hpp"
#include "framekit/family.hpp"
#include "framekit/generators.hpp"
#include "framekit/gramian.hpp"
#include "oracles.hpp"

using namespace framekit;

namespace {

Gramian random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Gramian m(n);
  for (std::size_t p = 0; p < n; ++p) {
    m.at(p, p) = Scalar{dist(rng), 0.0};
    for (std::size_t q = p + 1; q < n; ++q) {
      const Scalar z{dist(rng), dist(rng)};
      m.at(p, q) = z;
      m.at(q, p) = std::conj(z);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("gramian of an orthonormal basis is the identity") {
  std::vector<WeightedPoint> pts(3);
  for (std::size_t j = 0; j < 3; ++j) {
    pts[j].weight = 1.0;
    pts[j].value.assign(3, Scalar{0.0, 0.0});
    pts[j].value[j] = Scalar{1.0, 0.0};
  }
  const Gramian u = gramian(WeightedFamily(Field::Real, 3, std::move(pts)));
  CHECK(u.identity_deviation() <= 1e-15);
}

TEST_CASE("three unit vectors at 120 degrees give 3/2 times the identity") {
  const Gramian u = gramian(oracle::mercedes(1.0));
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) {
      const Scalar expect = (k == l) ? Scalar{1.5, 0.0} : Scalar{0.0, 0.0};
      CHECK(std::abs(u.at(k, l) - expect) <= 1e-12);
    }
}

TEST_CASE("dirichlet Gramian entries match the partial sums and their limits") {
  const std::size_t terms = 100000;
  const Gramian u = gramian(dirichlet_family(0.5, 0.0, terms).family);
  CHECK(std::abs(u.at(0, 0).real() - oracle::basel_partial(terms)) <= 1e-8);
  CHECK(std::abs(u.at(1, 1).real() - oracle::basel_partial(terms)) <= 1e-8);
  CHECK(std::abs(u.at(0, 1).real() - oracle::alternating_partial(terms)) <= 1e-8);
  const double pi_sq = std::numbers::pi * std::numbers::pi;
  CHECK(std::abs(u.at(0, 0).real() - pi_sq / 6.0) <= 1e-5);
  CHECK(std::abs(u.at(0, 1).real() + pi_sq / 12.0) <= 1e-5);
  CHECK(std::abs(u.at(0, 1).imag()) <= 1e-10);
  CHECK(u.hermiticity_defect() <= 1e-14);
}

TEST_CASE("gramians are positive semidefinite") {
  for (int rep = 0; rep < 30; ++rep) {
    const WeightedFamily fam = random_family(3, 5, Field::Complex, 1000 + rep);
    const Spectrum lam = hermitian_eigenvalues(gramian(fam));
    CHECK(lam.front() >= -1e-10);
  }
}

TEST_CASE("eigenvalues of the identity are all one") {
  const Spectrum lam = hermitian_eigenvalues(Gramian::identity(2));
  REQUIRE(lam.size() == 2);
  CHECK(lam[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lam[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues of [[1,2],[2,5]] are 3 -+ 2 sqrt 2") {
  Gramian m(2);
  m.at(0, 0) = Scalar{1.0, 0.0};
  m.at(0, 1) = Scalar{2.0, 0.0};
  m.at(1, 0) = Scalar{2.0, 0.0};
  m.at(1, 1) = Scalar{5.0, 0.0};
  const Spectrum lam = hermitian_eigenvalues(m);
  CHECK(std::abs(lam[0] - (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-12);
  CHECK(std::abs(lam[1] - (3.0 + 2.0 * std::sqrt(2.0))) <= 1e-12);
}

TEST_CASE("2x2 eigenvalues agree with the closed form on random Hermitian matrices") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 200; ++rep) {
    const Gramian m = random_hermitian(2, rng);
    const Spectrum lam = hermitian_eigenvalues(m);
    const auto [lo, hi] = oracle::eig2x2(m);
    const double scale = std::max(1.0, m.frobenius_norm());
    CHECK(std::abs(lam[0] - lo) <= 1e-12 * scale);
    CHECK(std::abs(lam[1] - hi) <= 1e-12 * scale);
  }
}

TEST_CASE("eigendecomposition reproduces trace, determinant, and residuals") {
  std::mt19937_64 rng(99);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const Gramian m = random_hermitian(n, rng);
      const Eigensystem es = hermitian_eigensystem(m);
      REQUIRE(es.values.size() == n);
      CHECK(std::is_sorted(es.values.begin(), es.values.end()));

      double trace_sum = 0.0;
      double det_prod = 1.0;
      for (double lam : es.values) {
        trace_sum += lam;
        det_prod *= lam;
      }
      const double fro = std::max(1.0, m.frobenius_norm());
      CHECK(std::abs(trace_sum - m.trace()) <= 1e-10 * fro);

      const double det = oracle::lu_determinant(m);
      CHECK(std::abs(det_prod - det) <= 1e-9 * std::max(1.0, std::abs(det)));

      for (std::size_t j = 0; j < n; ++j) {
        const std::vector<Scalar>& x = es.vectors[j];
        const std::vector<Scalar> mx = matvec(m, x);
        double resid = 0.0;
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          resid += std::norm(mx[k] - es.values[j] * x[k]);
          norm += std::norm(x[k]);
        }
        CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::sqrt(resid) <= 1e-9 * fro);
      }
    }
  }
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
  Gramian m(2);
  m.at(0, 0) = Scalar{1.0, 0.0};
  m.at(0, 1) = Scalar{2.0, 0.0};
  m.at(1, 0) = Scalar{0.0, 0.0};
  m.at(1, 1) = Scalar{1.0, 0.0};
  CHECK_THROWS_AS(hermitian_eigenvalues(m), InputError);
  Gramian d(2);
  d.at(0, 0) = Scalar{1.0, 1e-3};
  d.at(1, 1) = Scalar{1.0, 0.0};
  CHECK_THROWS_AS(hermitian_eigenvalues(d), InputError);
}

TEST_CASE("cross gramian of a family with itself is its gramian") {
  const WeightedFamily fam = random_family(6, 3, Field::Complex, 404);
  const Gramian a = gramian(fam);
  const Gramian b = cross_gramian(fam, fam);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) CHECK(std::abs(a.at(k, l) - b.at(k, l)) <= 1e-14);
}

TEST_CASE("cross gramian requires matching templates") {
  const WeightedFamily a = random_family(6, 3, Field::Complex, 1);
  const WeightedFamily b = random_family(7, 3, Field::Complex, 1);
  CHECK_THROWS_AS(cross_gramian(a, b), InputError);
}

TEST_CASE("matvec applies the matrix rows to the vector") {
  Gramian m(2);
  m.at(0, 0) = Scalar{1.0, 0.0};
  m.at(0, 1) = Scalar{0.0, 1.0};
  m.at(1, 0) = Scalar{0.0, -1.0};
  m.at(1, 1) = Scalar{3.0, 0.0};
  const std::vector<Scalar> v{Scalar{1.0, 0.0}, Scalar{2.0, 0.0}};
  const std::vector<Scalar> mv = matvec(m, v);
  CHECK(std::abs(mv[0] - Scalar{1.0, 2.0}) <= 1e-15);
  CHECK(std::abs(mv[1] - Scalar{6.0, -1.0}) <= 1e-15);
  CHECK_THROWS_AS(matvec(m, std::vector<Scalar>{Scalar{1.0, 0.0}}), InputError);
}

TEST_CASE("trace product matches an explicit double sum") {
  const Gramian p = oracle::random_psd(3, Field::Complex, 8);
  const Gramian u = oracle::random_psd(3, Field::Complex, 9);
  Scalar acc{0.0, 0.0};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) acc += p.at(k, l) * u.at(l, k);
  CHECK(std::abs(trace_product(p, u) - acc.real()) <= 1e-12 * std::max(1.0, std::abs(acc)));
  CHECK(std::abs(acc.imag()) <= 1e-12 * std::max(1.0, std::abs(acc)));
}

TEST_CASE("gramian constructor rejects order zero") {
  CHECK_THROWS_AS(Gramian(0), InputError);
}
