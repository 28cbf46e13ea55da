#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "framekit/family.hpp"
#include "framekit/gramian.hpp"

// Independent verification routes for the test suites. Everything here
// deliberately avoids the library's computation paths: rank comes from row
// reduction instead of eigenvalues, determinants from LU instead of spectra,
// extended quotients from the raw double sum instead of the trace form.
namespace oracle {

using framekit::Field;
using framekit::Gramian;
using framekit::Scalar;
using framekit::WeightedFamily;
using framekit::WeightedPoint;

/// Rank of the weight-scaled component matrix (row j = sqrt(w_j) * u_j) by
/// Gaussian elimination with partial pivoting.
std::size_t component_rank(const WeightedFamily& fam, double pivot_tol = 1e-10);

/// Closed-form ascending eigenvalues of a 2x2 Hermitian matrix:
/// mean -+ sqrt(((a11-a22)/2)^2 + |a12|^2).
std::pair<double, double> eig2x2(const Gramian& m);

/// Determinant of a Hermitian matrix via complex LU with partial pivoting;
/// the imaginary part (rounding noise) is discarded.
double lu_determinant(const Gramian& m);

/// Raw double-sum form of the extended quotient:
/// (sum_{i,j} w_i nu_j |<v_j, u_i>|^2) / (sum_j nu_j ||v_j||^2).
double direct_extended_quotient(const WeightedFamily& tv, const WeightedFamily& fam);

/// Partial sums sum_{n=1}^{terms} 1/n^2 and sum_{n=1}^{terms} (-1)^n/n^2.
double basel_partial(std::size_t terms);
double alternating_partial(std::size_t terms);

/// Deterministic test data.
std::vector<Scalar> random_vector(std::size_t n, Field field, std::uint64_t seed);
std::vector<Scalar> random_unit_vector(std::size_t n, Field field, std::uint64_t seed);
Gramian random_psd(std::size_t n, Field field, std::uint64_t seed);

/// Concatenation of two families with the same dimension and field
/// (disjoint-support union of the index sets).
WeightedFamily concat(const WeightedFamily& a, const WeightedFamily& b);

/// Three unit-weight vectors at 120-degree spacing, scaled.
WeightedFamily mercedes(double scale);

/// Unit-weight family whose last component duplicates the first, so the
/// components can never be free.
WeightedFamily rank_deficient_family(std::size_t points, std::size_t dim, Field field,
                                     std::uint64_t seed);

}  // namespace oracle
