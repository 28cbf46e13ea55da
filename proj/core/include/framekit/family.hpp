#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace framekit {

using Scalar = std::complex<double>;

/// Scalar field of the ambient space F^n. Arithmetic is carried in complex
/// doubles either way; Real is the constrained view (imaginary parts are
/// required to be exactly zero).
enum class Field { Real, Complex };

/// Optional bookkeeping attached to a family. tail_bound records how much
/// energy a truncating generator may have discarded, so downstream tolerance
/// budgets stay explicit instead of silent.
struct FamilyMeta {
  std::string label;
  double tail_bound = 0.0;
};

struct WeightedPoint {
  double weight = 0.0;
  std::vector<Scalar> value;
};

/// A finite weighted family (u_j)_j of vectors in F^n.
///
/// The weights discretize the measure on the index set: a plain discrete
/// family has unit weights, a quadrature discretization of a continuous
/// family carries its quadrature weights. Component k is the scalar function
/// j -> u_j^k over the points. Instances are validated at construction and
/// immutable afterwards.
class WeightedFamily {
 public:
  /// Throws InputError (naming the point index) on: dim == 0, empty point
  /// list, value arity != dim, negative or non-finite weight, non-finite
  /// entries, all weights zero, or nonzero imaginary parts in a Real family.
  WeightedFamily(Field field, std::size_t dim, std::vector<WeightedPoint> points,
                 FamilyMeta meta = {});

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<WeightedPoint>& points() const { return points_; }
  double weight(std::size_t j) const { return points_[j].weight; }
  /// All point weights, in point order.
  std::vector<double> weights() const;
  const std::vector<Scalar>& value(std::size_t j) const { return points_[j].value; }
  const FamilyMeta& meta() const { return meta_; }

  /// Component k as a scalar function over the points (the k-th coordinate
  /// of every vector, in point order).
  std::vector<Scalar> component(std::size_t k) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<WeightedPoint> points_;
  FamilyMeta meta_;
};

/// Families playing the test-space role: a discretized (v_y)_y with one
/// block v_y in F^n per point. Same representation, different role.
using TestFamily = WeightedFamily;

/// Weighted inner product of two scalar functions sampled on the family's
/// points: sum_j w_j f_j conj(g_j). Linear in f, conjugate-linear in g.
/// Throws InputError when f or g does not have one entry per point.
Scalar weighted_inner(std::span<const Scalar> f, std::span<const Scalar> g,
                      const WeightedFamily& fam);

/// Total energy sum_j w_j ||u_j||^2. Equals the trace of the Gramian.
double total_energy(const WeightedFamily& fam);

/// Pointwise inner product of two families on a shared template:
/// sum_j w_j <a_j, b_j>_{F^n}. Linear in a, conjugate-linear in b.
Scalar family_inner(const WeightedFamily& a, const WeightedFamily& b);

/// Weighted L2 distance sqrt(sum_j w_j ||a_j - b_j||^2) on a shared template.
double weighted_distance(const WeightedFamily& a, const WeightedFamily& b);

/// Copy with every vector scaled by alpha. The result is Complex if alpha
/// has a nonzero imaginary part, otherwise the field is preserved.
WeightedFamily scale_vectors(const WeightedFamily& fam, Scalar alpha);

/// Two families live on the same weighted point set: same field, dimension,
/// point count, and bitwise-equal weights.
bool same_template(const WeightedFamily& a, const WeightedFamily& b);

/// Throws InputError naming the mismatch when !same_template(a, b).
void require_same_template(const WeightedFamily& a, const WeightedFamily& b);

}  // namespace framekit
