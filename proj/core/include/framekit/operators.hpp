#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "framekit/family.hpp"
#include "framekit/gramian.hpp"

namespace framekit {

/// Coefficient field c_ij indexed by (frame point i, test point j), together
/// with both weight sequences so weighted norms and inner products are
/// self-contained. Storage is row-major in i.
class CoefficientField {
 public:
  CoefficientField(std::vector<double> x_weights, std::vector<double> y_weights);

  std::size_t x_size() const { return x_weights_.size(); }
  std::size_t y_size() const { return y_weights_.size(); }
  const std::vector<double>& x_weights() const { return x_weights_; }
  const std::vector<double>& y_weights() const { return y_weights_; }

  Scalar& at(std::size_t i, std::size_t j) { return c_[i * y_weights_.size() + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return c_[i * y_weights_.size() + j];
  }

  /// sum_ij w_i^X w_j^Y |c_ij|^2.
  double weighted_norm_sq() const;

 private:
  std::vector<double> x_weights_;
  std::vector<double> y_weights_;
  std::vector<Scalar> c_;
};

/// Doubly weighted inner product sum_ij w_i w_j a_ij conj(b_ij); the two
/// fields must share both weight sequences.
Scalar coefficient_inner(const CoefficientField& a, const CoefficientField& b);

/// Frame operator S v = sum_i w_i <v, u_i> u_i, computed from the definition.
/// Agrees with the Gramian matrix action U v up to rounding.
std::vector<Scalar> frame_operator_apply(const WeightedFamily& fam,
                                         std::span<const Scalar> v);

/// Extended analysis operator: c_ij = <v_j, u_i>. The plain F^n inner
/// product; the measures enter only through the weights carried alongside.
CoefficientField analysis(const WeightedFamily& fam, const TestFamily& tv);

/// Extended synthesis operator: block j of the output is
/// sum_i w_i^X c_ij u_i. The output lives on the test template (weights
/// w^Y); it stays Real only when the frame family and every coefficient are.
TestFamily synthesis(const WeightedFamily& fam, const CoefficientField& c);

/// Extended frame operator: block j is frame_operator_apply(fam, v_j), the
/// same arithmetic path per block, so the operator is block-diagonal by
/// construction.
TestFamily extended_frame_operator(const WeightedFamily& fam, const TestFamily& tv);

/// Randomized consistency report for the extension machinery. For each trial
/// a fresh multi-block test family is drawn ("blocks" points, alternating
/// unit and random weights); the quadratic form <S tv, tv> is checked
/// against A ||tv||^2 and B ||tv||^2, and the delta- and indicator-embedding
/// reductions of the extended quotient are checked against quotient_N.
/// The block-diagonal spectrum is compared against the spectrum of U
/// repeated per block via an explicit block-matrix eigendecomposition.
struct ExtensionCheckReport {
  std::size_t trials = 0;
  std::size_t blocks = 0;
  double lower_bound = 0.0;     ///< max(0, smallest Gramian eigenvalue)
  double upper_bound = 0.0;     ///< largest Gramian eigenvalue
  double extended_lower = 0.0;  ///< smallest eigenvalue of the block matrix
  double extended_upper = 0.0;  ///< largest eigenvalue of the block matrix
  double max_bound_violation = 0.0;      ///< relative, quadratic-form sandwich
  double max_delta_mismatch = 0.0;       ///< relative, single-block reduction
  double max_indicator_mismatch = 0.0;   ///< relative, indicator reduction
  double max_spectrum_mismatch = 0.0;    ///< absolute, block spectrum transfer
  double tol_bounds = 1e-10;
  double tol_reduction = 1e-12;
  double tol_spectrum = 1e-9;

  bool passed() const {
    return max_bound_violation <= tol_bounds && max_delta_mismatch <= tol_reduction &&
           max_indicator_mismatch <= tol_reduction && max_spectrum_mismatch <= tol_spectrum;
  }
};

ExtensionCheckReport extension_equivalence_check(const WeightedFamily& fam,
                                                 std::size_t trials, std::size_t blocks,
                                                 std::uint64_t seed);

}  // namespace framekit
