#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "framekit/family.hpp"

namespace framekit {

/// Dense Hermitian matrix in row-major storage. Used for the Gramian of a
/// family's components and for any other Hermitian form the library handles
/// (rank-one test matrices, block-diagonal extensions, PSD factors).
class Gramian {
 public:
  /// Zero matrix of order n. Throws InputError when n == 0.
  explicit Gramian(std::size_t n);

  static Gramian identity(std::size_t n);

  std::size_t size() const { return n_; }
  Scalar& at(std::size_t k, std::size_t l) { return a_[k * n_ + l]; }
  const Scalar& at(std::size_t k, std::size_t l) const { return a_[k * n_ + l]; }

  double max_abs_entry() const;
  /// max_{k,l} |A_kl - conj(A_lk)|; zero for an exactly Hermitian matrix.
  double hermiticity_defect() const;
  /// Real part of the trace (the trace of a Hermitian matrix is real).
  double trace() const;
  double frobenius_norm() const;
  /// max_{k,l} |A_kl - I_kl|, the entrywise deviation from the identity.
  double identity_deviation() const;

 private:
  std::size_t n_;
  std::vector<Scalar> a_;
};

/// Gramian of the components of fam: U_kl = <u^k, u^l> = sum_j w_j u_j^k
/// conj(u_j^l). Hermitian positive semidefinite by construction.
Gramian gramian(const WeightedFamily& fam);

/// Cross Gramian of two families on a shared template:
/// C_kl = <f^k, g^l> = sum_j w_j f_j^k conj(g_j^l). Not Hermitian in general.
Gramian cross_gramian(const WeightedFamily& f, const WeightedFamily& g);

/// Matrix-vector product (sum_l A_kl v_l)_k.
std::vector<Scalar> matvec(const Gramian& a, std::span<const Scalar> v);

/// Re Tr(P U) = Re sum_{k,l} P_kl U_lk. Real for a Hermitian pair; the
/// imaginary part is rounding noise and is discarded.
double trace_product(const Gramian& p, const Gramian& u);

/// Eigenvalues in ascending order.
using Spectrum = std::vector<double>;

struct Eigensystem {
  Spectrum values;                           ///< ascending
  std::vector<std::vector<Scalar>> vectors;  ///< vectors[i] pairs with values[i]
};

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations. Stops when
/// the off-diagonal Frobenius norm falls below 1e-13 * ||M||_F; at most 100
/// sweeps. Throws InputError when the input fails the Hermiticity check
/// (defect > 1e-12 * max(1, largest entry)).
Spectrum hermitian_eigenvalues(const Gramian& m);

/// Same iteration, also accumulating the unitary: returns ascending
/// eigenvalues with matching eigenvectors.
Eigensystem hermitian_eigensystem(const Gramian& m);

}  // namespace framekit
