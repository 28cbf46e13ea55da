#pragma once

#include <cstddef>
#include <cstdint>

#include "framekit/family.hpp"

namespace framekit {

/// Truncated Dirichlet-series family in C^2: point n (1-based) has unit
/// weight and vector ((1/n) e^{2 pi i a n}, (1/n) e^{2 pi i b n}). The
/// discarded tail energy is below 2/terms, recorded in the family's meta.
/// degenerate flags a - b within 1e-12 of an integer; the two components
/// then coincide up to a constant phase and the family cannot be a frame.
struct DirichletFamily {
  WeightedFamily family;
  bool degenerate;
};
DirichletFamily dirichlet_family(double a, double b, std::size_t terms);

/// Equispaced quadrature discretization of the unit-circle family:
/// nodes points x_j = 2 pi j / nodes, weights 2 pi / nodes, vectors
/// scale * (cos x_j, sin x_j). Gramian is scale^2 pi I for nodes >= 3
/// (exact sum identities), so scale = 1/sqrt(pi) is Parseval.
/// Throws InputError for nodes < 3.
WeightedFamily circle_frame(std::size_t nodes, double scale);

/// Unit-weight family with independent standard normal entries (real and
/// imaginary parts separately for Field::Complex). Deterministic under seed.
WeightedFamily random_family(std::size_t points, std::size_t dim, Field field,
                             std::uint64_t seed);

}  // namespace framekit
