#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "framekit/family.hpp"

namespace framekit {

/// Number of points carrying strictly positive weight: the dimension of the
/// discretized L2 space the components live in, hence the hard ceiling on
/// how many independent components the point set can support.
std::size_t effective_dimension(const WeightedFamily& fam);
std::size_t effective_dimension(std::span<const double> weights);

/// What the auxiliary construction must deliver relative to the avoid list.
///  Independent  the stacked system (avoid components + new components) has
///               smallest singular value > 1e-8 in the weighted geometry
///  Orthonormal  the new components are weighted-orthonormal and orthogonal
///               to every avoid component (cross inner products <= 1e-10)
enum class AuxiliaryMode { Independent, Orthonormal };

/// Draws an n-component family on the given weighted point set, independent
/// of (or orthogonal to) everything in avoid. Entries at zero-weight points
/// are set to zero. Requires effective dimension >= dim + total avoid
/// components, and >= 3*dim in Orthonormal mode (CapacityError otherwise);
/// 20 failed random draws raise GenerationError. Deterministic under seed.
WeightedFamily auxiliary_family(std::span<const double> weights, std::size_t dim,
                                Field field, const std::vector<WeightedFamily>& avoid,
                                AuxiliaryMode mode, std::uint64_t seed);

/// Frame within eps of u: v_t = u + t (a - u) with t drawn uniformly from
/// (0, eps / (dist + 1)), dist the weighted distance from u to a, redrawn
/// until is_frame(v_t) holds (at most 64 draws, then GenerationError).
/// The distance to u is below eps by construction. a must itself be a frame
/// on u's template (InputError otherwise). Deterministic under seed.
WeightedFamily density_perturb(const WeightedFamily& u, const WeightedFamily& a,
                               double eps, std::uint64_t seed);

/// Two-leg polygonal path u -- a -- v through an auxiliary family a.
///  Frame     leg(t) = t * endpoint + (1 - t) * a; stays a frame when the
///            stacked components of a and the endpoints are independent
///  Parseval  leg(t) = (t * endpoint + (1 - t) * a) / sqrt(2 t^2 - 2 t + 1);
///            stays Parseval when endpoints and a are Parseval and a is
///            orthogonal to both endpoints
enum class PathMode { Frame, Parseval };
enum class PathLeg { U, V };

/// Plain aggregate so invalid paths can be built deliberately (negative
/// controls); make_path is the checked constructor.
struct PathSpec {
  WeightedFamily endpoint_u;
  WeightedFamily endpoint_v;
  WeightedFamily auxiliary;
  PathMode mode;
};

/// Endpoint hypotheses checked by make_path: frames in Frame mode, Parseval
/// to this tolerance in Parseval mode.
inline constexpr double kPathEndpointParsevalTol = 1e-8;

/// Validates the endpoints, draws the auxiliary on the shared template
/// (Independent for Frame mode, Orthonormal for Parseval mode), and checks
/// the cross-Gramian condition in Parseval mode.
PathSpec make_path(const WeightedFamily& u, const WeightedFamily& v, PathMode mode,
                   std::uint64_t seed);

/// Evaluates one leg at t in [0, 1]. t = 1 returns the endpoint and t = 0
/// returns the auxiliary, bit-identical.
WeightedFamily path_eval(const PathSpec& path, PathLeg leg, double t);

/// Certification tolerance on max |U(t) - I| along a Parseval path.
inline constexpr double kPathParsevalTol = 1e-9;

struct PathSampleFailure {
  PathLeg leg;
  double t;
  double metric;  ///< smallest eigenvalue (Frame) or identity deviation (Parseval)
};

struct PathCertification {
  PathMode mode;
  std::size_t samples = 0;  ///< per leg
  bool certified = false;
  double min_lower_bound = 0.0;         ///< Frame mode: min over samples
  double max_parseval_deviation = 0.0;  ///< Parseval mode: max over samples
  double tol = 0.0;                     ///< threshold actually applied
  std::vector<PathSampleFailure> failures;
};

/// Samples both legs at `samples` equispaced parameters (>= 2, endpoints
/// included) and checks the mode's predicate at every sample. Frame mode
/// applies one threshold for the whole path, 1e-10 * max(1, largest upper
/// bound seen); Parseval mode applies kPathParsevalTol.
PathCertification certify_path(const PathSpec& path, std::size_t samples);

}  // namespace framekit
