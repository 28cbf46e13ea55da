#include "framekit/topology.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "framekit/analysis.hpp"
#include "framekit/errors.hpp"
#include "framekit/gramian.hpp"

namespace framekit {

namespace {

constexpr double kStackedSigmaMin = 1e-8;
constexpr double kGramSchmidtPivot = 1e-8;
constexpr double kOrthogonalityTol = 1e-10;
constexpr int kAuxiliaryDrawBudget = 20;
constexpr int kPerturbDrawBudget = 64;

using Component = std::vector<Scalar>;

Scalar component_inner(const Component& f, const Component& g,
                       std::span<const double> w) {
  Scalar acc{0.0, 0.0};
  for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * f[j] * std::conj(g[j]);
  return acc;
}

double component_norm(const Component& f, std::span<const double> w) {
  double acc = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * std::norm(f[j]);
  return std::sqrt(acc);
}

// Subtracts the projections onto an orthonormal set, twice; classical
// Gram-Schmidt loses orthogonality that the second pass restores.
void project_out(Component& f, const std::vector<Component>& basis,
                 std::span<const double> w) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Component& q : basis) {
      const Scalar coeff = component_inner(f, q, w);
      for (std::size_t j = 0; j < w.size(); ++j) f[j] -= coeff * q[j];
    }
  }
}

WeightedFamily package_components(std::span<const double> weights, Field field,
                                  const std::vector<Component>& comps, std::string label) {
  std::vector<WeightedPoint> pts(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    pts[j].weight = weights[j];
    pts[j].value.resize(comps.size());
    for (std::size_t k = 0; k < comps.size(); ++k) pts[j].value[k] = comps[k][j];
  }
  return WeightedFamily(field, comps.size(), std::move(pts),
                        FamilyMeta{std::move(label), 0.0});
}

}  // namespace

std::size_t effective_dimension(const WeightedFamily& fam) {
  std::size_t count = 0;
  for (const WeightedPoint& p : fam.points())
    if (p.weight > 0.0) ++count;
  return count;
}

std::size_t effective_dimension(std::span<const double> weights) {
  std::size_t count = 0;
  for (double w : weights)
    if (w > 0.0) ++count;
  return count;
}

WeightedFamily auxiliary_family(std::span<const double> weights, std::size_t dim,
                                Field field, const std::vector<WeightedFamily>& avoid,
                                AuxiliaryMode mode, std::uint64_t seed) {
  if (dim == 0) throw InputError("auxiliary: dimension must be positive");
  if (weights.empty()) throw InputError("auxiliary: weight template is empty");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InputError("auxiliary: weights must be nonnegative and finite");

  std::size_t total_avoid = 0;
  for (const WeightedFamily& fam : avoid) {
    if (fam.field() != field) throw InputError("auxiliary: avoid family field differs");
    if (fam.size() != weights.size())
      throw InputError("auxiliary: avoid family lives on a different point set");
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (fam.weight(j) != weights[j])
        throw InputError("auxiliary: avoid family weights differ at point " +
                         std::to_string(j));
    total_avoid += fam.dim();
  }

  const std::size_t eff = effective_dimension(weights);
  std::size_t required = dim + total_avoid;
  if (mode == AuxiliaryMode::Orthonormal) required = std::max(required, 3 * dim);
  if (eff < required)
    throw CapacityError("auxiliary: effective dimension " + std::to_string(eff) +
                        " cannot hold " + std::to_string(required) + " components");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto draw_component = [&]() {
    Component f(weights.size(), Scalar{0.0, 0.0});
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (weights[j] == 0.0) continue;
      f[j] = field == Field::Complex ? Scalar{gauss(rng), gauss(rng)}
                                     : Scalar{gauss(rng), 0.0};
    }
    return f;
  };

  std::vector<Component> fixed;
  for (const WeightedFamily& fam : avoid)
    for (std::size_t k = 0; k < fam.dim(); ++k) fixed.push_back(fam.component(k));

  if (mode == AuxiliaryMode::Independent) {
    for (int attempt = 0; attempt < kAuxiliaryDrawBudget; ++attempt) {
      std::vector<Component> candidate(dim);
      for (Component& f : candidate) f = draw_component();

      std::vector<const Component*> stacked;
      for (const Component& f : fixed) stacked.push_back(&f);
      for (const Component& f : candidate) stacked.push_back(&f);
      const std::size_t r = stacked.size();
      Gramian gram(r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
          gram.at(a, b) = component_inner(*stacked[a], *stacked[b], weights);
      const double lambda_min = hermitian_eigenvalues(gram).front();
      const double sigma_min = std::sqrt(std::max(0.0, lambda_min));
      if (sigma_min > kStackedSigmaMin)
        return package_components(weights, field, candidate, "auxiliary(independent)");
    }
    throw GenerationError("auxiliary: no independent draw within " +
                          std::to_string(kAuxiliaryDrawBudget) + " attempts");
  }

  // Orthonormal mode: orthonormalize the avoid span, then grow the new
  // components inside its orthogonal complement.
  std::vector<Component> basis;
  for (Component f : fixed) {
    const double original = component_norm(f, weights);
    if (original == 0.0) continue;
    project_out(f, basis, weights);
    const double residual = component_norm(f, weights);
    if (residual <= kGramSchmidtPivot * original) continue;
    for (Scalar& z : f) z /= residual;
    basis.push_back(std::move(f));
  }

  const std::size_t avoid_rank = basis.size();
  std::vector<Component> accepted;
  int failed_draws = 0;
  while (accepted.size() < dim) {
    if (failed_draws >= kAuxiliaryDrawBudget)
      throw GenerationError("auxiliary: no orthonormal draw within " +
                            std::to_string(kAuxiliaryDrawBudget) + " attempts");
    Component f = draw_component();
    const double original = component_norm(f, weights);
    if (original == 0.0) {
      ++failed_draws;
      continue;
    }
    project_out(f, basis, weights);
    const double residual = component_norm(f, weights);
    if (residual <= kGramSchmidtPivot * original) {
      ++failed_draws;
      continue;
    }
    for (Scalar& z : f) z /= residual;
    basis.push_back(f);
    accepted.push_back(std::move(f));
  }

  WeightedFamily out =
      package_components(weights, field, accepted, "auxiliary(orthonormal)");
  if (gramian(out).identity_deviation() > kOrthogonalityTol)
    throw GenerationError("auxiliary: orthonormalization drifted beyond tolerance");
  for (std::size_t k = 0; k < avoid_rank; ++k) {
    for (const Component& a : accepted) {
      if (std::abs(component_inner(a, basis[k], weights)) > kOrthogonalityTol)
        throw GenerationError("auxiliary: residual overlap with the avoid span");
    }
  }
  return out;
}

WeightedFamily density_perturb(const WeightedFamily& u, const WeightedFamily& a,
                               double eps, std::uint64_t seed) {
  require_same_template(u, a);
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw InputError("perturbation radius must be positive and finite");
  if (!is_frame(a)) throw InputError("auxiliary family must be a frame");

  const double dist = weighted_distance(a, u);
  const double hi = eps / (dist + 1.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(0.0, hi);

  for (int attempt = 0; attempt < kPerturbDrawBudget; ++attempt) {
    const double t = draw(rng);
    if (t == 0.0) continue;
    std::vector<WeightedPoint> pts(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
      pts[j].weight = u.weight(j);
      pts[j].value.resize(u.dim());
      for (std::size_t k = 0; k < u.dim(); ++k)
        pts[j].value[k] = u.value(j)[k] + t * (a.value(j)[k] - u.value(j)[k]);
    }
    WeightedFamily candidate(u.field(), u.dim(), std::move(pts),
                             FamilyMeta{u.meta().label.empty()
                                            ? std::string("perturbed")
                                            : u.meta().label + " (perturbed)",
                                        0.0});
    if (is_frame(candidate)) return candidate;
  }
  throw GenerationError("perturbation stayed rank-deficient for " +
                        std::to_string(kPerturbDrawBudget) + " draws");
}

PathSpec make_path(const WeightedFamily& u, const WeightedFamily& v, PathMode mode,
                   std::uint64_t seed) {
  require_same_template(u, v);
  if (mode == PathMode::Frame) {
    if (!is_frame(u)) throw InputError("path endpoint u is not a frame");
    if (!is_frame(v)) throw InputError("path endpoint v is not a frame");
  } else {
    if (!is_parseval(u, kPathEndpointParsevalTol))
      throw InputError("path endpoint u is not Parseval");
    if (!is_parseval(v, kPathEndpointParsevalTol))
      throw InputError("path endpoint v is not Parseval");
  }

  WeightedFamily aux = auxiliary_family(
      u.weights(), u.dim(), u.field(), {u, v},
      mode == PathMode::Frame ? AuxiliaryMode::Independent : AuxiliaryMode::Orthonormal,
      seed);

  if (mode == PathMode::Parseval) {
    if (cross_gramian(aux, u).max_abs_entry() > kPathEndpointParsevalTol ||
        cross_gramian(aux, v).max_abs_entry() > kPathEndpointParsevalTol)
      throw GenerationError("auxiliary is not orthogonal to the endpoints");
  }
  return PathSpec{u, v, aux, mode};
}

WeightedFamily path_eval(const PathSpec& path, PathLeg leg, double t) {
  if (!std::isfinite(t) || t < 0.0 || t > 1.0)
    throw InputError("path parameter must lie in [0, 1]");
  const WeightedFamily& endpoint = leg == PathLeg::U ? path.endpoint_u : path.endpoint_v;
  require_same_template(endpoint, path.auxiliary);
  if (t == 1.0) return endpoint;
  if (t == 0.0) return path.auxiliary;

  const double s = 1.0 - t;
  const double denom =
      path.mode == PathMode::Parseval ? std::sqrt(2.0 * t * t - 2.0 * t + 1.0) : 1.0;
  std::vector<WeightedPoint> pts(endpoint.size());
  for (std::size_t j = 0; j < endpoint.size(); ++j) {
    pts[j].weight = endpoint.weight(j);
    pts[j].value.resize(endpoint.dim());
    for (std::size_t k = 0; k < endpoint.dim(); ++k)
      pts[j].value[k] =
          (t * endpoint.value(j)[k] + s * path.auxiliary.value(j)[k]) / denom;
  }
  return WeightedFamily(endpoint.field(), endpoint.dim(), std::move(pts));
}

PathCertification certify_path(const PathSpec& path, std::size_t samples) {
  if (samples < 2) throw InputError("certification needs at least two samples per leg");

  PathCertification cert;
  cert.mode = path.mode;
  cert.samples = samples;

  struct Sample {
    PathLeg leg;
    double t;
    double lambda_min;
    double lambda_max;
    double deviation;
  };
  std::vector<Sample> evaluated;
  evaluated.reserve(2 * samples);

  for (PathLeg leg : {PathLeg::U, PathLeg::V}) {
    for (std::size_t i = 0; i < samples; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
      const Gramian g = gramian(path_eval(path, leg, t));
      Sample s{leg, t, 0.0, 0.0, 0.0};
      if (path.mode == PathMode::Frame) {
        const Spectrum spec = hermitian_eigenvalues(g);
        s.lambda_min = spec.front();
        s.lambda_max = spec.back();
      } else {
        s.deviation = g.identity_deviation();
      }
      evaluated.push_back(s);
    }
  }

  if (path.mode == PathMode::Frame) {
    double max_upper = 0.0;
    for (const Sample& s : evaluated) max_upper = std::max(max_upper, s.lambda_max);
    cert.tol = default_frame_tolerance(max_upper);
    cert.min_lower_bound = evaluated.front().lambda_min;
    for (const Sample& s : evaluated) {
      cert.min_lower_bound = std::min(cert.min_lower_bound, s.lambda_min);
      if (!(s.lambda_min > cert.tol))
        cert.failures.push_back(PathSampleFailure{s.leg, s.t, s.lambda_min});
    }
  } else {
    cert.tol = kPathParsevalTol;
    for (const Sample& s : evaluated) {
      cert.max_parseval_deviation = std::max(cert.max_parseval_deviation, s.deviation);
      if (s.deviation > cert.tol)
        cert.failures.push_back(PathSampleFailure{s.leg, s.t, s.deviation});
    }
  }
  cert.certified = cert.failures.empty();
  return cert;
}

}  // namespace framekit
