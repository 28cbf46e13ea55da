#include "framekit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "framekit/analysis.hpp"
#include "framekit/errors.hpp"

namespace framekit {

namespace {

void require_weights(const std::vector<double>& w, const char* which) {
  if (w.empty()) throw InputError(std::string(which) + " weight sequence is empty");
  for (double x : w)
    if (!(x >= 0.0) || !std::isfinite(x))
      throw InputError(std::string(which) + " weights must be nonnegative and finite");
}

// The explicit block matrix has order dim * blocks; keep the cubic
// eigendecomposition bounded.
constexpr std::size_t kMaxBlockMatrixOrder = 128;

}  // namespace

CoefficientField::CoefficientField(std::vector<double> x_weights,
                                   std::vector<double> y_weights)
    : x_weights_(std::move(x_weights)), y_weights_(std::move(y_weights)) {
  require_weights(x_weights_, "frame-side");
  require_weights(y_weights_, "test-side");
  c_.assign(x_weights_.size() * y_weights_.size(), Scalar{0.0, 0.0});
}

double CoefficientField::weighted_norm_sq() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < x_weights_.size(); ++i)
    for (std::size_t j = 0; j < y_weights_.size(); ++j)
      acc += x_weights_[i] * y_weights_[j] * std::norm(at(i, j));
  return acc;
}

Scalar coefficient_inner(const CoefficientField& a, const CoefficientField& b) {
  if (a.x_weights() != b.x_weights() || a.y_weights() != b.y_weights())
    throw InputError("coefficient fields live on different weighted index sets");
  Scalar acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.x_size(); ++i)
    for (std::size_t j = 0; j < a.y_size(); ++j)
      acc += a.x_weights()[i] * a.y_weights()[j] * a.at(i, j) * std::conj(b.at(i, j));
  return acc;
}

std::vector<Scalar> frame_operator_apply(const WeightedFamily& fam,
                                         std::span<const Scalar> v) {
  if (v.size() != fam.dim())
    throw InputError("frame_operator_apply: vector length does not match the family");
  const std::size_t n = fam.dim();
  std::vector<Scalar> out(n, Scalar{0.0, 0.0});
  for (const WeightedPoint& p : fam.points()) {
    Scalar dot{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) dot += v[k] * std::conj(p.value[k]);
    const Scalar coeff = p.weight * dot;
    for (std::size_t k = 0; k < n; ++k) out[k] += coeff * p.value[k];
  }
  return out;
}

CoefficientField analysis(const WeightedFamily& fam, const TestFamily& tv) {
  if (fam.dim() != tv.dim())
    throw InputError("analysis: test family dimension does not match the frame family");
  std::vector<double> xw(fam.size()), yw(tv.size());
  for (std::size_t i = 0; i < fam.size(); ++i) xw[i] = fam.weight(i);
  for (std::size_t j = 0; j < tv.size(); ++j) yw[j] = tv.weight(j);
  CoefficientField c(std::move(xw), std::move(yw));
  const std::size_t n = fam.dim();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const std::vector<Scalar>& ui = fam.value(i);
    for (std::size_t j = 0; j < tv.size(); ++j) {
      const std::vector<Scalar>& vj = tv.value(j);
      Scalar dot{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) dot += vj[k] * std::conj(ui[k]);
      c.at(i, j) = dot;
    }
  }
  return c;
}

TestFamily synthesis(const WeightedFamily& fam, const CoefficientField& c) {
  if (c.x_size() != fam.size())
    throw InputError("synthesis: coefficient field does not match the family's points");
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (c.x_weights()[i] != fam.weight(i))
      throw InputError("synthesis: frame-side weights differ at point " + std::to_string(i));

  const std::size_t n = fam.dim();
  bool all_real = fam.field() == Field::Real;
  std::vector<WeightedPoint> blocks(c.y_size());
  for (std::size_t j = 0; j < c.y_size(); ++j) {
    blocks[j].weight = c.y_weights()[j];
    blocks[j].value.assign(n, Scalar{0.0, 0.0});
  }
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const std::vector<Scalar>& ui = fam.value(i);
    const double wi = fam.weight(i);
    for (std::size_t j = 0; j < c.y_size(); ++j) {
      const Scalar coeff = wi * c.at(i, j);
      if (coeff.imag() != 0.0) all_real = false;
      for (std::size_t k = 0; k < n; ++k) blocks[j].value[k] += coeff * ui[k];
    }
  }
  if (all_real)
    for (WeightedPoint& p : blocks)
      for (Scalar& z : p.value) z = Scalar{z.real(), 0.0};
  return TestFamily(all_real ? Field::Real : Field::Complex, n, std::move(blocks));
}

TestFamily extended_frame_operator(const WeightedFamily& fam, const TestFamily& tv) {
  if (fam.dim() != tv.dim())
    throw InputError("extended_frame_operator: dimensions do not match");
  std::vector<WeightedPoint> blocks(tv.size());
  for (std::size_t j = 0; j < tv.size(); ++j) {
    blocks[j].weight = tv.weight(j);
    blocks[j].value = frame_operator_apply(fam, tv.value(j));
  }
  const Field field =
      (fam.field() == Field::Real && tv.field() == Field::Real) ? Field::Real : Field::Complex;
  return TestFamily(field, tv.dim(), std::move(blocks));
}

ExtensionCheckReport extension_equivalence_check(const WeightedFamily& fam,
                                                 std::size_t trials, std::size_t blocks,
                                                 std::uint64_t seed) {
  if (trials == 0) throw InputError("extension check needs at least one trial");
  if (blocks == 0) throw InputError("extension check needs at least one block");
  const std::size_t n = fam.dim();
  if (n * blocks > kMaxBlockMatrixOrder)
    throw CapacityError("explicit block matrix of order " + std::to_string(n * blocks) +
                        " exceeds the limit of " + std::to_string(kMaxBlockMatrixOrder));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> weight_dist(0.25, 4.0);

  const auto draw_vector = [&](std::size_t dim) {
    std::vector<Scalar> v(dim);
    for (std::size_t k = 0; k < dim; ++k)
      v[k] = fam.field() == Field::Complex ? Scalar{gauss(rng), gauss(rng)}
                                           : Scalar{gauss(rng), 0.0};
    return v;
  };

  ExtensionCheckReport report;
  report.trials = trials;
  report.blocks = blocks;

  const Gramian u = gramian(fam);
  const Spectrum u_spec = hermitian_eigenvalues(u);
  const double a_raw = u_spec.front();
  const double b = u_spec.back();
  report.lower_bound = std::max(0.0, a_raw);
  report.upper_bound = b;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    // Quadratic-form sandwich A ||tv||^2 <= <S tv, tv> <= B ||tv||^2, with
    // unit test weights on even trials and random weights on odd ones.
    std::vector<WeightedPoint> pts(blocks);
    for (std::size_t j = 0; j < blocks; ++j) {
      pts[j].weight = (trial % 2 == 0) ? 1.0 : weight_dist(rng);
      pts[j].value = draw_vector(n);
    }
    const TestFamily tv(fam.field(), n, std::move(pts));
    const double q = family_inner(extended_frame_operator(fam, tv), tv).real();
    const double e = total_energy(tv);
    const double scale = std::max(1.0, b * e);
    const double viol = std::max(0.0, std::max(a_raw * e - q, q - b * e)) / scale;
    report.max_bound_violation = std::max(report.max_bound_violation, viol);

    // Single-block reduction: the delta embedding of v reproduces N(v).
    std::vector<Scalar> v = draw_vector(n);
    const double n_plain = quotient_N(v, fam);
    const TestFamily delta(fam.field(), n, {WeightedPoint{1.0, v}});
    const double n_delta = quotient_N_extended(delta, fam);
    report.max_delta_mismatch =
        std::max(report.max_delta_mismatch,
                 std::abs(n_delta - n_plain) / std::max(1.0, std::abs(n_plain)));

    // Indicator reduction: tv_y = f(y) v with f a normalized indicator over
    // a random weighted template reproduces N(v) as well.
    std::vector<double> nu(blocks);
    std::vector<bool> in_set(blocks, false);
    bool any = false;
    for (std::size_t j = 0; j < blocks; ++j) {
      nu[j] = weight_dist(rng);
      in_set[j] = (rng() % 2) == 0;
      any = any || in_set[j];
    }
    if (!any) in_set[rng() % blocks] = true;
    double nu_d = 0.0;
    for (std::size_t j = 0; j < blocks; ++j)
      if (in_set[j]) nu_d += nu[j];
    const double height = 1.0 / std::sqrt(nu_d);
    std::vector<WeightedPoint> ind(blocks);
    for (std::size_t j = 0; j < blocks; ++j) {
      ind[j].weight = nu[j];
      ind[j].value.assign(n, Scalar{0.0, 0.0});
      if (in_set[j])
        for (std::size_t k = 0; k < n; ++k) ind[j].value[k] = height * v[k];
    }
    const TestFamily tv_ind(fam.field(), n, std::move(ind));
    const double n_ind = quotient_N_extended(tv_ind, fam);
    report.max_indicator_mismatch =
        std::max(report.max_indicator_mismatch,
                 std::abs(n_ind - n_plain) / std::max(1.0, std::abs(n_plain)));
  }

  // Spectrum transfer: the explicit block-diagonal matrix has the spectrum
  // of U with multiplicity equal to the block count.
  Gramian block_matrix(n * blocks);
  for (std::size_t p = 0; p < blocks; ++p)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        block_matrix.at(p * n + k, p * n + l) = u.at(k, l);
  const Spectrum block_spec = hermitian_eigenvalues(block_matrix);
  Spectrum expected;
  expected.reserve(n * blocks);
  for (std::size_t p = 0; p < blocks; ++p)
    expected.insert(expected.end(), u_spec.begin(), u_spec.end());
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i < expected.size(); ++i)
    report.max_spectrum_mismatch =
        std::max(report.max_spectrum_mismatch, std::abs(block_spec[i] - expected[i]));
  report.extended_lower = block_spec.front();
  report.extended_upper = block_spec.back();

  return report;
}

}  // namespace framekit
