#include "framekit/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{2 pi i t n} evaluated through the fractional part of t*n, keeping the
// trig argument within one period instead of growing with n.
Scalar unit_phase(double t, double n) {
  const double frac = std::fmod(t * n, 1.0);
  const double theta = kTwoPi * frac;
  return Scalar{std::cos(theta), std::sin(theta)};
}

}  // namespace

DirichletFamily dirichlet_family(double a, double b, std::size_t terms) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw InputError("dirichlet: exponents must be finite");
  if (terms == 0) throw InputError("dirichlet: need at least one term");

  std::vector<WeightedPoint> pts;
  pts.reserve(terms);
  for (std::size_t j = 1; j <= terms; ++j) {
    const double n = static_cast<double>(j);
    const double inv = 1.0 / n;
    pts.push_back(WeightedPoint{1.0, {inv * unit_phase(a, n), inv * unit_phase(b, n)}});
  }

  std::ostringstream label;
  label << "dirichlet(a=" << a << ", b=" << b << ", terms=" << terms << ")";
  FamilyMeta meta{label.str(), 2.0 / static_cast<double>(terms)};

  const double gap = a - b;
  const bool degenerate = std::abs(gap - std::round(gap)) <= 1e-12;
  return DirichletFamily{WeightedFamily(Field::Complex, 2, std::move(pts), std::move(meta)),
                         degenerate};
}

WeightedFamily circle_frame(std::size_t nodes, double scale) {
  if (nodes < 3) throw InputError("circle: need at least 3 nodes");
  if (!std::isfinite(scale)) throw InputError("circle: scale must be finite");

  const double w = kTwoPi / static_cast<double>(nodes);
  std::vector<WeightedPoint> pts;
  pts.reserve(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double x = kTwoPi * static_cast<double>(j) / static_cast<double>(nodes);
    pts.push_back(WeightedPoint{w, {Scalar{scale * std::cos(x), 0.0},
                                    Scalar{scale * std::sin(x), 0.0}}});
  }

  std::ostringstream label;
  label << "circle(nodes=" << nodes << ", scale=" << scale << ")";
  return WeightedFamily(Field::Real, 2, std::move(pts), FamilyMeta{label.str(), 0.0});
}

WeightedFamily random_family(std::size_t points, std::size_t dim, Field field,
                             std::uint64_t seed) {
  if (points == 0) throw InputError("random: need at least one point");
  if (dim == 0) throw InputError("random: dimension must be positive");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<WeightedPoint> pts(points);
  for (WeightedPoint& p : pts) {
    p.weight = 1.0;
    p.value.resize(dim);
    for (Scalar& z : p.value)
      z = field == Field::Complex ? Scalar{gauss(rng), gauss(rng)}
                                  : Scalar{gauss(rng), 0.0};
  }

  std::ostringstream label;
  label << "random(points=" << points << ", dim=" << dim << ", seed=" << seed << ")";
  return WeightedFamily(field, dim, std::move(pts), FamilyMeta{label.str(), 0.0});
}

}  // namespace framekit
