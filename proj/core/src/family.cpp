#include "framekit/family.hpp"

#include <cmath>
#include <utility>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

bool finite(const Scalar& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

WeightedFamily::WeightedFamily(Field field, std::size_t dim,
                               std::vector<WeightedPoint> points, FamilyMeta meta)
    : field_(field), dim_(dim), points_(std::move(points)), meta_(std::move(meta)) {
  if (dim_ == 0) throw InputError("family: dimension must be positive");
  if (points_.empty()) throw InputError("family: point list is empty");
  bool any_positive = false;
  for (std::size_t j = 0; j < points_.size(); ++j) {
    const WeightedPoint& p = points_[j];
    const std::string where = "point " + std::to_string(j) + ": ";
    if (!(p.weight >= 0.0) || !std::isfinite(p.weight))
      throw InputError(where + "weight must be nonnegative and finite");
    if (p.value.size() != dim_)
      throw InputError(where + "expected " + std::to_string(dim_) + " entries, got " +
                       std::to_string(p.value.size()));
    for (const Scalar& z : p.value) {
      if (!finite(z)) throw InputError(where + "entries must be finite");
      if (field_ == Field::Real && z.imag() != 0.0)
        throw InputError(where + "real family has a nonzero imaginary part");
    }
    any_positive = any_positive || p.weight > 0.0;
  }
  if (!any_positive) throw InputError("family: every weight is zero");
}

std::vector<double> WeightedFamily::weights() const {
  std::vector<double> w(points_.size());
  for (std::size_t j = 0; j < points_.size(); ++j) w[j] = points_[j].weight;
  return w;
}

std::vector<Scalar> WeightedFamily::component(std::size_t k) const {
  if (k >= dim_) throw InputError("component index out of range");
  std::vector<Scalar> f(points_.size());
  for (std::size_t j = 0; j < points_.size(); ++j) f[j] = points_[j].value[k];
  return f;
}

Scalar weighted_inner(std::span<const Scalar> f, std::span<const Scalar> g,
                      const WeightedFamily& fam) {
  if (f.size() != fam.size() || g.size() != fam.size())
    throw InputError("weighted_inner: arguments must have one entry per point");
  Scalar acc{0.0, 0.0};
  for (std::size_t j = 0; j < fam.size(); ++j)
    acc += fam.weight(j) * f[j] * std::conj(g[j]);
  return acc;
}

double total_energy(const WeightedFamily& fam) {
  double acc = 0.0;
  for (const WeightedPoint& p : fam.points()) {
    double nrm = 0.0;
    for (const Scalar& z : p.value) nrm += std::norm(z);
    acc += p.weight * nrm;
  }
  return acc;
}

Scalar family_inner(const WeightedFamily& a, const WeightedFamily& b) {
  if (a.size() != b.size() || a.dim() != b.dim())
    throw InputError("family_inner: families must share the point set and dimension");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a.weight(j) != b.weight(j))
      throw InputError("family_inner: weights differ at point " + std::to_string(j));
  Scalar acc{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j) {
    Scalar dot{0.0, 0.0};
    const std::vector<Scalar>& aj = a.value(j);
    const std::vector<Scalar>& bj = b.value(j);
    for (std::size_t k = 0; k < a.dim(); ++k) dot += aj[k] * std::conj(bj[k]);
    acc += a.weight(j) * dot;
  }
  return acc;
}

double weighted_distance(const WeightedFamily& a, const WeightedFamily& b) {
  require_same_template(a, b);
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double nrm = 0.0;
    const std::vector<Scalar>& aj = a.value(j);
    const std::vector<Scalar>& bj = b.value(j);
    for (std::size_t k = 0; k < a.dim(); ++k) nrm += std::norm(aj[k] - bj[k]);
    acc += a.weight(j) * nrm;
  }
  return std::sqrt(acc);
}

WeightedFamily scale_vectors(const WeightedFamily& fam, Scalar alpha) {
  std::vector<WeightedPoint> pts = fam.points();
  for (WeightedPoint& p : pts)
    for (Scalar& z : p.value) z *= alpha;
  Field field = (fam.field() == Field::Real && alpha.imag() == 0.0) ? Field::Real
                                                                    : Field::Complex;
  return WeightedFamily(field, fam.dim(), std::move(pts), fam.meta());
}

bool same_template(const WeightedFamily& a, const WeightedFamily& b) {
  if (a.field() != b.field() || a.dim() != b.dim() || a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a.weight(j) != b.weight(j)) return false;
  return true;
}

void require_same_template(const WeightedFamily& a, const WeightedFamily& b) {
  if (a.field() != b.field()) throw InputError("families are over different fields");
  if (a.dim() != b.dim()) throw InputError("families have different dimensions");
  if (a.size() != b.size()) throw InputError("families have different point counts");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a.weight(j) != b.weight(j))
      throw InputError("weights differ at point " + std::to_string(j));
}

}  // namespace framekit
