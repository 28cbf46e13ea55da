#include "framekit/gramian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

constexpr double kHermitianCheckTol = 1e-12;
constexpr double kJacobiThreshold = 1e-13;  // times ||M||_F
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const Gramian& a) {
  double acc = 0.0;
  for (std::size_t p = 0; p + 1 < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q) acc += std::norm(a.at(p, q));
  return std::sqrt(2.0 * acc);
}

// One cyclic Jacobi pass over all pivots (p, q). The rotation is the unitary
// D*J with D = diag(e^{i arg apq}, 1) and J the real rotation that zeroes the
// phase-adjusted 2x2 block, so a real symmetric input never leaves the reals.
void jacobi_sweep(Gramian& a, Gramian* v) {
  const std::size_t n = a.size();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const Scalar apq = a.at(p, q);
      const double r = std::abs(apq);
      if (r < 1e-300) {
        a.at(p, q) = Scalar{0.0, 0.0};
        a.at(q, p) = Scalar{0.0, 0.0};
        continue;
      }
      const Scalar e = apq / r;
      const double app = a.at(p, p).real();
      const double aqq = a.at(q, q).real();
      const double tau = (aqq - app) / (2.0 * r);
      double t;
      if (std::isinf(tau)) {
        t = 0.0;
      } else {
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      }
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const Scalar akp = a.at(k, p);
        const Scalar akq = a.at(k, q);
        a.at(k, p) = c * e * akp - s * akq;
        a.at(k, q) = s * e * akp + c * akq;
        a.at(p, k) = std::conj(a.at(k, p));
        a.at(q, k) = std::conj(a.at(k, q));
      }
      a.at(p, p) = Scalar{app - t * r, 0.0};
      a.at(q, q) = Scalar{aqq + t * r, 0.0};
      a.at(p, q) = Scalar{0.0, 0.0};
      a.at(q, p) = Scalar{0.0, 0.0};

      if (v) {
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar vkp = v->at(k, p);
          const Scalar vkq = v->at(k, q);
          v->at(k, p) = c * e * vkp - s * vkq;
          v->at(k, q) = s * e * vkp + c * vkq;
        }
      }
    }
  }
}

// Shared driver; vectors are accumulated only when requested.
Eigensystem diagonalize(const Gramian& m, bool want_vectors) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianCheckTol * std::max(1.0, m.max_abs_entry()))
    throw InputError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");

  const std::size_t n = m.size();
  Gramian a(n);
  for (std::size_t k = 0; k < n; ++k) {
    a.at(k, k) = Scalar{m.at(k, k).real(), 0.0};
    for (std::size_t l = k + 1; l < n; ++l) {
      const Scalar sym = 0.5 * (m.at(k, l) + std::conj(m.at(l, k)));
      a.at(k, l) = sym;
      a.at(l, k) = std::conj(sym);
    }
  }

  Gramian v = Gramian::identity(n);
  const double threshold = kJacobiThreshold * a.frobenius_norm();
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    jacobi_sweep(a, want_vectors ? &v : nullptr);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a.at(i, i).real() < a.at(j, j).real();
  });

  Eigensystem sys;
  sys.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) sys.values[i] = a.at(order[i], order[i]).real();
  if (want_vectors) {
    sys.vectors.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      sys.vectors[i].resize(n);
      for (std::size_t k = 0; k < n; ++k) sys.vectors[i][k] = v.at(k, order[i]);
    }
  }
  return sys;
}

}  // namespace

Gramian::Gramian(std::size_t n) : n_(n), a_(n * n, Scalar{0.0, 0.0}) {
  if (n == 0) throw InputError("matrix order must be positive");
}

Gramian Gramian::identity(std::size_t n) {
  Gramian i(n);
  for (std::size_t k = 0; k < n; ++k) i.at(k, k) = Scalar{1.0, 0.0};
  return i;
}

double Gramian::max_abs_entry() const {
  double m = 0.0;
  for (const Scalar& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double Gramian::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t l = k; l < n_; ++l)
      d = std::max(d, std::abs(at(k, l) - std::conj(at(l, k))));
  return d;
}

double Gramian::trace() const {
  double t = 0.0;
  for (std::size_t k = 0; k < n_; ++k) t += at(k, k).real();
  return t;
}

double Gramian::frobenius_norm() const {
  double acc = 0.0;
  for (const Scalar& z : a_) acc += std::norm(z);
  return std::sqrt(acc);
}

double Gramian::identity_deviation() const {
  double d = 0.0;
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t l = 0; l < n_; ++l) {
      const Scalar expected = (k == l) ? Scalar{1.0, 0.0} : Scalar{0.0, 0.0};
      d = std::max(d, std::abs(at(k, l) - expected));
    }
  return d;
}

Gramian gramian(const WeightedFamily& fam) {
  const std::size_t n = fam.dim();
  Gramian u(n);
  for (const WeightedPoint& p : fam.points()) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        u.at(k, l) += p.weight * p.value[k] * std::conj(p.value[l]);
  }
  return u;
}

Gramian cross_gramian(const WeightedFamily& f, const WeightedFamily& g) {
  require_same_template(f, g);
  const std::size_t n = f.dim();
  Gramian c(n);
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double w = f.weight(j);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        c.at(k, l) += w * f.value(j)[k] * std::conj(g.value(j)[l]);
  }
  return c;
}

std::vector<Scalar> matvec(const Gramian& a, std::span<const Scalar> v) {
  if (v.size() != a.size()) throw InputError("matvec: vector length does not match");
  std::vector<Scalar> out(a.size(), Scalar{0.0, 0.0});
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t l = 0; l < a.size(); ++l) out[k] += a.at(k, l) * v[l];
  return out;
}

double trace_product(const Gramian& p, const Gramian& u) {
  if (p.size() != u.size()) throw InputError("trace_product: orders differ");
  Scalar acc{0.0, 0.0};
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t l = 0; l < p.size(); ++l) acc += p.at(k, l) * u.at(l, k);
  return acc.real();
}

Spectrum hermitian_eigenvalues(const Gramian& m) { return diagonalize(m, false).values; }

Eigensystem hermitian_eigensystem(const Gramian& m) { return diagonalize(m, true); }

}  // namespace framekit
