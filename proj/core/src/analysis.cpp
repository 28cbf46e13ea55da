#include "framekit/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

constexpr double kTraceMeanSlack = 1e-10;

double norm_sq(std::span<const Scalar> v) {
  double acc = 0.0;
  for (const Scalar& z : v) acc += std::norm(z);
  return acc;
}

void require_test_vector(std::span<const Scalar> v, const WeightedFamily& fam) {
  if (v.size() != fam.dim())
    throw InputError("test vector has " + std::to_string(v.size()) + " entries, family is " +
                     std::to_string(fam.dim()) + "-dimensional");
  if (norm_sq(v) == 0.0) throw InputError("zero test vector");
}

void require_positive_tol(double tol, const char* what) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InputError(std::string(what) + " must be positive and finite");
}

}  // namespace

double quotient_N(std::span<const Scalar> v, const WeightedFamily& fam, QuotientForm form) {
  require_test_vector(v, fam);
  const double denom = norm_sq(v);
  const std::size_t n = fam.dim();

  switch (form) {
    case QuotientForm::Direct: {
      double acc = 0.0;
      for (const WeightedPoint& p : fam.points()) {
        Scalar dot{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) dot += v[k] * std::conj(p.value[k]);
        acc += p.weight * std::norm(dot);
      }
      return acc / denom;
    }
    case QuotientForm::Trace: {
      Gramian rank_one(n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) rank_one.at(k, l) = v[k] * std::conj(v[l]);
      return trace_product(rank_one, gramian(fam)) / rank_one.trace();
    }
    case QuotientForm::Synth: {
      double acc = 0.0;
      for (const WeightedPoint& p : fam.points()) {
        Scalar synth{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) synth += std::conj(v[k]) * p.value[k];
        acc += p.weight * std::norm(synth);
      }
      return acc / denom;
    }
  }
  throw InputError("unknown quotient form");
}

double quotient_N_extended(const TestFamily& tv, const WeightedFamily& fam) {
  if (tv.dim() != fam.dim())
    throw InputError("test family dimension does not match the frame family");
  const Gramian v = gramian(tv);
  const double denom = v.trace();
  if (denom == 0.0) throw InputError("zero-energy test family");
  return trace_product(v, gramian(fam)) / denom;
}

std::pair<double, double> frame_bounds(const WeightedFamily& fam) {
  const Spectrum spec = hermitian_eigenvalues(gramian(fam));
  return {spec.front(), spec.back()};
}

BesselReport is_bessel(const WeightedFamily& fam) {
  const auto [a, b] = frame_bounds(fam);
  (void)a;
  return BesselReport{true, total_energy(fam), fam.meta().tail_bound, b};
}

double default_frame_tolerance(double upper_bound) {
  return 1e-10 * std::max(1.0, upper_bound);
}

bool is_frame(const WeightedFamily& fam) {
  const auto [a, b] = frame_bounds(fam);
  return a > default_frame_tolerance(b);
}

bool is_frame(const WeightedFamily& fam, double tol) {
  require_positive_tol(tol, "frame tolerance");
  return frame_bounds(fam).first > tol;
}

double parseval_deviation(const WeightedFamily& fam) {
  return gramian(fam).identity_deviation();
}

bool is_parseval(const WeightedFamily& fam, double tol) {
  require_positive_tol(tol, "parseval tolerance");
  return parseval_deviation(fam) <= tol;
}

F2Report f2_sufficient(const WeightedFamily& fam) {
  if (fam.dim() != 2) throw InputError("f2_sufficient is defined for 2-dimensional families");
  const Gramian u = gramian(fam);
  const double diag_min = std::min(u.at(0, 0).real(), u.at(1, 1).real());
  const double cross = std::abs(u.at(0, 1));
  return F2Report{diag_min > cross, diag_min - cross};
}

bool trace_mean_bounds_check(const Gramian& p, const Gramian& u) {
  if (p.size() != u.size()) throw InputError("trace_mean_bounds_check: orders differ");
  const Spectrum p_spec = hermitian_eigenvalues(p);
  if (p_spec.front() < -kTraceMeanSlack * std::max(1.0, p_spec.back()))
    throw InputError("weight matrix is not positive semidefinite");
  const double p_trace = p.trace();
  if (!(p_trace > 0.0)) throw InputError("weight matrix has nonpositive trace");
  const Spectrum u_spec = hermitian_eigenvalues(u);
  const double ratio = trace_product(p, u) / p_trace;
  return ratio >= u_spec.front() - kTraceMeanSlack && ratio <= u_spec.back() + kTraceMeanSlack;
}

FrameVerdict verdict(const WeightedFamily& fam, std::optional<double> tol_frame,
                     double tol_parseval) {
  require_positive_tol(tol_parseval, "parseval tolerance");
  if (tol_frame) require_positive_tol(*tol_frame, "frame tolerance");

  const Gramian u = gramian(fam);
  const Spectrum spec = hermitian_eigenvalues(u);
  double det = 1.0;
  for (double lambda : spec) det *= lambda;

  FrameVerdict out;
  out.energy = u.trace();
  out.lower_bound = spec.front();
  out.upper_bound = spec.back();
  out.det_u = det;
  out.tail_bound = fam.meta().tail_bound;
  out.tol_frame = tol_frame ? *tol_frame : default_frame_tolerance(spec.back());
  out.frame = spec.front() > out.tol_frame;
  out.tol_parseval = tol_parseval;
  out.parseval_deviation = u.identity_deviation();
  out.parseval = out.parseval_deviation <= tol_parseval;
  if (fam.dim() == 2) out.f2 = f2_sufficient(fam);
  return out;
}

}  // namespace framekit
