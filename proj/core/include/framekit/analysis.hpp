#pragma once

#include <optional>
#include <span>
#include <utility>

#include "framekit/family.hpp"
#include "framekit/gramian.hpp"

namespace framekit {

/// The three equivalent computation paths for the quotient N(v):
///  Direct  sum_j w_j |<v, u_j>|^2 / ||v||^2
///  Trace   Tr(V U) / Tr(V) with V the rank-one Gramian of v's components
///  Synth   weighted norm of the synthesized scalar function
///          j -> sum_k conj(v^k) u_j^k, divided by ||v||^2
enum class QuotientForm { Direct, Trace, Synth };

/// N(v; u) for a nonzero test vector v in F^n. The three forms agree up to
/// rounding; the enum picks the arithmetic route. Throws InputError on a
/// zero test vector or a length mismatch.
double quotient_N(std::span<const Scalar> v, const WeightedFamily& fam,
                  QuotientForm form = QuotientForm::Direct);

/// Extension of the quotient to a multi-block test family:
/// Tr(V U) / Tr(V) with V = gramian(tv). Reduces to quotient_N when tv is a
/// single unit-weight point. Throws InputError on dimension mismatch or a
/// zero-energy test family.
double quotient_N_extended(const TestFamily& tv, const WeightedFamily& fam);

/// Optimal frame bounds (A, B) = (smallest, largest) Gramian eigenvalue.
/// A > 0 iff the family is a frame; A may round slightly negative for a
/// rank-deficient family.
std::pair<double, double> frame_bounds(const WeightedFamily& fam);

/// Bessel diagnosis. Finite representations always carry a finite energy, so
/// bessel is true for every valid family; the report carries the numbers the
/// decision rests on.
struct BesselReport {
  bool bessel;
  double energy;         ///< Tr of the Gramian
  double tail_bound;     ///< truncation allowance from the family's meta
  double optimal_bound;  ///< smallest valid Bessel bound, the largest eigenvalue
};
BesselReport is_bessel(const WeightedFamily& fam);

/// Frame decision threshold used when none is given: 1e-10 * max(1, B).
double default_frame_tolerance(double upper_bound);

/// True when the smallest Gramian eigenvalue exceeds the tolerance
/// (equivalently: components linearly independent, det U != 0).
bool is_frame(const WeightedFamily& fam);
bool is_frame(const WeightedFamily& fam, double tol);

inline constexpr double kDefaultParsevalTol = 1e-10;

/// Entrywise deviation of the Gramian from the identity, max |U_kl - I_kl|.
double parseval_deviation(const WeightedFamily& fam);

/// True when parseval_deviation(fam) <= tol. tol must be positive and finite.
bool is_parseval(const WeightedFamily& fam, double tol = kDefaultParsevalTol);

/// Two-dimensional sufficient condition min(U_11, U_22) > |U_12| with its
/// guaranteed lower frame bound min(U_11, U_22) - |U_12|. Sufficient but not
/// necessary: a family can fail it and still be a frame. Only defined for
/// dim == 2 (InputError otherwise).
struct F2Report {
  bool holds;
  double guaranteed_lower_bound;
};
F2Report f2_sufficient(const WeightedFamily& fam);

/// Checks lambda_min(U) - 1e-10 <= Tr(P U)/Tr(P) <= lambda_max(U) + 1e-10
/// for a Hermitian PSD weight matrix P with Tr(P) > 0 (InputError otherwise).
bool trace_mean_bounds_check(const Gramian& p, const Gramian& u);

/// Everything the analyze entry point reports, with the tolerances that were
/// actually applied. f2 is populated only for two-dimensional families.
struct FrameVerdict {
  double energy;
  double lower_bound;
  double upper_bound;
  double det_u;
  double tail_bound;
  bool frame;
  double tol_frame;
  bool parseval;
  double tol_parseval;
  double parseval_deviation;
  std::optional<F2Report> f2;
};

/// Full diagnosis in one pass over the Gramian. When tol_frame is not given
/// the default threshold is derived from the computed upper bound.
FrameVerdict verdict(const WeightedFamily& fam,
                     std::optional<double> tol_frame = std::nullopt,
                     double tol_parseval = kDefaultParsevalTol);

}  // namespace framekit
