#pragma once

#include <cstdint>

#include "anorm/semihilbert.hpp"

namespace anorm {

/// Interpolation parameter of the alpha seminorm, constrained to [0, 1].
class AlphaParam {
 public:
  explicit AlphaParam(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
      throw AlphaOutOfRange("alpha must lie in [0, 1]");
  }
  double value() const { return value_; }

 private:
  double value_;
};

/// Optimizer effort knobs. standard() is the default contract everywhere;
/// scaled(8) is the re-check level for near-violations.
struct Effort {
  int theta_grid = 1024;
  int starts = 32;
  int max_iterations = 500;

  static Effort standard() { return {}; }
  Effort scaled(int factor) const {
    return {theta_grid * factor, starts * factor, max_iterations * factor};
  }
};

struct EffortStats {
  int grid = 0;
  int starts = 0;
  int iterations = 0;
  int refinements = 0;
};

/// Result of an extremal quantity estimated on the compressed space.
///
/// For sup-type quantities (numerical radius, alpha norm) `value` equals
/// `witness_value`, the objective at the feasible witness, hence a certified
/// lower bound of the true supremum. For the inf-type Crawford number
/// `value` is a certified upper bound of the infimum (inscribed-polygon
/// distance), and `witness_value` is what the best feasible witness attains
/// (also an upper bound, possibly looser).
struct RadiusEstimate {
  double value = 0.0;
  ComplexVector witness;
  double witness_value = 0.0;
  EffortStats effort;
};

// ---- kernels on the compressed k x k representative ----

/// w(B) = max_theta lambda_max((e^{i theta} B + e^{-i theta} B*)/2),
/// uniform theta grid plus local parabolic refinement of the best sample
/// down to an interval of 1e-12.
RadiusEstimate numerical_radius(const ComplexMatrix& B,
                                const Effort& effort = {});

/// Distance from the origin to the numerical range W(B): zero when the
/// origin lies inside the convex polygon spanned by the sampled boundary
/// points p(theta) = <B v_theta, v_theta>, else the distance to that
/// polygon. The polygon is inscribed in W(B), so the result can only
/// overestimate the true Crawford number.
RadiusEstimate crawford_number(const ComplexMatrix& B,
                               const Effort& effort = {});

/// One boundary sweep serves both extremes; cheaper than calling the two
/// functions above separately.
struct NumericalRangeScan {
  RadiusEstimate radius;
  RadiusEstimate crawford;
};
NumericalRangeScan scan_numerical_range(const ComplexMatrix& B,
                                        const Effort& effort = {});

/// sup over unit z of sqrt(alpha |<Bz,z>|^2 + (1-alpha) ||Bz||^2) by
/// multistart projected-gradient ascent with backtracking: `effort.starts`
/// seeded random starts plus the numerical-radius witness and the top right
/// singular vector (and any caller-supplied warm starts), renormalizing each
/// iterate, stopping at relative objective change < 1e-12 or the iteration
/// cap. alpha = 0 and alpha = 1 delegate to the exact spectral norm and to
/// numerical_radius respectively.
RadiusEstimate alpha_norm(const ComplexMatrix& B, AlphaParam alpha,
                          const Effort& effort = {},
                          const std::vector<ComplexVector>* warm_starts = nullptr);

/// Independent brute-force estimate of the same supremum: `samples` uniform
/// random unit vectors, each polished by 50 ascent steps; the best value is
/// a certified lower bound of the supremum. Intended as a cross-check at
/// small k, deliberately sharing no search machinery with alpha_norm.
RadiusEstimate alpha_norm_sampling(const ComplexMatrix& B, AlphaParam alpha,
                                   std::size_t samples, std::uint64_t seed);

// ---- the five A-seminorm functionals ----

/// ||T||_A = sigma_max(compress(T)).
double a_operator_norm(const SemiHilbertContext& ctx, const ComplexMatrix& T);

/// m_A(T) = sigma_min(compress(T)) over the k-dimensional range space.
double a_min_modulus(const SemiHilbertContext& ctx, const ComplexMatrix& T);

RadiusEstimate a_numerical_radius(const SemiHilbertContext& ctx,
                                  const ComplexMatrix& T,
                                  const Effort& effort = {});

RadiusEstimate a_crawford(const SemiHilbertContext& ctx,
                          const ComplexMatrix& T, const Effort& effort = {});

RadiusEstimate alpha_seminorm(const SemiHilbertContext& ctx,
                              const ComplexMatrix& T, AlphaParam alpha,
                              const Effort& effort = {});

RadiusEstimate alpha_seminorm_oracle(const SemiHilbertContext& ctx,
                                     const ComplexMatrix& T, AlphaParam alpha,
                                     std::size_t samples, std::uint64_t seed);

}  // namespace anorm
