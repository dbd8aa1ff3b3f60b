#pragma once

#include <cstdint>
#include <utility>

#include "anorm/linalg.hpp"
#include "anorm/rng.hpp"

namespace anorm {

/// Residual threshold for certifying membership in B_A(H). Exact range
/// inclusion is not decidable in floating point, so membership is accepted
/// when the relative residual ||(I - P_A) T* A|| / (1 + ||T* A||) stays
/// below this.
inline constexpr double kDefaultMembershipTol = 1e-8;

/// Validated positive-semidefinite weight A together with every factor the
/// rest of the library keeps reaching for: A^{1/2}, its pseudoinverse, the
/// orthogonal projector onto range(A), an orthonormal range basis and the
/// pseudoinverse of A itself. Immutable after construction.
class SemiHilbertContext {
 public:
  /// Empty (zero-dimensional) context; assign from make_context to use.
  SemiHilbertContext() = default;

  const ComplexMatrix& weight() const { return a_; }
  const ComplexMatrix& sqrt_weight() const { return sqrt_a_; }
  const ComplexMatrix& sqrt_weight_pinv() const { return sqrt_a_pinv_; }
  const ComplexMatrix& weight_pinv() const { return a_pinv_; }
  const ComplexMatrix& projector() const { return proj_; }
  /// n x k orthonormal basis of range(A), eigenvalue-descending order.
  const ComplexMatrix& range() const { return range_; }
  std::size_t dim() const { return a_.rows(); }
  std::size_t rank() const { return rank_; }
  double tol() const { return tol_; }
  double rank_tol() const { return rank_tol_; }

  friend SemiHilbertContext make_context(const ComplexMatrix& A, double tol,
                                         double rank_tol);

 private:
  ComplexMatrix a_, sqrt_a_, sqrt_a_pinv_, a_pinv_, proj_, range_;
  std::size_t rank_ = 0;
  double tol_ = kDefaultMembershipTol;
  double rank_tol_ = kDefaultRankTol;
};

SemiHilbertContext make_context(const ComplexMatrix& A,
                                double tol = kDefaultMembershipTol,
                                double rank_tol = kDefaultRankTol);

/// <x, y>_A = <Ax, y>. Conjugate-symmetric up to rounding.
Complex a_inner(const SemiHilbertContext& ctx, const ComplexVector& x,
                const ComplexVector& y);

/// ||x||_A = ||A^{1/2} x||; vanishes exactly on null(A).
double a_norm_vec(const SemiHilbertContext& ctx, const ComplexVector& x);

/// An operator certified to lie in B_A(H), with its A-adjoint and its k x k
/// compressed representative on range(A) cached.
struct BAOperator {
  ComplexMatrix op;          // T
  ComplexMatrix adjoint;     // T^{#A} = A^+ T* A
  ComplexMatrix compressed;  // V* A^{1/2} T (A^{1/2})^+ V
  double membership_residual = 0.0;
};

/// Certifies T in B_A(H) and returns it with the cached A-adjoint and
/// compression. Throws NotInBA when the range-inclusion residual exceeds
/// ctx.tol().
BAOperator a_adjoint(const SemiHilbertContext& ctx, const ComplexMatrix& T);

/// AT = T*A up to tolerance.
bool is_a_selfadjoint(const SemiHilbertContext& ctx, const ComplexMatrix& T);

/// U^{#A} U = (U^{#A})^{#A} U^{#A} = P_A up to tolerance. Throws NotInBA if
/// U has no A-adjoint.
bool is_a_unitary(const SemiHilbertContext& ctx, const ComplexMatrix& U);

/// Cartesian decomposition T = Re_A(T) + i Im_A(T) with
/// Re_A(T) = (T + T^{#A})/2 and Im_A(T) = (T - T^{#A})/(2i); both parts are
/// A-self-adjoint.
std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(
    const SemiHilbertContext& ctx, const BAOperator& T);

/// k x k compression B = V* A^{1/2} T (A^{1/2})^+ V. Classical norms of B
/// realize the A-seminorms of T: ||T||_A = sigma_max(B), w_A(T) = w(B),
/// c_A(T) = c(B), m_A(T) = sigma_min(B). Requires T to be A-bounded
/// (throws NotABounded otherwise): A^{1/2} T must annihilate null(A).
ComplexMatrix compress(const SemiHilbertContext& ctx, const ComplexMatrix& T);

/// Right inverse of compress: lift(B) = (A^{1/2})^+ V B V* A^{1/2}. The
/// lifted operator is in B_A(H) by construction and compresses back to B.
ComplexMatrix lift(const SemiHilbertContext& ctx, const ComplexMatrix& B);

/// Seeded random element of B_A(H):
/// T = lift(G) + (I - P_A) X with G a random k x k matrix and X a random
/// n x n matrix (X = 0 unless null_coupling). Membership holds by
/// construction for any seed.
BAOperator random_ba_operator(const SemiHilbertContext& ctx,
                              std::uint64_t seed, bool null_coupling = false);

/// Seeded random A-unitary: lift of a Haar-ish random k x k unitary.
BAOperator random_a_unitary(const SemiHilbertContext& ctx, std::uint64_t seed);

/// Random PSD weight: Q diag(d) Q* with Q random unitary and d log-uniform
/// in [0.1, 10], with rank_deficit entries forced to exactly zero.
ComplexMatrix random_psd(std::size_t dim, std::size_t rank_deficit,
                         std::uint64_t seed);

/// Haar-ish random unitary from QR of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Random complex Gaussian matrix.
ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace anorm
