#pragma once

#include <cstddef>
#include <vector>

#include "anorm/complex_matrix.hpp"

namespace anorm {

/// Relative singular-value / eigenvalue cutoff used for numerical rank
/// decisions. Generated test matrices have spectral gaps far above this.
inline constexpr double kDefaultRankTol = 1e-10;

/// Full spectrum of a Hermitian matrix. `values` are sorted descending and
/// `vectors` holds the matching orthonormal eigenvectors as columns, so
/// M = vectors * diag(values) * vectors^*.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. The input is symmetrized to (M + M*)/2 first;
/// convergence threshold 1e-14 * ||M||_F on the off-diagonal norm, cap of
/// 100 sweeps. Unconditionally stable and fully deterministic, which is all
/// the small dense problems here need.
EigenSystem hermitian_eig(const ComplexMatrix& M);

/// Hermitian PSD square root. Eigenvalues in [-tol * lambda_max, 0) are
/// clamped to zero (generated PSD matrices carry rounding noise); anything
/// below that band throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& M, double tol = kDefaultRankTol);

/// Moore-Penrose pseudoinverse. Singular values <= tol * sigma_max are
/// treated as zero. Hermitian inputs take an eigenvalue route; general ones
/// go through the singular value decomposition below.
ComplexMatrix pinv(const ComplexMatrix& M, double tol = kDefaultRankTol);

/// Orthonormal basis of the numerical column space, returned as an n x k
/// matrix with k the numerical rank at the given cutoff.
ComplexMatrix range_basis(const ComplexMatrix& M, double tol = kDefaultRankTol);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& M);

/// True when ||M - M*||_max <= tol * (1 + ||M||_max).
bool nearly_hermitian(const ComplexMatrix& M, double tol = 1e-12);

/// Extreme eigenvalues of a Hermitian matrix (0 for the empty matrix).
double lambda_max(const ComplexMatrix& M);
double lambda_min(const ComplexMatrix& M);

/// Smallest singular value over the full square dimension.
double smallest_singular_value(const ComplexMatrix& M);

/// Thin singular value decomposition M = left * diag(values) * right^*,
/// values sorted descending, min(rows, cols) of them. Realized through
/// hermitian_eig of the augmented matrix [[0, M], [M*, 0]], whose spectrum
/// is {+sigma, -sigma}; this keeps small singular values accurate to
/// machine precision instead of sqrt(eps) as the normal-equations route
/// would.
struct Svd {
  std::vector<double> values;
  ComplexMatrix left;   // rows x r
  ComplexMatrix right;  // cols x r
};
Svd svd(const ComplexMatrix& M);

namespace detail {

/// In-place cyclic Jacobi on a row-major n*n Hermitian buffer `h`.
/// Accumulates the rotations into `v` (row-major n*n, pre-initialized by the
/// caller, normally to identity) when v != nullptr. On return the diagonal
/// of h carries the (unsorted) eigenvalues. Returns false if 100 sweeps did
/// not reach the off-diagonal threshold. Allocation-free: safe for tight
/// loops at small n.
bool jacobi_hermitian(std::size_t n, Complex* h, Complex* v);

}  // namespace detail

}  // namespace anorm
