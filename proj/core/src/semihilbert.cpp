#include "anorm/semihilbert.hpp"

#include <cmath>

namespace anorm {

SemiHilbertContext make_context(const ComplexMatrix& A, double tol,
                                double rank_tol) {
  if (!A.is_square()) throw DimensionMismatch("make_context: A must be square");
  const std::size_t n = A.rows();

  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      asym = std::max(asym, std::abs(A(i, j) - std::conj(A(j, i))));
  if (asym > 1e-10 * (1.0 + A.max_abs()))
    throw NotPsd("make_context: A is not Hermitian");

  SemiHilbertContext ctx;
  ctx.tol_ = tol;
  ctx.rank_tol_ = rank_tol;
  ctx.a_ = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ctx.a_(i, j) = 0.5 * (A(i, j) + std::conj(A(j, i)));

  const EigenSystem sys = hermitian_eig(ctx.a_);
  double lmax = 0.0;
  for (double v : sys.values) lmax = std::max(lmax, v);
  for (double v : sys.values)
    if (v < -tol * lmax) throw NotPsd("make_context: A has a negative eigenvalue");

  // All factors share one eigendecomposition; eigenvalues at or below the
  // rank cutoff count as zero everywhere. The kept columns are ordered by
  // ascending eigenvalue (stable), which reduces to the identity basis for
  // diagonal weights with nondecreasing diagonal; for full-rank weights the
  // range basis is exactly the standard basis, so compressions land in the
  // natural coordinates.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < sys.values.size(); ++k)
    if (sys.values[k] > rank_tol * lmax) keep.push_back(k);
  std::stable_sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return sys.values[a] < sys.values[b];
  });
  ctx.rank_ = keep.size();

  ctx.range_ = ComplexMatrix(n, ctx.rank_);
  if (ctx.rank_ == n) {
    ctx.range_ = ComplexMatrix::identity(n);
  } else {
    for (std::size_t c = 0; c < keep.size(); ++c)
      for (std::size_t i = 0; i < n; ++i)
        ctx.range_(i, c) = sys.vectors(i, keep[c]);
  }

  ctx.sqrt_a_ = ComplexMatrix(n, n);
  ctx.sqrt_a_pinv_ = ComplexMatrix(n, n);
  ctx.a_pinv_ = ComplexMatrix(n, n);
  ctx.proj_ = ComplexMatrix(n, n);
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const double lam = sys.values[keep[c]];
    const double root = std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = sys.vectors(i, keep[c]);
      for (std::size_t j = 0; j < n; ++j) {
        const Complex w = vi * std::conj(sys.vectors(j, keep[c]));
        ctx.sqrt_a_(i, j) += root * w;
        ctx.sqrt_a_pinv_(i, j) += (1.0 / root) * w;
        ctx.a_pinv_(i, j) += (1.0 / lam) * w;
        ctx.proj_(i, j) += w;
      }
    }
  }
  return ctx;
}

Complex a_inner(const SemiHilbertContext& ctx, const ComplexVector& x,
                const ComplexVector& y) {
  if (x.size() != ctx.dim() || y.size() != ctx.dim())
    throw DimensionMismatch("a_inner: vector length mismatch");
  return inner(ctx.weight().apply(x), y);
}

double a_norm_vec(const SemiHilbertContext& ctx, const ComplexVector& x) {
  if (x.size() != ctx.dim())
    throw DimensionMismatch("a_norm_vec: vector length mismatch");
  return norm2(ctx.sqrt_weight().apply(x));
}

BAOperator a_adjoint(const SemiHilbertContext& ctx, const ComplexMatrix& T) {
  if (!T.is_square() || T.rows() != ctx.dim())
    throw DimensionMismatch("a_adjoint: operator shape mismatch");
  BAOperator out;
  out.op = T;

  const ComplexMatrix TsA = T.adjoint() * ctx.weight();
  ComplexMatrix outside = TsA - ctx.projector() * TsA;  // (I - P_A) T* A
  out.membership_residual =
      spectral_norm(outside) / (1.0 + spectral_norm(TsA));
  if (out.membership_residual > ctx.tol())
    throw NotInBA("a_adjoint: R(T*A) is not contained in R(A)");

  out.adjoint = ctx.weight_pinv() * TsA;
  out.compressed = compress(ctx, T);
  return out;
}

bool is_a_selfadjoint(const SemiHilbertContext& ctx, const ComplexMatrix& T) {
  if (!T.is_square() || T.rows() != ctx.dim())
    throw DimensionMismatch("is_a_selfadjoint: operator shape mismatch");
  const ComplexMatrix AT = ctx.weight() * T;
  const ComplexMatrix TsA = T.adjoint() * ctx.weight();
  const double scale = 1.0 + spectral_norm(ctx.weight()) * spectral_norm(T);
  return spectral_norm(AT - TsA) <= ctx.tol() * scale;
}

bool is_a_unitary(const SemiHilbertContext& ctx, const ComplexMatrix& U) {
  const BAOperator u = a_adjoint(ctx, U);
  const BAOperator us = a_adjoint(ctx, u.adjoint);
  const double r1 = spectral_norm(u.adjoint * U - ctx.projector());
  const double r2 = spectral_norm(us.adjoint * u.adjoint - ctx.projector());
  return r1 <= ctx.tol() * (1.0 + spectral_norm(U)) &&
         r2 <= ctx.tol() * (1.0 + spectral_norm(u.adjoint));
}

std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(
    const SemiHilbertContext& ctx, const BAOperator& T) {
  (void)ctx;
  ComplexMatrix re = 0.5 * (T.op + T.adjoint);
  ComplexMatrix im = Complex(0.0, -0.5) * (T.op - T.adjoint);
  return {std::move(re), std::move(im)};
}

ComplexMatrix compress(const SemiHilbertContext& ctx, const ComplexMatrix& T) {
  if (!T.is_square() || T.rows() != ctx.dim())
    throw DimensionMismatch("compress: operator shape mismatch");
  // A-boundedness: ||Tx||_A must vanish on null(A), i.e. A^{1/2} T (I - P_A) = 0.
  const ComplexMatrix st = ctx.sqrt_weight() * T;
  const ComplexMatrix leak =
      st - st * ctx.projector();
  const double scale =
      1.0 + spectral_norm(T) * spectral_norm(ctx.sqrt_weight());
  if (spectral_norm(leak) > ctx.tol() * scale)
    throw NotABounded("compress: operator does not annihilate null(A)");

  const std::size_t n = ctx.dim();
  const std::size_t k = ctx.rank();
  const ComplexMatrix mid = st * ctx.sqrt_weight_pinv();  // A^{1/2} T (A^{1/2})^+
  ComplexMatrix out(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Complex acc(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          acc += std::conj(ctx.range()(i, a)) * mid(i, j) * ctx.range()(j, b);
      out(a, b) = acc;
    }
  return out;
}

ComplexMatrix lift(const SemiHilbertContext& ctx, const ComplexMatrix& B) {
  if (B.rows() != ctx.rank() || B.cols() != ctx.rank())
    throw DimensionMismatch("lift: compressed shape mismatch");
  const std::size_t n = ctx.dim();
  const std::size_t k = ctx.rank();
  ComplexMatrix vbv(n, n);  // V B V*
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          acc += ctx.range()(i, a) * B(a, b) * std::conj(ctx.range()(j, b));
      vbv(i, j) = acc;
    }
  return ctx.sqrt_weight_pinv() * vbv * ctx.sqrt_weight();
}

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.cnormal();
  return g;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  // Modified Gram-Schmidt QR of a Gaussian matrix, diagonal phases fixed so
  // the factorization (and hence the stream of unitaries) is unambiguous.
  ComplexMatrix g = random_gaussian(dim, dim, rng);
  ComplexMatrix q(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    ComplexVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = g(i, c);
    for (std::size_t p = 0; p < c; ++p) {
      Complex proj(0);
      for (std::size_t i = 0; i < dim; ++i) proj += col[i] * std::conj(q(i, p));
      for (std::size_t i = 0; i < dim; ++i) col[i] -= proj * q(i, p);
    }
    double nrm = norm2(col);
    if (nrm < 1e-12) {
      // Degenerate draw; replace with a standard basis direction.
      std::fill(col.begin(), col.end(), Complex(0));
      col[c] = 1.0;
      for (std::size_t p = 0; p < c; ++p) {
        Complex proj(0);
        for (std::size_t i = 0; i < dim; ++i)
          proj += col[i] * std::conj(q(i, p));
        for (std::size_t i = 0; i < dim; ++i) col[i] -= proj * q(i, p);
      }
      nrm = norm2(col);
    }
    Complex phase = col[0];
    for (std::size_t i = 0; i < dim && std::abs(phase) < 1e-14; ++i)
      phase = col[i];
    phase = (std::abs(phase) > 0) ? phase / std::abs(phase) : Complex(1.0);
    for (std::size_t i = 0; i < dim; ++i)
      q(i, c) = col[i] / (nrm * phase);
  }
  return q;
}

BAOperator random_ba_operator(const SemiHilbertContext& ctx,
                              std::uint64_t seed, bool null_coupling) {
  Rng rng(seed);
  const std::size_t k = ctx.rank();
  const std::size_t n = ctx.dim();
  ComplexMatrix t = lift(ctx, random_gaussian(k, k, rng));
  if (null_coupling && k < n) {
    const ComplexMatrix x = random_gaussian(n, n, rng);
    ComplexMatrix outside = x - ctx.projector() * x;  // (I - P_A) X
    t += outside;
  }
  return a_adjoint(ctx, t);
}

BAOperator random_a_unitary(const SemiHilbertContext& ctx,
                            std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix w = random_unitary(ctx.rank(), rng);
  return a_adjoint(ctx, lift(ctx, w));
}

ComplexMatrix random_psd(std::size_t dim, std::size_t rank_deficit,
                         std::uint64_t seed) {
  if (rank_deficit >= dim && dim > 0)
    throw DimensionMismatch("random_psd: rank_deficit must be < dim");
  Rng rng(seed);
  const ComplexMatrix q = random_unitary(dim, rng);
  std::vector<double> d(dim);
  const double lo = std::log(0.1), hi = std::log(10.0);
  for (std::size_t i = 0; i < dim; ++i) d[i] = std::exp(rng.uniform(lo, hi));
  for (std::size_t i = 0; i < rank_deficit; ++i) d[dim - 1 - i] = 0.0;
  ComplexMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc(0);
      for (std::size_t kk = 0; kk < dim; ++kk)
        acc += q(i, kk) * d[kk] * std::conj(q(j, kk));
      a(i, j) = acc;
    }
  // Exact Hermitian symmetry, so downstream checks see zero asymmetry.
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }
  return a;
}

}  // namespace anorm
