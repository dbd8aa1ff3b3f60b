#include "anorm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace anorm {
namespace detail {

namespace {

double off_diagonal_norm(std::size_t n, const Complex* h) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(h[p * n + q]);
  return std::sqrt(2.0 * s);
}

double frobenius(std::size_t n, const Complex* h) {
  double s = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) s += std::norm(h[i]);
  return std::sqrt(s);
}

}  // namespace

bool jacobi_hermitian(std::size_t n, Complex* h, Complex* v) {
  if (n < 2) return true;
  const double threshold = 1e-14 * frobenius(n, h);
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(n, h) <= threshold) return true;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = h[p * n + q];
        const double ab = std::abs(b);
        if (ab < 1e-300) continue;
        const double app = h[p * n + p].real();
        const double aqq = h[q * n + q].real();
        // Unitary rotation zeroing h(p,q): diagonal block
        //   [c, s*e^{i phi}; -s*e^{-i phi}, c]  with b = |b| e^{i phi}.
        const Complex phase = b / ab;
        const double tau = (aqq - app) / (2.0 * ab);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const Complex sp = s * phase;              // s e^{i phi}
        const Complex spc = s * std::conj(phase);  // s e^{-i phi}

        h[p * n + p] = app * c * c - 2.0 * ab * c * s + aqq * s * s;
        h[q * n + q] = app * s * s + 2.0 * ab * c * s + aqq * c * c;
        h[p * n + q] = 0.0;
        h[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex hkp = h[k * n + p];
          const Complex hkq = h[k * n + q];
          const Complex np = c * hkp - spc * hkq;
          const Complex nq = sp * hkp + c * hkq;
          h[k * n + p] = np;
          h[k * n + q] = nq;
          h[p * n + k] = std::conj(np);
          h[q * n + k] = std::conj(nq);
        }
        if (v != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v[k * n + p];
            const Complex vkq = v[k * n + q];
            v[k * n + p] = c * vkp - spc * vkq;
            v[k * n + q] = sp * vkp + c * vkq;
          }
        }
      }
    }
  }
  return off_diagonal_norm(n, h) <= threshold;
}

}  // namespace detail

EigenSystem hermitian_eig(const ComplexMatrix& M) {
  if (!M.is_square()) throw DimensionMismatch("hermitian_eig: non-square input");
  const std::size_t n = M.rows();
  EigenSystem sys;
  sys.vectors = ComplexMatrix::identity(n);
  if (n == 0) return sys;

  // Symmetrize; callers are required to be Hermitian up to rounding.
  std::vector<Complex> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i * n + j] = 0.5 * (M(i, j) + std::conj(M(j, i)));

  if (!detail::jacobi_hermitian(n, h.data(), sys.vectors.data()))
    throw ConvergenceFailure("hermitian_eig: Jacobi sweep cap exceeded");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h[a * n + a].real() > h[b * n + b].real();
  });

  sys.values.resize(n);
  ComplexMatrix sorted(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    sys.values[j] = h[order[j] * n + order[j]].real();
    for (std::size_t i = 0; i < n; ++i) sorted(i, j) = sys.vectors(i, order[j]);
  }
  sys.vectors = std::move(sorted);
  return sys;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& M, double tol) {
  const EigenSystem sys = hermitian_eig(M);
  const std::size_t n = M.rows();
  double lmax = 0.0;
  for (double v : sys.values) lmax = std::max(lmax, v);
  std::vector<double> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = sys.values[i];
    if (v < -tol * lmax)
      throw NotPsd("psd_sqrt: eigenvalue below negative tolerance band");
    roots[i] = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0);
      for (std::size_t k = 0; k < n; ++k)
        acc += sys.vectors(i, k) * roots[k] * std::conj(sys.vectors(j, k));
      out(i, j) = acc;
    }
  return out;
}

bool nearly_hermitian(const ComplexMatrix& M, double tol) {
  if (!M.is_square()) return false;
  double asym = 0.0;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = i; j < M.cols(); ++j)
      asym = std::max(asym, std::abs(M(i, j) - std::conj(M(j, i))));
  return asym <= tol * (1.0 + M.max_abs());
}

double lambda_max(const ComplexMatrix& M) {
  if (M.rows() == 0) return 0.0;
  return hermitian_eig(M).values.front();
}

double lambda_min(const ComplexMatrix& M) {
  if (M.rows() == 0) return 0.0;
  return hermitian_eig(M).values.back();
}

Svd svd(const ComplexMatrix& M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  const std::size_t r = std::min(m, n);
  Svd out;
  out.left = ComplexMatrix(m, r);
  out.right = ComplexMatrix(n, r);
  out.values.assign(r, 0.0);
  if (r == 0) return out;

  // Augmented Hermitian [[0, M], [M*, 0]]; eigenvalues come in +/- sigma
  // pairs and the top block of each positive-branch eigenvector is a left
  // singular vector scaled by 1/sqrt(2).
  const std::size_t N = m + n;
  ComplexMatrix K(N, N);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      K(i, m + j) = M(i, j);
      K(m + j, i) = std::conj(M(i, j));
    }
  const EigenSystem sys = hermitian_eig(K);
  const double s2 = std::sqrt(2.0);
  for (std::size_t k = 0; k < r; ++k) {
    out.values[k] = std::max(0.0, sys.values[k]);
    for (std::size_t i = 0; i < m; ++i) out.left(i, k) = s2 * sys.vectors(i, k);
    for (std::size_t j = 0; j < n; ++j)
      out.right(j, k) = s2 * sys.vectors(m + j, k);
  }
  return out;
}

ComplexMatrix pinv(const ComplexMatrix& M, double tol) {
  if (M.rows() == 0 || M.cols() == 0) return ComplexMatrix(M.cols(), M.rows());
  if (nearly_hermitian(M)) {
    const EigenSystem sys = hermitian_eig(M);
    const std::size_t n = M.rows();
    double lmax = 0.0;
    for (double v : sys.values) lmax = std::max(lmax, std::abs(v));
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const double lam = sys.values[k];
      if (std::abs(lam) <= tol * lmax) continue;
      const double inv = 1.0 / lam;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out(i, j) += sys.vectors(i, k) * inv * std::conj(sys.vectors(j, k));
    }
    return out;
  }
  const Svd s = svd(M);
  const double smax = s.values.empty() ? 0.0 : s.values[0];
  ComplexMatrix out(M.cols(), M.rows());
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (s.values[k] <= tol * smax) continue;
    const double inv = 1.0 / s.values[k];
    for (std::size_t i = 0; i < M.cols(); ++i)
      for (std::size_t j = 0; j < M.rows(); ++j)
        out(i, j) += s.right(i, k) * inv * std::conj(s.left(j, k));
  }
  return out;
}

ComplexMatrix range_basis(const ComplexMatrix& M, double tol) {
  const std::size_t m = M.rows();
  if (m == 0 || M.cols() == 0) return ComplexMatrix(m, 0);
  std::vector<std::size_t> keep;
  if (nearly_hermitian(M)) {
    const EigenSystem sys = hermitian_eig(M);
    double lmax = 0.0;
    for (double v : sys.values) lmax = std::max(lmax, std::abs(v));
    for (std::size_t k = 0; k < sys.values.size(); ++k)
      if (std::abs(sys.values[k]) > tol * lmax) keep.push_back(k);
    ComplexMatrix out(m, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
      for (std::size_t i = 0; i < m; ++i) out(i, c) = sys.vectors(i, keep[c]);
    return out;
  }
  const Svd s = svd(M);
  const double smax = s.values.empty() ? 0.0 : s.values[0];
  for (std::size_t k = 0; k < s.values.size(); ++k)
    if (s.values[k] > tol * smax) keep.push_back(k);
  ComplexMatrix out(m, keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (std::size_t i = 0; i < m; ++i) out(i, c) = s.left(i, keep[c]);
  return out;
}

double spectral_norm(const ComplexMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  const Svd s = svd(M);
  return s.values.empty() ? 0.0 : s.values[0];
}

double smallest_singular_value(const ComplexMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  const Svd s = svd(M);
  return s.values.empty() ? 0.0 : s.values.back();
}

}  // namespace anorm
