#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "anorm/error.hpp"

namespace anorm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix, row-major. The universal operand of the library:
/// every weight A, operator T and derived product lives here. Operations
/// return fresh values; nothing is mutated in place, so instances are safe
/// to share across threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  /// Row-by-row construction, mostly for tests and embedded examples.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const Complex* data() const { return data_.data(); }
  Complex* data() { return data_.data(); }

  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex c);

  ComplexVector apply(const ComplexVector& x) const;
  /// Returns M* x without forming the adjoint.
  ComplexVector apply_adjoint(const ComplexVector& x) const;

  double max_abs() const;
  double frobenius_norm() const;

  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex c, ComplexMatrix m);
ComplexMatrix operator*(double c, ComplexMatrix m);

/// <x, y> = sum_i x_i * conj(y_i); linear in the first argument, like the
/// semi-inner product it backs.
Complex inner(const ComplexVector& x, const ComplexVector& y);
double norm2(const ComplexVector& x);
void normalize(ComplexVector& x);

/// Entrywise distance, max norm. Used by almost every residual check.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace anorm
