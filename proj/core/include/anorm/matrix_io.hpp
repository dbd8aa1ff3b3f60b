#pragma once

#include <string>

#include "anorm/complex_matrix.hpp"

namespace anorm {

/// Matrix files are JSON documents
///   { "rows": n, "cols": n, "data": [[re, im], ...] }
/// with `data` row-major and exactly rows*cols entries, all finite.
/// Operators in this library are square; non-square files are rejected.
ComplexMatrix parse_matrix_file(const std::string& text);
std::string write_matrix_file(const ComplexMatrix& m);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

}  // namespace anorm
