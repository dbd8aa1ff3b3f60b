#pragma once

#include <string>
#include <vector>

#include "anorm/complex_matrix.hpp"

namespace anorm {

/// The worked 3x3 example pair: T the weighted shift with weights (2, 1)
/// and A = diag(1, 1, 2).
ComplexMatrix example_operator();
ComplexMatrix example_weight();

/// One comparison row of the reproduction table.
struct ReproRow {
  std::string label;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 1e-9;
  bool matched = false;
};

/// Recomputes every closed-form quantity of the worked example and compares
/// against the expected values: the Cartesian combination norm 23/8 at
/// alpha = 7/8 with its baseline 3, the squared-radius bound
/// (6 sqrt(2) + 20)/13 at alpha = 12/13 with its baseline (3 + sqrt(2))/2,
/// the two min-over-alpha optima, and the strict-improvement margins.
std::vector<ReproRow> reproduction_rows();

bool all_matched(const std::vector<ReproRow>& rows);

}  // namespace anorm
