#pragma once

#include <functional>

namespace anorm {

struct ScalarSearchResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section minimization of a unimodal f on [a, b] down to the given
/// interval width. Derivative-free, tolerant of kinks (the alpha objectives
/// are maxima of affine families).
ScalarSearchResult golden_section_min(const std::function<double(double)>& f,
                                      double a, double b, double interval_tol,
                                      int max_iterations = 400);

/// Brent-style maximization on [a, b]: parabolic steps where they behave,
/// golden-section fallback otherwise. Used to polish grid extrema of the
/// numerical-range support function.
ScalarSearchResult brent_max(const std::function<double(double)>& f, double a,
                             double b, double interval_tol,
                             int max_iterations = 400);

}  // namespace anorm
