#include "anorm/scalar_search.hpp"

#include <cmath>
#include <utility>

namespace anorm {

ScalarSearchResult golden_section_min(const std::function<double(double)>& f,
                                      double a, double b, double interval_tol,
                                      int max_iterations) {
  constexpr double kInvPhi = 0.6180339887498949;
  ScalarSearchResult res;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  res.evaluations = 2;
  for (int it = 0; it < max_iterations && (b - a) > interval_tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++res.evaluations;
  }
  if (fc < fd) {
    res.x = c;
    res.value = fc;
  } else {
    res.x = d;
    res.value = fd;
  }
  return res;
}

ScalarSearchResult brent_max(const std::function<double(double)>& f, double a,
                             double b, double interval_tol,
                             int max_iterations) {
  // Classic Brent localization, sign-flipped for maximization.
  constexpr double kGold = 0.3819660112501051;
  auto g = [&f](double t) { return -f(t); };

  double x = a + kGold * (b - a);
  double w = x, v = x;
  double fx = g(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  ScalarSearchResult res;
  res.evaluations = 1;

  for (int it = 0; it < max_iterations; ++it) {
    const double m = 0.5 * (a + b);
    const double tol = interval_tol * 0.5 + 1e-18;
    if (std::abs(x - m) + 0.5 * (b - a) <= 2.0 * tol) break;

    bool parabolic = false;
    if (std::abs(e) > tol) {
      // Fit a parabola through (v, fv), (w, fw), (x, fx).
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etmp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etmp) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < 2.0 * tol || b - u < 2.0 * tol)
          d = (m > x) ? tol : -tol;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m) ? b - x : a - x;
      d = kGold * e;
    }
    const double u = (std::abs(d) >= tol) ? x + d : x + ((d > 0) ? tol : -tol);
    const double fu = g(u);
    ++res.evaluations;
    if (fu <= fx) {
      if (u < x)
        b = x;
      else
        a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  res.x = x;
  res.value = -fx;
  return res;
}

}  // namespace anorm
