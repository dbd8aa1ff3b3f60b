#include "anorm/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anorm/scalar_search.hpp"

namespace anorm {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::uint64_t kStartSeed = 0xA1FA5EEDULL;

// ---------------------------------------------------------------------------
// Flat-buffer primitives for the hot loops. Everything below works on the
// compressed k x k representative, k is tiny (<= dim of the ambient space).
// ---------------------------------------------------------------------------

void flat_copy(const ComplexMatrix& m, std::vector<Complex>& out) {
  const std::size_t k = m.rows();
  out.assign(m.data(), m.data() + k * k);
}

void matvec(std::size_t k, const Complex* m, const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < k; ++i) {
    Complex acc(0);
    const Complex* row = m + i * k;
    for (std::size_t j = 0; j < k; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_adj(std::size_t k, const Complex* m, const Complex* x, Complex* y) {
  for (std::size_t j = 0; j < k; ++j) y[j] = Complex(0);
  for (std::size_t i = 0; i < k; ++i) {
    const Complex xi = x[i];
    const Complex* row = m + i * k;
    for (std::size_t j = 0; j < k; ++j) y[j] += std::conj(row[j]) * xi;
  }
}

// H(theta) = (e^{i theta} B + e^{-i theta} B*)/2 into flat storage.
void rotated_hermitian_part(std::size_t k, const Complex* b, double theta,
                            Complex* h) {
  const Complex ph = std::polar(1.0, theta);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const Complex v = 0.5 * (ph * b[i * k + j] + std::conj(ph * b[j * k + i]));
      h[i * k + j] = v;
      h[j * k + i] = std::conj(v);
    }
    h[i * k + i] = h[i * k + i].real();
  }
}

struct EigBuffers {
  std::vector<Complex> h, v;
  void resize(std::size_t k) {
    h.assign(k * k, Complex(0));
    v.assign(k * k, Complex(0));
  }
  void reset_vectors(std::size_t k) {
    std::fill(v.begin(), v.end(), Complex(0));
    for (std::size_t i = 0; i < k; ++i) v[i * k + i] = 1.0;
  }
};

// lambda_max of H(theta); eigenvector of the top eigenvalue written to
// `vec` when non-null.
double support_value(std::size_t k, const Complex* b, double theta,
                     EigBuffers& buf, ComplexVector* vec) {
  rotated_hermitian_part(k, b, theta, buf.h.data());
  Complex* vptr = nullptr;
  if (vec != nullptr) {
    buf.reset_vectors(k);
    vptr = buf.v.data();
  }
  detail::jacobi_hermitian(k, buf.h.data(), vptr);
  double best = buf.h[0].real();
  std::size_t arg = 0;
  for (std::size_t i = 1; i < k; ++i) {
    const double d = buf.h[i * k + i].real();
    if (d > best) {
      best = d;
      arg = i;
    }
  }
  if (vec != nullptr) {
    vec->resize(k);
    for (std::size_t i = 0; i < k; ++i) (*vec)[i] = buf.v[i * k + arg];
  }
  return best;
}

Complex quad_form(std::size_t k, const Complex* b, const ComplexVector& z,
                  std::vector<Complex>& scratch) {
  scratch.resize(k);
  matvec(k, b, z.data(), scratch.data());
  Complex q(0);
  for (std::size_t i = 0; i < k; ++i) q += scratch[i] * std::conj(z[i]);
  return q;
}

// ---------------------------------------------------------------------------
// Planar convex geometry for the Crawford number.
// ---------------------------------------------------------------------------

struct Pt {
  double x, y;
};

double cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Pt& a, const Pt& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Pt> hull(2 * n);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0.0) --h;
    hull[h++] = pts[i];
  }
  const std::size_t lower = h + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0.0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);  // last point repeats the first
  return hull;
}

double segment_distance_to_origin(const Pt& a, const Pt& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(-(a.x * dx + a.y * dy) / len2, 0.0, 1.0);
  const double px = a.x + t * dx, py = a.y + t * dy;
  return std::hypot(px, py);
}

/// Distance from the origin to the convex hull of the samples; zero when the
/// origin lies inside (boundary counts as inside).
double origin_distance_to_hull(const std::vector<Pt>& pts) {
  const std::vector<Pt> hull = convex_hull(pts);
  if (hull.empty()) return 0.0;
  if (hull.size() == 1) return std::hypot(hull[0].x, hull[0].y);
  if (hull.size() == 2) return segment_distance_to_origin(hull[0], hull[1]);
  double scale = 0.0;
  for (const Pt& p : hull) scale = std::max(scale, std::hypot(p.x, p.y));
  const Pt origin{0.0, 0.0};
  bool inside = true;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % hull.size()];
    const double edge = std::hypot(b.x - a.x, b.y - a.y);
    if (cross(a, b, origin) < -1e-14 * scale * std::max(edge, 1e-30)) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i)
    best = std::min(best, segment_distance_to_origin(
                              hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

// ---------------------------------------------------------------------------
// Projected-gradient machinery on the unit sphere of C^k.
// ---------------------------------------------------------------------------

struct AscentKernel {
  std::size_t k = 0;
  const Complex* b = nullptr;
  double alpha = 0.0;
  double scale2 = 1.0;  // ~ sigma_max(B)^2, sets the step length unit

  mutable std::vector<Complex> bz, bz_new, wv, grad, z_new;

  void bind(std::size_t kk, const Complex* bb, double a, double s2) {
    k = kk;
    b = bb;
    alpha = a;
    scale2 = std::max(s2, 1e-300);
    bz.resize(k);
    bz_new.resize(k);
    wv.resize(k);
    grad.resize(k);
    z_new.resize(k);
  }

  // f(z) = alpha |<Bz,z>|^2 + (1 - alpha) ||Bz||^2, with Bz left in `into`.
  double objective(const ComplexVector& z, std::vector<Complex>& into,
                   Complex& q_out) const {
    matvec(k, b, z.data(), into.data());
    Complex q(0);
    double nb2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      q += into[i] * std::conj(z[i]);
      nb2 += std::norm(into[i]);
    }
    q_out = q;
    return alpha * std::norm(q) + (1.0 - alpha) * nb2;
  }

  // Ascent from z; returns outer iterations consumed. kMinimize flips the
  // sign for the |<Bz,z>|-descent used by Crawford witness polishing.
  template <bool kMinimize = false>
  int run(ComplexVector& z, double& f, Complex& q, int max_iters,
          double rel_tol) const {
    const double eta_min = 1e-18 / scale2;
    const double eta_max = 1e4 / scale2;
    double eta = 0.25 / scale2;
    int it = 0;
    for (; it < max_iters; ++it) {
      // gradient of f: 2 [ alpha conj(q) Bz + B^* (alpha q z + (1-alpha) Bz) ]
      for (std::size_t i = 0; i < k; ++i)
        wv[i] = alpha * q * z[i] + (1.0 - alpha) * bz[i];
      matvec_adj(k, b, wv.data(), grad.data());
      for (std::size_t i = 0; i < k; ++i)
        grad[i] = 2.0 * (grad[i] + alpha * std::conj(q) * bz[i]);
      double radial = 0.0;
      for (std::size_t i = 0; i < k; ++i)
        radial += (grad[i] * std::conj(z[i])).real();
      double gnorm2 = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        grad[i] -= radial * z[i];
        gnorm2 += std::norm(grad[i]);
      }
      if (gnorm2 <= 1e-28 * (1.0 + f * f)) break;  // stationary

      bool accepted = false;
      double f_new = f;
      Complex q_new = q;
      while (eta >= eta_min) {
        double zn2 = 0.0;
        const double sgn = kMinimize ? -eta : eta;
        for (std::size_t i = 0; i < k; ++i) {
          z_new[i] = z[i] + sgn * grad[i];
          zn2 += std::norm(z_new[i]);
        }
        const double inv = 1.0 / std::sqrt(zn2);
        for (std::size_t i = 0; i < k; ++i) z_new[i] *= inv;
        f_new = objective(z_new, bz_new, q_new);
        const bool better = kMinimize ? (f_new < f) : (f_new > f);
        if (better) {
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
      const double change = std::abs(f_new - f);
      z.swap(z_new);
      bz.swap(bz_new);
      f = f_new;
      q = q_new;
      eta = std::min(eta * 1.6, eta_max);
      if (change <= rel_tol * std::max(1.0, std::abs(f))) {
        ++it;
        break;
      }
    }
    return it;
  }
};

RadiusEstimate zero_estimate() { return {}; }

// Exact paths for Hermitian compressions: W(B) is the real segment
// [lambda_min, lambda_max].
bool hermitian_scan(const ComplexMatrix& B, NumericalRangeScan& out) {
  if (!nearly_hermitian(B)) return false;
  const EigenSystem sys = hermitian_eig(B);
  const std::size_t k = B.rows();
  const double top = sys.values.front(), bot = sys.values.back();
  auto column = [&](std::size_t j) {
    ComplexVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = sys.vectors(i, j);
    return v;
  };

  RadiusEstimate& r = out.radius;
  if (std::abs(top) >= std::abs(bot)) {
    r.value = std::abs(top);
    r.witness = column(0);
  } else {
    r.value = std::abs(bot);
    r.witness = column(k - 1);
  }
  r.witness_value = r.value;

  RadiusEstimate& c = out.crawford;
  if (bot > 0.0) {
    c.value = bot;
    c.witness = column(k - 1);
  } else if (top < 0.0) {
    c.value = -top;
    c.witness = column(0);
  } else {
    // Mix the eigenvectors straddling zero into an exact null witness.
    std::size_t ip = 0;
    while (ip < k && sys.values[ip] > 0.0) ++ip;
    c.value = 0.0;
    if (ip == 0) {
      c.witness = column(0);  // lambda_max == 0
    } else if (ip == k) {
      c.witness = column(0);
    } else if (sys.values[ip] == 0.0) {
      c.witness = column(ip);
    } else {
      const double lp = sys.values[ip - 1], lm = sys.values[ip];
      const double mu = -lm / (lp - lm);
      const ComplexVector vp = column(ip - 1), vm = column(ip);
      ComplexVector z(k);
      for (std::size_t i = 0; i < k; ++i)
        z[i] = std::sqrt(mu) * vp[i] + std::sqrt(1.0 - mu) * vm[i];
      c.witness = z;
    }
  }
  std::vector<Complex> scratch;
  c.witness_value = std::abs(quad_form(k, B.data(), c.witness, scratch));
  return true;
}

}  // namespace

NumericalRangeScan scan_numerical_range(const ComplexMatrix& B,
                                        const Effort& effort) {
  if (!B.is_square()) throw DimensionMismatch("scan: non-square compression");
  const std::size_t k = B.rows();
  NumericalRangeScan out;
  if (k == 0) return out;
  if (hermitian_scan(B, out)) return out;

  const Complex* b = B.data();
  EigBuffers buf;
  buf.resize(k);
  const int grid = std::max(8, effort.theta_grid);

  ComplexVector vec(k), best_vec(k);
  std::vector<Complex> scratch;
  std::vector<Pt> pts;
  pts.reserve(static_cast<std::size_t>(grid) + 32);

  double best_abs = -1.0;
  double lam_max = -std::numeric_limits<double>::infinity();
  double lam_min = std::numeric_limits<double>::infinity();
  int arg_max = 0, arg_min = 0;
  for (int j = 0; j < grid; ++j) {
    const double theta = kTwoPi * j / grid;
    const double lam = support_value(k, b, theta, buf, &vec);
    const Complex p = quad_form(k, b, vec, scratch);
    pts.push_back({p.real(), p.imag()});
    if (std::abs(p) > best_abs) {
      best_abs = std::abs(p);
      best_vec = vec;
    }
    if (lam > lam_max) {
      lam_max = lam;
      arg_max = j;
    }
    if (lam < lam_min) {
      lam_min = lam;
      arg_min = j;
    }
  }
  const double h = kTwoPi / grid;

  // Numerical radius: polish the best support direction, then certify with
  // the boundary point it generates.
  auto g = [&](double theta) { return support_value(k, b, theta, buf, nullptr); };
  const double t0 = kTwoPi * arg_max / grid;
  const ScalarSearchResult peak = brent_max(g, t0 - h, t0 + h, 1e-12);
  (void)support_value(k, b, peak.x, buf, &vec);
  const Complex p_peak = quad_form(k, b, vec, scratch);
  if (std::abs(p_peak) > best_abs) {
    best_abs = std::abs(p_peak);
    best_vec = vec;
  }
  out.radius.value = best_abs;
  out.radius.witness = best_vec;
  out.radius.witness_value = best_abs;
  out.radius.effort = {grid, 0, 0, peak.evaluations};

  // Crawford: refine the weakest support direction, enrich the polygon near
  // the prospective touching point, then measure the hull.
  const double t1 = kTwoPi * arg_min / grid;
  const ScalarSearchResult dip =
      brent_max([&](double th) { return -g(th); }, t1 - h, t1 + h, 1e-12);
  const int refine_evals = dip.evaluations;
  for (int j = -8; j <= 8; ++j) {
    const double theta = dip.x + j * 1e-6;
    (void)support_value(k, b, theta, buf, &vec);
    const Complex p = quad_form(k, b, vec, scratch);
    pts.push_back({p.real(), p.imag()});
  }
  const double hull_dist = origin_distance_to_hull(pts);

  // Feasible witness: descend |<Bz,z>|^2 from the boundary point nearest the
  // origin. The value it reaches is an upper bound on the infimum just like
  // the hull distance; keep whichever is smaller.
  std::size_t near = 0;
  double near_abs = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double d = std::hypot(pts[j].x, pts[j].y);
    if (d < near_abs) {
      near_abs = d;
      near = j;
    }
  }
  ComplexVector zc(k);
  if (near < static_cast<std::size_t>(grid)) {
    (void)support_value(k, b, kTwoPi * near / grid, buf, &zc);
  } else {
    (void)support_value(k, b, 0.0, buf, &zc);
  }
  AscentKernel kern;
  double s2 = 0.0;
  for (std::size_t i = 0; i < k * k; ++i) s2 += std::norm(b[i]);
  kern.bind(k, b, 1.0, s2);
  Complex qc;
  double fc = kern.objective(zc, kern.bz, qc);
  const int polish_iters =
      kern.run<true>(zc, fc, qc, effort.max_iterations, 1e-14);
  const double witness_abs = std::sqrt(std::max(0.0, fc));

  out.crawford.value = std::min(hull_dist, witness_abs);
  out.crawford.witness = zc;
  out.crawford.witness_value = witness_abs;
  out.crawford.effort = {grid, 1, polish_iters, refine_evals};
  return out;
}

RadiusEstimate numerical_radius(const ComplexMatrix& B, const Effort& effort) {
  return scan_numerical_range(B, effort).radius;
}

RadiusEstimate crawford_number(const ComplexMatrix& B, const Effort& effort) {
  return scan_numerical_range(B, effort).crawford;
}

RadiusEstimate alpha_norm(const ComplexMatrix& B, AlphaParam alpha,
                          const Effort& effort,
                          const std::vector<ComplexVector>* warm_starts) {
  if (!B.is_square()) throw DimensionMismatch("alpha_norm: non-square compression");
  const std::size_t k = B.rows();
  if (k == 0) return zero_estimate();
  const double a = alpha.value();

  if (a == 0.0) {
    const Svd s = svd(B);
    RadiusEstimate out;
    out.value = s.values.empty() ? 0.0 : s.values[0];
    out.witness.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.witness[i] = s.right(i, 0);
    out.witness_value = out.value;
    return out;
  }
  if (a == 1.0) return numerical_radius(B, effort);

  // Eigen-structure of B*B: step scale and the top right singular vector.
  const ComplexMatrix btb = B.adjoint() * B;
  const EigenSystem bsys = hermitian_eig(btb);
  const double smax2 = std::max(bsys.values.front(), 0.0);
  if (smax2 == 0.0) {
    RadiusEstimate out;  // B == 0
    out.witness.assign(k, Complex(0));
    out.witness[0] = 1.0;
    return out;
  }

  std::vector<ComplexVector> starts;
  if (warm_starts != nullptr)
    starts.assign(warm_starts->begin(), warm_starts->end());
  else
    starts.push_back(numerical_radius(B, effort).witness);
  {
    ComplexVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = bsys.vectors(i, 0);
    starts.push_back(std::move(v));
  }
  Rng rng(Rng::mix(kStartSeed, k));
  for (int s = 0; s < effort.starts; ++s) {
    ComplexVector z(k);
    for (std::size_t i = 0; i < k; ++i) z[i] = rng.cnormal();
    normalize(z);
    starts.push_back(std::move(z));
  }
  for (ComplexVector& z : starts) {
    if (z.size() != k || norm2(z) == 0.0) {
      z.assign(k, Complex(0));
      z[0] = 1.0;
    } else {
      normalize(z);
    }
  }

  AscentKernel kern;
  kern.bind(k, B.data(), a, smax2);

  // Funnelled multistart: a capped pass over every start locates the basin,
  // the best few are then driven to the 1e-12 stopping rule.
  struct Candidate {
    ComplexVector z;
    double f;
    Complex q;
  };
  std::vector<Candidate> cands;
  cands.reserve(starts.size());
  int iter_total = 0;
  const int coarse_cap = std::min(40, effort.max_iterations);
  for (const ComplexVector& s : starts) {
    Candidate c;
    c.z = s;
    c.f = kern.objective(c.z, kern.bz, c.q);
    iter_total += kern.run(c.z, c.f, c.q, coarse_cap, 1e-9);
    cands.push_back(std::move(c));
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& l, const Candidate& r) { return l.f > r.f; });
  const std::size_t finalists = std::min<std::size_t>(4, cands.size());
  double best_f = -1.0;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < finalists; ++i) {
    Candidate& c = cands[i];
    c.f = kern.objective(c.z, kern.bz, c.q);
    iter_total += kern.run(c.z, c.f, c.q, effort.max_iterations, 1e-12);
    if (c.f > best_f) {
      best_f = c.f;
      best_i = i;
    }
  }

  RadiusEstimate out;
  out.value = std::sqrt(std::max(0.0, best_f));
  out.witness = cands[best_i].z;
  out.witness_value = out.value;
  out.effort = {0, static_cast<int>(starts.size()), iter_total, 0};
  return out;
}

RadiusEstimate alpha_norm_sampling(const ComplexMatrix& B, AlphaParam alpha,
                                   std::size_t samples, std::uint64_t seed) {
  if (!B.is_square())
    throw DimensionMismatch("alpha_norm_sampling: non-square compression");
  const std::size_t k = B.rows();
  if (k == 0 || samples == 0) return zero_estimate();
  const double a = alpha.value();
  const Complex* b = B.data();

  double fro2 = 0.0;
  for (std::size_t i = 0; i < k * k; ++i) fro2 += std::norm(b[i]);
  if (fro2 == 0.0) {
    RadiusEstimate out;
    out.witness.assign(k, Complex(0));
    out.witness[0] = 1.0;
    return out;
  }

  Rng rng(seed);
  std::vector<Complex> z(k), bz(k), wv(k), grad(k), z_try(k), bz_try(k);
  auto eval = [&](const std::vector<Complex>& zz, std::vector<Complex>& into,
                  Complex& q_out) {
    matvec(k, b, zz.data(), into.data());
    Complex q(0);
    double nb2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      q += into[i] * std::conj(zz[i]);
      nb2 += std::norm(into[i]);
    }
    q_out = q;
    return a * std::norm(q) + (1.0 - a) * nb2;
  };

  double best_f = -1.0;
  ComplexVector best_z;
  constexpr int kPolishSteps = 50;
  for (std::size_t s = 0; s < samples; ++s) {
    double zn2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      z[i] = rng.cnormal();
      zn2 += std::norm(z[i]);
    }
    const double inv = 1.0 / std::sqrt(zn2);
    for (std::size_t i = 0; i < k; ++i) z[i] *= inv;

    Complex q;
    double f = eval(z, bz, q);
    double eta = 0.5 / fro2;
    for (int step = 0; step < kPolishSteps; ++step) {
      for (std::size_t i = 0; i < k; ++i)
        wv[i] = a * q * z[i] + (1.0 - a) * bz[i];
      matvec_adj(k, b, wv.data(), grad.data());
      double radial = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        grad[i] = 2.0 * (grad[i] + a * std::conj(q) * bz[i]);
        radial += (grad[i] * std::conj(z[i])).real();
      }
      double tn2 = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        grad[i] -= radial * z[i];
        tn2 += std::norm(grad[i]);
      }
      if (tn2 <= 1e-28 * (1.0 + f * f)) break;
      double n2 = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        z_try[i] = z[i] + eta * grad[i];
        n2 += std::norm(z_try[i]);
      }
      const double zi = 1.0 / std::sqrt(n2);
      for (std::size_t i = 0; i < k; ++i) z_try[i] *= zi;
      Complex q_try;
      const double f_try = eval(z_try, bz_try, q_try);
      if (f_try > f) {
        z.swap(z_try);
        bz.swap(bz_try);
        f = f_try;
        q = q_try;
        eta = std::min(eta * 1.5, 1e3 / fro2);
      } else {
        eta *= 0.4;
        if (eta < 1e-18 / fro2) break;
      }
    }
    if (f > best_f) {
      best_f = f;
      best_z = z;
    }
  }

  RadiusEstimate out;
  out.value = std::sqrt(std::max(0.0, best_f));
  out.witness = best_z;
  out.witness_value = out.value;
  out.effort = {0, static_cast<int>(samples), kPolishSteps, 0};
  return out;
}

// ---------------------------------------------------------------------------
// A-space surface.
// ---------------------------------------------------------------------------

double a_operator_norm(const SemiHilbertContext& ctx, const ComplexMatrix& T) {
  return spectral_norm(compress(ctx, T));
}

double a_min_modulus(const SemiHilbertContext& ctx, const ComplexMatrix& T) {
  return smallest_singular_value(compress(ctx, T));
}

RadiusEstimate a_numerical_radius(const SemiHilbertContext& ctx,
                                  const ComplexMatrix& T,
                                  const Effort& effort) {
  return numerical_radius(compress(ctx, T), effort);
}

RadiusEstimate a_crawford(const SemiHilbertContext& ctx, const ComplexMatrix& T,
                          const Effort& effort) {
  return crawford_number(compress(ctx, T), effort);
}

RadiusEstimate alpha_seminorm(const SemiHilbertContext& ctx,
                              const ComplexMatrix& T, AlphaParam alpha,
                              const Effort& effort) {
  return alpha_norm(compress(ctx, T), alpha, effort);
}

RadiusEstimate alpha_seminorm_oracle(const SemiHilbertContext& ctx,
                                     const ComplexMatrix& T, AlphaParam alpha,
                                     std::size_t samples, std::uint64_t seed) {
  return alpha_norm_sampling(compress(ctx, T), alpha, samples, seed);
}

}  // namespace anorm
