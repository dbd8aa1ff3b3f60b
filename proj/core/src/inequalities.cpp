#include "anorm/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "anorm/matrix_io.hpp"
#include "anorm/scalar_search.hpp"

namespace anorm {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  bool needs_partner;
  bool alpha_dependent;
};

constexpr std::array<TheoremInfo, 16> kTheorems{{
    {TheoremId::EQUIV_W, "EQUIV_W", false, true},
    {TheoremId::EQUIV_NORM, "EQUIV_NORM", false, true},
    {TheoremId::LOWER_MAX4, "LOWER_MAX4", false, true},
    {TheoremId::PROD_MIN3, "PROD_MIN3", true, true},
    {TheoremId::PROD_COMMUTE, "PROD_COMMUTE", true, true},
    {TheoremId::PROD_SHARP, "PROD_SHARP", true, true},
    {TheoremId::CARTESIAN_LOWER, "CARTESIAN_LOWER", false, true},
    {TheoremId::CARTESIAN_UPPER, "CARTESIAN_UPPER", false, true},
    {TheoremId::WA_MIN_ALPHA_CARTESIAN, "WA_MIN_ALPHA_CARTESIAN", false, false},
    {TheoremId::BUZANO, "BUZANO", false, false},
    {TheoremId::WA2_HALF, "WA2_HALF", false, true},
    {TheoremId::WA_MIN_ALPHA_SQUARE, "WA_MIN_ALPHA_SQUARE", false, false},
    {TheoremId::FINAL_UPPER, "FINAL_UPPER", false, true},
    {TheoremId::WA_MIN_ALPHA_FINAL, "WA_MIN_ALPHA_FINAL", false, false},
    {TheoremId::ATTAINMENT_GAP, "ATTAINMENT_GAP", false, true},
    {TheoremId::UNITARY_INVARIANCE, "UNITARY_INVARIANCE", true, true},
}};

const TheoremInfo& info_for(TheoremId id) {
  for (const TheoremInfo& t : kTheorems)
    if (t.id == id) return t;
  throw Error("unknown theorem id");
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Objective kinds of the three min-over-alpha statements.
enum class MinKind { Cartesian, Square, Final };

double min_objective(MinKind kind, double alpha, const ComplexMatrix& btb,
                     const ComplexMatrix& bbt, double w_square) {
  switch (kind) {
    case MinKind::Cartesian:
      return lambda_max(0.5 * alpha * (btb + bbt) + (1.0 - alpha) * btb);
    case MinKind::Square:
      return 0.5 * alpha * w_square +
             lambda_max(0.25 * alpha * (btb + bbt) + (1.0 - alpha) * btb);
    case MinKind::Final:
      return lambda_max(alpha * btb + (1.0 - alpha) * bbt);
  }
  return 0.0;
}

// Golden section over [0,1], bracketed by an 11-point grid. The objective is
// a max of affine eigenvalue curves plus at most a linear term, hence convex;
// the fine-grid fallback guards the result anyway.
std::pair<double, double> minimize_kind(MinKind kind, const ComplexMatrix& btb,
                                        const ComplexMatrix& bbt,
                                        double w_square) {
  auto g = [&](double a) { return min_objective(kind, a, btb, bbt, w_square); };
  constexpr int kGrid = 11;
  double best_g = g(0.0);
  int best_i = 0;
  std::array<double, kGrid> grid_vals;
  grid_vals[0] = best_g;
  for (int i = 1; i < kGrid; ++i) {
    const double a = static_cast<double>(i) / (kGrid - 1);
    grid_vals[i] = g(a);
    if (grid_vals[i] < best_g) {
      best_g = grid_vals[i];
      best_i = i;
    }
  }
  const double lo = std::max(0.0, (best_i - 1) / double(kGrid - 1));
  const double hi = std::min(1.0, (best_i + 1) / double(kGrid - 1));
  ScalarSearchResult r = golden_section_min(g, lo, hi, 1e-10);
  if (r.value > best_g + 1e-12 * (1.0 + std::abs(best_g))) {
    // Convexity guard: scan at step 1e-4 and re-polish.
    double fine_best = best_g;
    double fine_x = best_i / double(kGrid - 1);
    for (int i = 0; i <= 10000; ++i) {
      const double a = i * 1e-4;
      const double v = g(a);
      if (v < fine_best) {
        fine_best = v;
        fine_x = a;
      }
    }
    r = golden_section_min(g, std::max(0.0, fine_x - 1e-4),
                           std::min(1.0, fine_x + 1e-4), 1e-10);
    if (fine_best < r.value) {
      r.x = fine_x;
      r.value = fine_best;
    }
  }
  if (best_g < r.value) {
    r.x = best_i / double(kGrid - 1);
    r.value = best_g;
  }
  return {r.x, r.value};
}

// ---------------------------------------------------------------------------
// Per-operand cache of everything the theorem formulas keep asking for.
// ---------------------------------------------------------------------------

struct OperandCache {
  const BAOperator* op = nullptr;
  ComplexMatrix btb, bbt;
  double op_norm = 0.0;  // sigma_max of the compression, exact route
  bool scanned = false;
  NumericalRangeScan scan;
  bool have_w_square = false;
  double w_square = 0.0;  // w of the squared compression
  std::map<double, RadiusEstimate> alpha_norms;

  void bind(const BAOperator& o) {
    op = &o;
    btb = o.compressed.adjoint() * o.compressed;
    bbt = o.compressed * o.compressed.adjoint();
    op_norm = std::sqrt(std::max(0.0, lambda_max(btb)));
  }

  const NumericalRangeScan& ensure_scan(const Effort& effort) {
    if (!scanned) {
      scan = scan_numerical_range(op->compressed, effort);
      scanned = true;
    }
    return scan;
  }

  double radius(const Effort& effort) { return ensure_scan(effort).radius.value; }
  double crawford(const Effort& effort) {
    return ensure_scan(effort).crawford.value;
  }

  /// c_A(T^{#A} T) = lambda_min of the Hermitian PSD compression B*B.
  double crawford_of_gram() const { return std::max(0.0, lambda_min(btb)); }

  double radius_of_square(const Effort& effort) {
    if (!have_w_square) {
      w_square =
          numerical_radius(op->compressed * op->compressed, effort).value;
      have_w_square = true;
    }
    return w_square;
  }

  const RadiusEstimate& alpha_est(double a, const Effort& effort,
                                  bool allow_scan) {
    auto it = alpha_norms.find(a);
    if (it != alpha_norms.end()) return it->second;
    std::vector<ComplexVector> warm;
    if (allow_scan || scanned)
      warm.push_back(ensure_scan(effort).radius.witness);
    // Continuation from the nearest alpha already solved.
    if (!alpha_norms.empty()) {
      auto lb = alpha_norms.lower_bound(a);
      if (lb != alpha_norms.end()) warm.push_back(lb->second.witness);
      if (lb != alpha_norms.begin()) warm.push_back(std::prev(lb)->second.witness);
    }
    RadiusEstimate est =
        alpha_norm(op->compressed, AlphaParam(a), effort, &warm);
    return alpha_norms.emplace(a, std::move(est)).first->second;
  }
};

// ---------------------------------------------------------------------------
// BoundEngine: evaluates theorems against cached operand functionals.
// ---------------------------------------------------------------------------

class BoundEngine {
 public:
  BoundEngine(const SemiHilbertContext& ctx, double tol_rel, Effort effort,
              bool boosted, std::uint64_t aux_seed)
      : ctx_(ctx),
        tol_rel_(tol_rel),
        effort_(effort),
        boosted_(boosted),
        aux_seed_(aux_seed) {}

  BoundReport evaluate(TheoremId id, const BAOperator& T, const BAOperator* S,
                       std::optional<AlphaParam> alpha);

 private:
  OperandCache& cache_for(const BAOperator& op) {
    auto it = caches_.find(&op);
    if (it != caches_.end()) return it->second;
    OperandCache& c = caches_[&op];
    c.bind(op);
    return c;
  }

  const BAOperator& product_of(const BAOperator& T, const BAOperator& S) {
    const auto key = std::make_pair(static_cast<const void*>(&T),
                                    static_cast<const void*>(&S));
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    return products_.emplace(key, a_adjoint(ctx_, T.op * S.op)).first->second;
  }

  const BAOperator& conjugation_of(const BAOperator& U, const BAOperator& T) {
    const auto key = std::make_pair(static_cast<const void*>(&U),
                                    static_cast<const void*>(&T));
    auto it = conjugations_.find(key);
    if (it != conjugations_.end()) return it->second;
    return conjugations_
        .emplace(key, a_adjoint(ctx_, U.op * T.op * U.adjoint))
        .first->second;
  }

  static double require_alpha(const std::optional<AlphaParam>& alpha) {
    if (!alpha) throw AlphaOutOfRange("this theorem requires an alpha value");
    return alpha->value();
  }

  BoundReport finish(TheoremId id, std::optional<double> alpha, double lhs,
                     double rhs, std::string note, bool equality = false) {
    BoundReport rep;
    rep.theorem = id;
    rep.alpha = alpha;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = equality ? -std::abs(lhs - rhs) : rhs - lhs;
    rep.direction_note = std::move(note);
    const double tol =
        (id == TheoremId::UNITARY_INVARIANCE) ? std::max(tol_rel_, 1e-6)
                                              : tol_rel_;
    if (rep.slack >= -tol * (1.0 + std::abs(rhs)))
      rep.verdict = Verdict::Pass;
    else
      rep.verdict = boosted_ ? Verdict::Violation : Verdict::Inconclusive;
    return rep;
  }

  const SemiHilbertContext& ctx_;
  double tol_rel_;
  Effort effort_;
  bool boosted_;
  std::uint64_t aux_seed_;
  std::map<const BAOperator*, OperandCache> caches_;
  std::map<std::pair<const void*, const void*>, BAOperator> products_;
  std::map<std::pair<const void*, const void*>, BAOperator> conjugations_;

  friend std::pair<double, double> engine_minimize(BoundEngine&, TheoremId,
                                                   const BAOperator&);
};

std::pair<double, double> engine_minimize(BoundEngine& eng, TheoremId id,
                                          const BAOperator& T) {
  OperandCache& tc = eng.cache_for(T);
  switch (id) {
    case TheoremId::WA_MIN_ALPHA_CARTESIAN:
      return minimize_kind(MinKind::Cartesian, tc.btb, tc.bbt, 0.0);
    case TheoremId::WA_MIN_ALPHA_SQUARE:
      return minimize_kind(MinKind::Square, tc.btb, tc.bbt,
                           tc.radius_of_square(eng.effort_));
    case TheoremId::WA_MIN_ALPHA_FINAL:
      return minimize_kind(MinKind::Final, tc.btb, tc.bbt, 0.0);
    default:
      throw Error("minimize_over_alpha: not a min-over-alpha theorem");
  }
}

BoundReport BoundEngine::evaluate(TheoremId id, const BAOperator& T,
                                  const BAOperator* S,
                                  std::optional<AlphaParam> alpha) {
  OperandCache& tc = cache_for(T);
  const std::optional<double> a_opt =
      alpha ? std::optional<double>(alpha->value()) : std::nullopt;

  switch (id) {
    case TheoremId::EQUIV_W: {
      const double a = require_alpha(alpha);
      const double w = tc.radius(effort_);
      const double mid = tc.alpha_est(a, effort_, true).value;
      const double upper = std::sqrt(4.0 - 3.0 * a) * w;
      const double s_lo = mid - w;
      const double s_hi = upper - mid;
      if (s_lo <= s_hi)
        return finish(id, a_opt, w, mid,
                      "binding side: w_A(T) <= |T|_{A,alpha}; both certified "
                      "lower bounds");
      return finish(id, a_opt, mid, upper,
                    "binding side: |T|_{A,alpha} <= sqrt(4-3a) w_A(T)");
    }

    case TheoremId::EQUIV_NORM: {
      const double a = require_alpha(alpha);
      const double mid = tc.alpha_est(a, effort_, true).value;
      const double lower =
          std::max(0.5, std::sqrt(1.0 - a)) * tc.op_norm;
      const double upper = tc.op_norm;
      const double s_lo = mid - lower;
      const double s_hi = upper - mid;
      if (s_lo <= s_hi)
        return finish(id, a_opt, lower, mid,
                      "binding side: max(1/2, sqrt(1-a)) |T|_A <= "
                      "|T|_{A,alpha}; rhs is a certified lower bound");
      return finish(id, a_opt, mid, upper,
                    "binding side: |T|_{A,alpha} <= |T|_A; lhs certified "
                    "lower, rhs exact");
    }

    case TheoremId::LOWER_MAX4: {
      const double a = require_alpha(alpha);
      const double w = tc.radius(effort_);
      const double c = tc.crawford(effort_);
      const double cg = tc.crawford_of_gram();
      const double nrm = tc.op_norm;
      const double root = 2.0 * std::sqrt(std::max(0.0, a * (1.0 - a)));
      const double b1 = a * w * w + (1.0 - a) * cg;
      const double b2 = a * c * c + (1.0 - a) * nrm * nrm;
      const double b3 = root * w * std::sqrt(cg);
      const double b4 = root * c * nrm;
      const double lhs = std::max({b1, b2, b3, b4});
      const double est = tc.alpha_est(a, effort_, true).value;
      return finish(id, a_opt, lhs, est * est,
                    "max of four lower branches vs |T|^2_{A,alpha}; Crawford "
                    "terms are certified upper bounds");
    }

    case TheoremId::PROD_MIN3:
    case TheoremId::PROD_COMMUTE:
    case TheoremId::PROD_SHARP: {
      const double a = require_alpha(alpha);
      if (a == 1.0)
        throw AlphaOutOfRange("product bounds require alpha != 1");
      if (S == nullptr)
        throw PreconditionUnmet("product bounds require a partner operand");
      const double scale =
          1.0 + spectral_norm(T.op) * spectral_norm(S->op);
      if (id == TheoremId::PROD_COMMUTE) {
        const double resid = spectral_norm(T.op * S->op - S->op * T.op);
        if (resid > ctx_.tol() * scale)
          throw PreconditionUnmet("PROD_COMMUTE: TS != ST beyond tolerance");
      }
      const BAOperator& TS = product_of(T, *S);
      if (id == TheoremId::PROD_SHARP) {
        const double resid =
            spectral_norm(TS.adjoint - T.adjoint * S->op);
        if (resid > ctx_.tol() * scale)
          throw PreconditionUnmet(
              "PROD_SHARP: (TS)^{#A} != T^{#A} S beyond tolerance");
      }
      double coef = 0.0;
      if (id == TheoremId::PROD_MIN3)
        coef = std::min({2.0 / std::sqrt(1.0 - a), 1.0 / (1.0 - a), 4.0});
      else if (id == TheoremId::PROD_COMMUTE)
        coef = std::sqrt(4.0 * a + 1.0 / (1.0 - a));
      else
        coef = std::sqrt(1.0 + a) *
               std::min(2.0, 1.0 / std::sqrt(1.0 - a));
      OperandCache& sc = cache_for(*S);
      OperandCache& pc = cache_for(TS);
      const double lhs = pc.alpha_est(a, effort_, false).value;
      const double rhs = coef * tc.alpha_est(a, effort_, true).value *
                         sc.alpha_est(a, effort_, false).value;
      return finish(id, a_opt, lhs, rhs,
                    "lhs certified lower; rhs factors certified lower "
                    "(conservative only on the lhs side)");
    }

    case TheoremId::CARTESIAN_LOWER: {
      const double a = require_alpha(alpha);
      const double q =
          lambda_max(0.25 * a * (tc.btb + tc.bbt) + (1.0 - a) * tc.btb);
      const double h =
          lambda_max(0.5 * a * (tc.btb + tc.bbt) + (1.0 - a) * tc.btb);
      const double lhs = std::max(0.5 * q, h / 3.0);
      const double est = tc.alpha_est(a, effort_, true).value;
      return finish(id, a_opt, lhs, est * est,
                    "lhs exact via compression; rhs certified lower bound");
    }

    case TheoremId::CARTESIAN_UPPER: {
      const double a = require_alpha(alpha);
      const double est = tc.alpha_est(a, effort_, true).value;
      const double rhs =
          lambda_max(0.5 * a * (tc.btb + tc.bbt) + (1.0 - a) * tc.btb);
      return finish(id, a_opt, est * est, rhs,
                    "lhs certified lower bound; rhs exact via compression");
    }

    case TheoremId::WA_MIN_ALPHA_CARTESIAN:
    case TheoremId::WA_MIN_ALPHA_SQUARE:
    case TheoremId::WA_MIN_ALPHA_FINAL: {
      const auto [astar, value] = engine_minimize(*this, id, T);
      const double w = tc.radius(effort_);
      std::ostringstream note;
      note << "min over alpha attained near alpha=" << astar
           << "; lhs certified lower bound";
      return finish(id, std::nullopt, w * w, value, note.str());
    }

    case TheoremId::BUZANO: {
      if (ctx_.rank() == 0)
        return finish(id, std::nullopt, 0.0, 0.0,
                      "vacuous: rank(A) = 0 admits no A-unit vectors");
      Rng rng(aux_seed_);
      const std::size_t n = ctx_.dim();
      double worst_slack = 0.0, wl = 0.0, wr = 0.0;
      bool first = true;
      for (int s = 0; s < 32; ++s) {
        ComplexVector x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = rng.cnormal();
        const double na = a_norm_vec(ctx_, x);
        if (na <= 1e-12 * (1.0 + norm2(x))) continue;
        for (Complex& v : x) v /= na;
        const ComplexVector av = T.op.apply(x);
        const ComplexVector bv = T.adjoint.apply(x);
        const double lhs =
            std::abs(a_inner(ctx_, av, x) * a_inner(ctx_, x, bv));
        const double rhs = 0.5 * (std::abs(a_inner(ctx_, av, bv)) +
                                  a_norm_vec(ctx_, av) * a_norm_vec(ctx_, bv));
        if (first || rhs - lhs < worst_slack) {
          worst_slack = rhs - lhs;
          wl = lhs;
          wr = rhs;
          first = false;
        }
      }
      return finish(id, std::nullopt, wl, wr,
                    "worst of 32 sampled triples (a,b,e) = (Tx, T^{#A}x, x), "
                    "|x|_A = 1");
    }

    case TheoremId::WA2_HALF: {
      const double a = require_alpha(alpha);
      const double est = tc.alpha_est(a, effort_, true).value;
      const double rhs =
          0.5 * a * tc.radius_of_square(effort_) +
          lambda_max(0.25 * a * (tc.btb + tc.bbt) + (1.0 - a) * tc.btb);
      return finish(id, a_opt, est * est, rhs,
                    "lhs certified lower; rhs mixes certified-lower w_A(T^2) "
                    "with exact compression norms");
    }

    case TheoremId::FINAL_UPPER: {
      const double a = require_alpha(alpha);
      const double est = tc.alpha_est(a, effort_, true).value;
      const double rhs = lambda_max((1.0 - a) * tc.btb + a * tc.bbt);
      return finish(id, a_opt, est * est, rhs,
                    "lhs certified lower bound; rhs exact via compression");
    }

    case TheoremId::ATTAINMENT_GAP: {
      const double a = require_alpha(alpha);
      if (a <= 0.0 || a >= 1.0)
        throw AlphaOutOfRange("attainment gap requires alpha in (0,1)");
      const double w = tc.radius(effort_);
      const double est = tc.alpha_est(a, effort_, true).value;
      const double env =
          std::sqrt(a * w * w + (1.0 - a) * tc.op_norm * tc.op_norm);
      return finish(id, a_opt, est, env,
                    "|T|_{A,alpha} <= envelope sqrt(a w^2 + (1-a)|T|_A^2)");
    }

    case TheoremId::UNITARY_INVARIANCE: {
      if (S == nullptr)
        throw PreconditionUnmet("UNITARY_INVARIANCE requires the A-unitary");
      if (!is_a_unitary(ctx_, S->op))
        throw PreconditionUnmet("UNITARY_INVARIANCE: operand is not A-unitary");
      const double a = alpha ? alpha->value() : 0.5;
      const BAOperator& conj = conjugation_of(*S, T);
      OperandCache& cc = cache_for(conj);
      const double lhs = cc.alpha_est(a, effort_, false).value;
      const double rhs = tc.alpha_est(a, effort_, true).value;
      return finish(id, a, lhs, rhs,
                    "equality check |U T U^{#A}|_{A,alpha} = |T|_{A,alpha}; "
                    "both sides optimizer estimates",
                    /*equality=*/true);
    }
  }
  throw Error("unhandled theorem id");
}

}  // namespace

std::string_view theorem_name(TheoremId id) { return info_for(id).name; }

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (const TheoremInfo& t : kTheorems)
    if (t.name == name) return t.id;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const TheoremInfo& t : kTheorems) v.push_back(t.id);
    return v;
  }();
  return ids;
}

bool theorem_needs_partner(TheoremId id) { return info_for(id).needs_partner; }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Violation:
      return "violation";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

BoundReport evaluate_bound(TheoremId id, const SemiHilbertContext& ctx,
                           const BAOperator& T, const BAOperator* S,
                           std::optional<AlphaParam> alpha, double tol_rel,
                           const Effort& effort, bool boosted) {
  BoundEngine engine(ctx, tol_rel, effort, boosted, 0xB42A70ULL);
  return engine.evaluate(id, T, S, alpha);
}

std::pair<double, double> minimize_over_alpha(TheoremId id,
                                              const SemiHilbertContext& ctx,
                                              const BAOperator& T) {
  BoundEngine engine(ctx, 1e-7, Effort::standard(), false, 0xB42A70ULL);
  return engine_minimize(engine, id, T);
}

double attainment_gap(const SemiHilbertContext& ctx, const BAOperator& T,
                      AlphaParam alpha) {
  return attainment_diagnostic(ctx, T, alpha).gap;
}

AttainmentDiagnostic attainment_diagnostic(const SemiHilbertContext& ctx,
                                           const BAOperator& T,
                                           AlphaParam alpha) {
  const double a = alpha.value();
  if (a <= 0.0 || a >= 1.0)
    throw AlphaOutOfRange("attainment gap requires alpha in (0,1)");
  const NumericalRangeScan scan = scan_numerical_range(T.compressed);
  const double w = scan.radius.value;
  const double nrm = spectral_norm(T.compressed);
  std::vector<ComplexVector> warm{scan.radius.witness};
  const RadiusEstimate est =
      alpha_norm(T.compressed, alpha, Effort::standard(), &warm);

  AttainmentDiagnostic diag;
  diag.gap = std::sqrt(a * w * w + (1.0 - a) * nrm * nrm) - est.value;
  if (!est.witness.empty() && T.compressed.rows() > 0) {
    const ComplexVector bz = T.compressed.apply(est.witness);
    const double along = std::abs(inner(bz, est.witness));
    diag.radius_defect = w - along;
    diag.norm_defect = nrm - norm2(bz);
    diag.shared_witness = diag.radius_defect <= 1e-6 * (1.0 + w) &&
                          diag.norm_defect <= 1e-6 * (1.0 + nrm);
  } else {
    diag.shared_witness = true;
  }
  return diag;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> a;
  for (int i = 0; i <= 10; ++i) a.push_back(i / 10.0);
  a.push_back(7.0 / 8.0);
  a.push_back(12.0 / 13.0);
  return a;
}

std::size_t CampaignReport::total_pass() const {
  std::size_t s = 0;
  for (const auto& [id, t] : tallies) s += t.pass;
  return s;
}

std::size_t CampaignReport::total_violations() const {
  std::size_t s = 0;
  for (const auto& [id, t] : tallies) s += t.violation;
  return s;
}

std::string CampaignReport::to_text() const {
  std::ostringstream out;
  out << "campaign trials=" << config.trials << " dim=" << config.dim
      << " rank_deficit=" << config.rank_deficit << " seed=" << config.seed
      << " tol_rel=" << fmt17(config.tol_rel) << "\n";
  out << "alphas:";
  for (double a : config.alphas) out << " " << fmt17(a);
  out << "\n";
  out << "theorem                    pass  violation  inconclusive\n";
  for (const auto& [id, t] : tallies) {
    char line[96];
    std::snprintf(line, sizeof(line), "%-24s %6zu %10zu %13zu\n",
                  std::string(theorem_name(id)).c_str(), t.pass, t.violation,
                  t.inconclusive);
    out << line;
  }
  out << "totals: pass=" << total_pass() << " violation=" << total_violations()
      << " trials_run=" << trials_run << "\n";
  for (const ViolationRecord& v : violations) {
    out << "VIOLATION " << theorem_name(v.theorem);
    if (v.alpha) out << " alpha=" << fmt17(*v.alpha);
    out << " trial=" << v.trial << " trial_seed=" << v.trial_seed
        << " lhs=" << fmt17(v.lhs) << " rhs=" << fmt17(v.rhs)
        << " slack=" << fmt17(v.slack) << "\n";
    out << "  A: " << v.weight_file << "\n";
    out << "  T: " << v.operand_file << "\n";
    if (!v.partner_file.empty()) out << "  S: " << v.partner_file << "\n";
  }
  for (const std::string& e : trial_errors) out << "TRIAL_ERROR " << e << "\n";
  return out.str();
}

namespace {

struct TrialOperands {
  SemiHilbertContext ctx;
  BAOperator T, S_gen, S_comm, T_sharp, S_sharp, U;
  ComplexMatrix A;
};

TrialOperands make_trial(const CampaignConfig& config,
                         std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  TrialOperands ops;
  ops.A = random_psd(config.dim, config.rank_deficit, rng.next_u64());
  ops.ctx = make_context(ops.A);
  const bool couple = config.rank_deficit > 0;
  ops.T = random_ba_operator(ops.ctx, rng.next_u64(), couple);
  ops.S_gen = random_ba_operator(ops.ctx, rng.next_u64(), couple);

  // Commuting partner: a quadratic polynomial in T commutes exactly.
  {
    const Complex c0 = rng.cnormal(), c1 = rng.cnormal(), c2 = rng.cnormal();
    const std::size_t n = config.dim;
    ComplexMatrix s = c0 * ComplexMatrix::identity(n) + c1 * ops.T.op +
                      c2 * (ops.T.op * ops.T.op);
    ops.S_comm = a_adjoint(ops.ctx, s);
  }

  // Sharp pair: on range(A) both operands are normal in a common eigenbasis,
  // with real spectrum for S. Then (T S)^{#A} = T^{#A} S exactly:
  // conj(d_T) conj(d_S) = conj(d_T) d_S entrywise.
  {
    const std::size_t k = ops.ctx.rank();
    Rng sub(rng.next_u64());
    const ComplexMatrix q = random_unitary(k, sub);
    ComplexVector dt(k);
    std::vector<double> ds(k);
    for (std::size_t i = 0; i < k; ++i) dt[i] = sub.cnormal();
    for (std::size_t i = 0; i < k; ++i) ds[i] = sub.normal();
    ComplexMatrix bt(k, k), bs(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Complex at(0), as(0);
        for (std::size_t m = 0; m < k; ++m) {
          const Complex w = q(i, m) * std::conj(q(j, m));
          at += dt[m] * w;
          as += ds[m] * w;
        }
        bt(i, j) = at;
        bs(i, j) = as;
      }
    ops.T_sharp = a_adjoint(ops.ctx, lift(ops.ctx, bt));
    ops.S_sharp = a_adjoint(ops.ctx, lift(ops.ctx, bs));
  }

  ops.U = random_a_unitary(ops.ctx, rng.next_u64());
  return ops;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
  if (config.dim == 0 || config.rank_deficit >= config.dim)
    throw DimensionMismatch("run_campaign: need 0 <= rank_deficit < dim");
  CampaignReport report;
  report.config = config;
  if (report.config.alphas.empty()) report.config.alphas = default_alpha_grid();
  for (TheoremId id : report.config.theorems) report.tallies[id];

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = Rng::mix(config.seed, trial);
    TrialOperands ops;
    try {
      ops = make_trial(report.config, trial_seed);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "trial " << trial << " (seed " << trial_seed
          << ") generation failed: " << e.what();
      report.trial_errors.push_back(msg.str());
      continue;
    }

    BoundEngine engine(ops.ctx, report.config.tol_rel, Effort::standard(),
                       /*boosted=*/false, Rng::mix(trial_seed, 0xB02AU));
    BoundEngine boosted(ops.ctx, report.config.tol_rel,
                        Effort::standard().scaled(8),
                        /*boosted=*/true, Rng::mix(trial_seed, 0xB02AU));

    auto run_one = [&](TheoremId id, const BAOperator& T, const BAOperator* S,
                       std::optional<AlphaParam> alpha) {
      TheoremTally& tally = report.tallies[id];
      try {
        BoundReport rep = engine.evaluate(id, T, S, alpha);
        if (rep.verdict == Verdict::Inconclusive) {
          ++tally.inconclusive;
          rep = boosted.evaluate(id, T, S, alpha);
        }
        if (rep.verdict == Verdict::Pass) {
          ++tally.pass;
        } else {
          ++tally.violation;
          ViolationRecord rec;
          rec.theorem = id;
          rec.alpha = rep.alpha;
          rec.lhs = rep.lhs;
          rec.rhs = rep.rhs;
          rec.slack = rep.slack;
          rec.trial = trial;
          rec.trial_seed = trial_seed;
          rec.weight_file = write_matrix_file(ops.A);
          rec.operand_file = write_matrix_file(T.op);
          if (S != nullptr) rec.partner_file = write_matrix_file(S->op);
          report.violations.push_back(std::move(rec));
        }
      } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "trial " << trial << " " << theorem_name(id);
        if (alpha) msg << " alpha=" << fmt17(alpha->value());
        msg << ": " << e.what();
        report.trial_errors.push_back(msg.str());
      }
    };

    for (TheoremId id : report.config.theorems) {
      const TheoremInfo& ti = info_for(id);
      const BAOperator* T = &ops.T;
      const BAOperator* S = nullptr;
      switch (id) {
        case TheoremId::PROD_MIN3:
          S = &ops.S_gen;
          break;
        case TheoremId::PROD_COMMUTE:
          S = &ops.S_comm;
          break;
        case TheoremId::PROD_SHARP:
          T = &ops.T_sharp;
          S = &ops.S_sharp;
          break;
        case TheoremId::UNITARY_INVARIANCE:
          S = &ops.U;
          break;
        default:
          break;
      }
      if (!ti.alpha_dependent) {
        run_one(id, *T, S, std::nullopt);
        continue;
      }
      for (double a : report.config.alphas) {
        const bool product = id == TheoremId::PROD_MIN3 ||
                             id == TheoremId::PROD_COMMUTE ||
                             id == TheoremId::PROD_SHARP;
        if (product && a == 1.0) continue;
        if (id == TheoremId::ATTAINMENT_GAP && (a == 0.0 || a == 1.0)) continue;
        run_one(id, *T, S, AlphaParam(a));
      }
    }
    ++report.trials_run;
  }
  return report;
}

}  // namespace anorm
