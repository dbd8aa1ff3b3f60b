#include <doctest.h>

#include <cmath>

#include "anorm/inequalities.hpp"
#include "anorm/repro.hpp"

using namespace anorm;

namespace {

const ComplexMatrix kT = example_operator();
const ComplexMatrix kA = example_weight();

// Independent 1-D oracle for the worked example: on the diagonal pair the
// combination norms have closed forms, so the minimum can be brute-forced
// without touching the library's compression or eigensolver.
double grid_min_cartesian() {
  double best = 1e300;
  for (int i = 0; i <= 1000000; ++i) {
    const double a = i * 1e-6;
    best = std::min(best, std::max({4.0 - 2.0 * a, 2.0 + a, a}));
  }
  return best;
}

double grid_min_final() {
  double best = 1e300;
  for (int i = 0; i <= 1000000; ++i) {
    const double a = i * 1e-6;
    best = std::min(best, std::max({4.0 * a, 4.0 - 2.0 * a, 2.0 - 2.0 * a}));
  }
  return best;
}

double grid_min_square() {
  const double w2 = std::sqrt(2.0);
  double best = 1e300;
  for (int i = 0; i <= 1000000; ++i) {
    const double a = i * 1e-6;
    best = std::min(best, 0.5 * a * w2 + std::max({4.0 - 3.0 * a,
                                                   2.0 - 0.5 * a, 0.5 * a}));
  }
  return best;
}

}  // namespace

TEST_CASE("evaluate_bound: worked example constants") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, kT);

  const BoundReport cart = evaluate_bound(TheoremId::CARTESIAN_UPPER, ctx, T,
                                          nullptr, AlphaParam(7.0 / 8.0));
  CHECK(cart.rhs == doctest::Approx(23.0 / 8.0).epsilon(1e-11));
  CHECK(cart.verdict == Verdict::Pass);

  const BoundReport baseline = evaluate_bound(TheoremId::CARTESIAN_UPPER, ctx,
                                              T, nullptr, AlphaParam(1.0));
  CHECK(baseline.rhs == doctest::Approx(3.0).epsilon(1e-11));

  const BoundReport sq = evaluate_bound(TheoremId::WA2_HALF, ctx, T, nullptr,
                                        AlphaParam(12.0 / 13.0));
  CHECK(sq.rhs ==
        doctest::Approx((6.0 * std::sqrt(2.0) + 20.0) / 13.0).epsilon(1e-11));

  const BoundReport sq1 =
      evaluate_bound(TheoremId::WA2_HALF, ctx, T, nullptr, AlphaParam(1.0));
  CHECK(sq1.rhs ==
        doctest::Approx((3.0 + std::sqrt(2.0)) / 2.0).epsilon(1e-11));
}

TEST_CASE("evaluate_bound: definitional endpoint EQUIV_W at alpha = 1") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, kT);
  const BoundReport rep =
      evaluate_bound(TheoremId::EQUIV_W, ctx, T, nullptr, AlphaParam(1.0));
  CHECK(std::abs(rep.slack) <= 1e-10);
  CHECK(rep.verdict == Verdict::Pass);
}

TEST_CASE("evaluate_bound: all theorems pass on the worked example") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, kT);
  const BAOperator U = random_a_unitary(ctx, 17);
  for (double a : default_alpha_grid()) {
    for (TheoremId id : all_theorems()) {
      if ((id == TheoremId::PROD_MIN3 || id == TheoremId::PROD_COMMUTE ||
           id == TheoremId::PROD_SHARP))
        continue;  // covered by the campaign with proper hypothesis pairs
      if (id == TheoremId::ATTAINMENT_GAP && (a == 0.0 || a == 1.0)) continue;
      const BAOperator* partner =
          id == TheoremId::UNITARY_INVARIANCE ? &U : nullptr;
      const BoundReport rep =
          evaluate_bound(id, ctx, T, partner, AlphaParam(a));
      INFO(theorem_name(id), " alpha=", a, " slack=", rep.slack);
      CHECK(rep.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("evaluate_bound: PROD_MIN3 on a random pair") {
  const ComplexMatrix A = random_psd(3, 0, 23);
  const auto ctx = make_context(A);
  const BAOperator T = random_ba_operator(ctx, 24, false);
  const BAOperator S = random_ba_operator(ctx, 25, false);
  for (double a : {0.0, 0.5, 0.9}) {
    const BoundReport rep =
        evaluate_bound(TheoremId::PROD_MIN3, ctx, T, &S, AlphaParam(a));
    CHECK(rep.verdict == Verdict::Pass);
  }
}

TEST_CASE("evaluate_bound: precondition and alpha errors") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, kT);
  const BAOperator S = random_ba_operator(ctx, 31, false);

  CHECK_THROWS_AS(evaluate_bound(TheoremId::PROD_MIN3, ctx, T, &S,
                                 AlphaParam(1.0)),
                  AlphaOutOfRange);
  CHECK_THROWS_AS(evaluate_bound(TheoremId::PROD_MIN3, ctx, T, nullptr,
                                 AlphaParam(0.5)),
                  PreconditionUnmet);
  // A generic random pair does not commute.
  CHECK_THROWS_AS(evaluate_bound(TheoremId::PROD_COMMUTE, ctx, T, &S,
                                 AlphaParam(0.5)),
                  PreconditionUnmet);
  CHECK_THROWS_AS(evaluate_bound(TheoremId::PROD_SHARP, ctx, T, &S,
                                 AlphaParam(0.5)),
                  PreconditionUnmet);
  CHECK_THROWS_AS(evaluate_bound(TheoremId::UNITARY_INVARIANCE, ctx, T, &S,
                                 AlphaParam(0.5)),
                  PreconditionUnmet);
  CHECK_THROWS_AS(evaluate_bound(TheoremId::ATTAINMENT_GAP, ctx, T, nullptr,
                                 AlphaParam(0.0)),
                  AlphaOutOfRange);
  CHECK_THROWS_AS(evaluate_bound(TheoremId::EQUIV_W, ctx, T, nullptr,
                                 std::nullopt),
                  AlphaOutOfRange);
}

TEST_CASE("evaluate_bound: BUZANO configurations") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, kT);
  const BoundReport rep = evaluate_bound(TheoremId::BUZANO, ctx, T);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.lhs <= rep.rhs + 1e-10);
}

TEST_CASE("BUZANO at vector level on 100 random triples") {
  const ComplexMatrix A = random_psd(4, 1, 41);
  const auto ctx = make_context(A);
  Rng rng(42);
  int checked = 0;
  while (checked < 100) {
    ComplexVector a(4), b(4), e(4);
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = rng.cnormal();
      b[i] = rng.cnormal();
      e[i] = rng.cnormal();
    }
    const double ne = a_norm_vec(ctx, e);
    if (ne < 1e-6) continue;
    for (Complex& c : e) c /= ne;
    const double lhs = std::abs(a_inner(ctx, a, e) * a_inner(ctx, e, b));
    const double rhs = 0.5 * (std::abs(a_inner(ctx, a, b)) +
                              a_norm_vec(ctx, a) * a_norm_vec(ctx, b));
    CHECK(lhs <= rhs + 1e-10);
    ++checked;
  }
}

TEST_CASE("minimize_over_alpha: worked example against the grid oracle") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, kT);

  const auto [ac, vc] = minimize_over_alpha(TheoremId::WA_MIN_ALPHA_CARTESIAN,
                                            ctx, T);
  CHECK(vc == doctest::Approx(grid_min_cartesian()).epsilon(1e-9));
  CHECK(vc == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
  CHECK(ac == doctest::Approx(2.0 / 3.0).epsilon(1e-6));

  const auto [af, vf] =
      minimize_over_alpha(TheoremId::WA_MIN_ALPHA_FINAL, ctx, T);
  CHECK(vf == doctest::Approx(grid_min_final()).epsilon(1e-9));
  CHECK(af == doctest::Approx(2.0 / 3.0).epsilon(1e-6));

  const auto [as, vs] =
      minimize_over_alpha(TheoremId::WA_MIN_ALPHA_SQUARE, ctx, T);
  CHECK(vs == doctest::Approx(grid_min_square()).epsilon(1e-9));
  CHECK(as == doctest::Approx(0.8).epsilon(1e-6));

  CHECK_THROWS_AS(minimize_over_alpha(TheoremId::EQUIV_W, ctx, T), Error);
}

TEST_CASE("minimize_over_alpha: constant objective on the identity") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, ComplexMatrix::identity(3));
  for (TheoremId id : {TheoremId::WA_MIN_ALPHA_CARTESIAN,
                       TheoremId::WA_MIN_ALPHA_SQUARE,
                       TheoremId::WA_MIN_ALPHA_FINAL}) {
    const auto [astar, value] = minimize_over_alpha(id, ctx, T);
    CHECK(astar >= 0.0);
    CHECK(astar <= 1.0);
    const double expected = id == TheoremId::WA_MIN_ALPHA_SQUARE ? 1.0 : 1.0;
    CHECK(value == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("minimize_over_alpha: improvement and grid consistency") {
  for (std::uint64_t seed : {51u, 52u, 53u}) {
    const ComplexMatrix A = random_psd(4, seed % 2, seed);
    const auto ctx = make_context(A);
    const BAOperator T = random_ba_operator(ctx, seed + 6, true);
    const ComplexMatrix btb = T.compressed.adjoint() * T.compressed;
    const ComplexMatrix bbt = T.compressed * T.compressed.adjoint();
    const double w = numerical_radius(T.compressed).value;
    const double half_sym = 0.5 * lambda_max(btb + bbt);

    const auto [ac, vc] =
        minimize_over_alpha(TheoremId::WA_MIN_ALPHA_CARTESIAN, ctx, T);
    CHECK(vc <= half_sym + 1e-7 * (1.0 + half_sym));
    CHECK(vc >= w * w - 1e-7 * (1.0 + w * w));
    // consistency with an 11-point grid of the same objective
    double grid_min = 1e300;
    for (int i = 0; i <= 10; ++i) {
      const double a = i / 10.0;
      grid_min = std::min(
          grid_min, lambda_max(0.5 * a * (btb + bbt) + (1.0 - a) * btb));
    }
    CHECK(vc <= grid_min + 1e-8 * (1.0 + grid_min));

    const double w2 = numerical_radius(T.compressed * T.compressed).value;
    const auto [as, vsq] =
        minimize_over_alpha(TheoremId::WA_MIN_ALPHA_SQUARE, ctx, T);
    CHECK(vsq <= 0.5 * w2 + 0.25 * lambda_max(btb + bbt) + 1e-7);
    CHECK(vsq >= w * w - 1e-7 * (1.0 + w * w));

    const auto [af, vf] =
        minimize_over_alpha(TheoremId::WA_MIN_ALPHA_FINAL, ctx, T);
    CHECK(vf >= w * w - 1e-7 * (1.0 + w * w));
  }
}

TEST_CASE("strict improvement margins on the worked example") {
  const auto ctx = make_context(kA);
  const BAOperator T = a_adjoint(ctx, kT);
  const auto [ac, vc] =
      minimize_over_alpha(TheoremId::WA_MIN_ALPHA_CARTESIAN, ctx, T);
  CHECK(3.0 - vc > 1e-6);
  const auto [as, vs] =
      minimize_over_alpha(TheoremId::WA_MIN_ALPHA_SQUARE, ctx, T);
  CHECK((3.0 + std::sqrt(2.0)) / 2.0 - vs > 1e-6);
}

TEST_CASE("LOWER_MAX4: every branch individually bounded") {
  for (std::uint64_t seed : {61u, 62u}) {
    const ComplexMatrix A = random_psd(4, 1, seed);
    const auto ctx = make_context(A);
    const BAOperator T = random_ba_operator(ctx, seed + 2, true);
    const double w = numerical_radius(T.compressed).value;
    const double c = crawford_number(T.compressed).value;
    const double cg = std::max(
        0.0, lambda_min(T.compressed.adjoint() * T.compressed));
    const double nrm = spectral_norm(T.compressed);
    for (double a : {0.2, 0.5, 0.8}) {
      const double est = alpha_norm(T.compressed, AlphaParam(a)).value;
      const double cap = est * est + 1e-7 * (1.0 + est * est);
      const double root = 2.0 * std::sqrt(a * (1.0 - a));
      CHECK(a * w * w + (1.0 - a) * cg <= cap);
      CHECK(a * c * c + (1.0 - a) * nrm * nrm <= cap);
      CHECK(root * w * std::sqrt(cg) <= cap);
      CHECK(root * c * nrm <= cap);
    }
  }
}

TEST_CASE("commuting and sharp product radius lemmas") {
  const ComplexMatrix A = random_psd(4, 1, 71);
  const auto ctx = make_context(A);
  const BAOperator T = random_ba_operator(ctx, 72, false);

  // Commuting pair: polynomial in T.
  Rng rng(73);
  const Complex c0 = rng.cnormal(), c1 = rng.cnormal(), c2 = rng.cnormal();
  const ComplexMatrix smat = c0 * ComplexMatrix::identity(4) + c1 * T.op +
                             c2 * (T.op * T.op);
  const BAOperator S = a_adjoint(ctx, smat);
  const double wt = numerical_radius(T.compressed).value;
  const double ws = numerical_radius(S.compressed).value;
  const double wts = numerical_radius(compress(ctx, T.op * S.op)).value;
  CHECK(wts <= 2.0 * wt * ws + 1e-7 * (1.0 + wt * ws));

  // Sharp pair: commuting normal family on range(A), S with real spectrum.
  Rng rng2(74);
  const std::size_t k = ctx.rank();
  const ComplexMatrix q = random_unitary(k, rng2);
  ComplexMatrix bt(k, k), bs(k, k);
  ComplexVector dt(k);
  std::vector<double> ds(k);
  for (std::size_t i = 0; i < k; ++i) dt[i] = rng2.cnormal();
  for (std::size_t i = 0; i < k; ++i) ds[i] = rng2.normal();
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
  const BAOperator Tn = a_adjoint(ctx, lift(ctx, bt));
  const BAOperator Sn = a_adjoint(ctx, lift(ctx, bs));
  const BAOperator TSn = a_adjoint(ctx, Tn.op * Sn.op);
  CHECK(spectral_norm(TSn.adjoint - Tn.adjoint * Sn.op) <= 1e-9);
  const double wtn = numerical_radius(Tn.compressed).value;
  const double nsn = spectral_norm(Sn.compressed);
  CHECK(numerical_radius(TSn.compressed).value <=
        wtn * nsn + 1e-7 * (1.0 + wtn * nsn));
}

TEST_CASE("attainment_gap: frozen cases and diagnostics") {
  const auto id = make_context(ComplexMatrix::identity(2));
  const BAOperator D = a_adjoint(id, ComplexMatrix::diagonal({2.0, 1.0}));
  const double gap = attainment_gap(id, D, AlphaParam(0.5));
  CHECK(std::abs(gap) <= 1e-9);
  const AttainmentDiagnostic diag = attainment_diagnostic(id, D, AlphaParam(0.5));
  CHECK(diag.shared_witness);

  const auto ctx = make_context(kA);
  const BAOperator I3 = a_adjoint(ctx, ComplexMatrix::identity(3));
  for (double a : {0.25, 0.5, 0.75})
    CHECK(std::abs(attainment_gap(ctx, I3, AlphaParam(a))) <= 1e-9);

  const BAOperator T = a_adjoint(ctx, kT);
  const double g1 = attainment_gap(ctx, T, AlphaParam(0.5));
  const double g2 = attainment_gap(ctx, T, AlphaParam(0.5));
  CHECK(g1 >= -1e-7);
  CHECK(g1 == g2);  // deterministic
  CHECK_THROWS_AS(attainment_gap(ctx, T, AlphaParam(1.0)), AlphaOutOfRange);
}

TEST_CASE("run_campaign: clean, deterministic, trivial configs") {
  CampaignConfig config;
  config.trials = 10;
  config.dim = 2;
  config.rank_deficit = 0;
  config.seed = 1;
  config.alphas = {0.0, 0.25, 0.5, 0.75, 1.0};
  const CampaignReport r1 = run_campaign(config);
  CHECK(r1.clean());
  CHECK(r1.trials_run == 10);
  CHECK(r1.total_violations() == 0);
  const CampaignReport r2 = run_campaign(config);
  CHECK(r1.to_text() == r2.to_text());

  CampaignConfig empty = config;
  empty.trials = 0;
  const CampaignReport r0 = run_campaign(empty);
  CHECK(r0.clean());
  CHECK(r0.trials_run == 0);
  CHECK(r0.total_pass() == 0);

  CampaignConfig bad = config;
  bad.rank_deficit = 2;
  CHECK_THROWS_AS(run_campaign(bad), DimensionMismatch);
}

TEST_CASE("run_campaign: rank-deficient weights") {
  CampaignConfig config;
  config.trials = 5;
  config.dim = 3;
  config.rank_deficit = 1;
  config.seed = 9;
  config.alphas = {0.0, 0.5, 7.0 / 8.0, 1.0};
  const CampaignReport r = run_campaign(config);
  CHECK(r.clean());
}
