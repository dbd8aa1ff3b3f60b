// anorm: seminorm computations for operators on semi-Hilbertian spaces.
//
// Subcommands: compute, sweep, check, repro. Exit codes are a stable
// contract: 0 success, 1 verification mismatch or campaign violation,
// 2 parse failure, 3 mathematical precondition failure, 4 I/O failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anorm/inequalities.hpp"
#include "anorm/matrix_io.hpp"
#include "anorm/repro.hpp"

namespace {

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

int run_compute(const std::string& a_path, const std::string& t_path,
                double alpha_value, double tol) {
  const anorm::ComplexMatrix A = anorm::load_matrix(a_path);
  const anorm::ComplexMatrix T = anorm::load_matrix(t_path);
  if (A.rows() != T.rows())
    throw anorm::DimensionMismatch("A and T have different dimensions");
  const anorm::AlphaParam alpha(alpha_value);
  const anorm::SemiHilbertContext ctx = anorm::make_context(A, tol);
  const anorm::BAOperator op = anorm::a_adjoint(ctx, T);

  const double nrm = anorm::spectral_norm(op.compressed);
  const double mmod = anorm::smallest_singular_value(op.compressed);
  const anorm::NumericalRangeScan scan =
      anorm::scan_numerical_range(op.compressed);
  std::vector<anorm::ComplexVector> warm{scan.radius.witness};
  const anorm::RadiusEstimate alpha_est =
      anorm::alpha_norm(op.compressed, alpha, anorm::Effort::standard(), &warm);

  std::cout << "a_operator_norm      " << fixed12(nrm) << "\n";
  std::cout << "a_min_modulus        " << fixed12(mmod) << "\n";
  std::cout << "a_numerical_radius   " << fixed12(scan.radius.value) << "\n";
  std::cout << "a_crawford           " << fixed12(scan.crawford.value) << "\n";
  std::cout << "alpha_seminorm       " << fixed12(alpha_est.value)
            << "  (alpha = " << alpha_value << ")\n";
  char resid[64];
  std::snprintf(resid, sizeof(resid), "%.17g", op.membership_residual);
  std::cout << "membership_residual  " << resid << "\n";
  std::cout << "t_adjoint            " << anorm::write_matrix_file(op.adjoint)
            << "\n";
  return 0;
}

int run_sweep(const std::string& a_path, const std::string& t_path,
              double from, double to, double step, const std::string& out_path) {
  if (!(from >= 0.0 && from < to && to <= 1.0 && step > 0.0))
    throw anorm::AlphaOutOfRange("sweep requires 0 <= from < to <= 1, step > 0");
  const anorm::ComplexMatrix A = anorm::load_matrix(a_path);
  const anorm::ComplexMatrix T = anorm::load_matrix(t_path);
  if (A.rows() != T.rows())
    throw anorm::DimensionMismatch("A and T have different dimensions");
  const anorm::SemiHilbertContext ctx = anorm::make_context(A);
  const anorm::BAOperator op = anorm::a_adjoint(ctx, T);

  std::ofstream out(out_path);
  if (!out) throw anorm::IoError("cannot open " + out_path + " for writing");
  out << "alpha,alpha_seminorm,envelope,a_op_norm,a_num_radius,"
         "cartesian_upper,wa2_half,final_upper,lower_max4\n";

  const double nrm = anorm::spectral_norm(op.compressed);
  const anorm::NumericalRangeScan scan =
      anorm::scan_numerical_range(op.compressed);
  const double w = scan.radius.value;

  for (int i = 0;; ++i) {
    double a = from + i * step;
    if (a > to + 1e-12) break;
    if (std::abs(a - to) <= 1e-12) a = to;
    const anorm::AlphaParam alpha(a);

    std::vector<anorm::ComplexVector> warm{scan.radius.witness};
    const double alpha_norm_val =
        anorm::alpha_norm(op.compressed, alpha, anorm::Effort::standard(), &warm)
            .value;
    const double envelope =
        std::sqrt(a * w * w + (1.0 - a) * nrm * nrm);
    const double cart = anorm::evaluate_bound(anorm::TheoremId::CARTESIAN_UPPER,
                                              ctx, op, nullptr, alpha)
                            .rhs;
    const double wa2 =
        anorm::evaluate_bound(anorm::TheoremId::WA2_HALF, ctx, op, nullptr, alpha)
            .rhs;
    const double fin = anorm::evaluate_bound(anorm::TheoremId::FINAL_UPPER, ctx,
                                             op, nullptr, alpha)
                           .rhs;
    const double low = anorm::evaluate_bound(anorm::TheoremId::LOWER_MAX4, ctx,
                                             op, nullptr, alpha)
                           .lhs;
    out << fixed12(a) << "," << fixed12(alpha_norm_val) << ","
        << fixed12(envelope) << "," << fixed12(nrm) << "," << fixed12(w) << ","
        << fixed12(cart) << "," << fixed12(wa2) << "," << fixed12(fin) << ","
        << fixed12(low) << "\n";
    if (a == to) break;
  }
  if (!out) throw anorm::IoError("write failed: " + out_path);
  return 0;
}

int run_check(std::size_t trials, std::size_t dim, std::size_t rank_deficit,
              std::uint64_t seed, const std::string& theorems, double tol) {
  anorm::CampaignConfig config;
  config.trials = trials;
  config.dim = dim;
  config.rank_deficit = rank_deficit;
  config.seed = seed;
  config.tol_rel = tol;
  if (!theorems.empty()) {
    config.theorems.clear();
    std::stringstream ss(theorems);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto id = anorm::theorem_from_name(name);
      if (!id) throw anorm::ParseError("unknown theorem name: " + name);
      config.theorems.push_back(*id);
    }
  }
  const anorm::CampaignReport report = anorm::run_campaign(config);
  std::cout << report.to_text();
  return report.clean() ? 0 : 1;
}

int run_repro() {
  const std::vector<anorm::ReproRow> rows = anorm::reproduction_rows();
  std::cout << "reproduction of the worked 3x3 example\n";
  for (const anorm::ReproRow& r : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-28s computed %s expected %s  %s\n",
                  r.label.c_str(), fixed12(r.computed).c_str(),
                  fixed12(r.expected).c_str(),
                  r.matched ? "ok" : "MISMATCH");
    std::cout << line;
  }
  return anorm::all_matched(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A-seminorm family computations on semi-Hilbertian spaces"};
  app.require_subcommand(1);

  std::string a_path, t_path, out_path, theorems;
  double alpha = 0.5, tol = anorm::kDefaultMembershipTol;
  double from = 0.0, to = 1.0, step = 0.1;
  std::size_t trials = 100, dim = 3, rank_deficit = 0;
  std::uint64_t seed = 0;
  double check_tol = 1e-7;

  CLI::App* compute = app.add_subcommand(
      "compute", "seminorms, adjoint and membership data for one operator");
  compute->add_option("--A", a_path, "weight matrix file")->required();
  compute->add_option("--T", t_path, "operator matrix file")->required();
  compute->add_option("--alpha", alpha, "alpha in [0,1]")->required();
  compute->add_option("--tol", tol, "membership tolerance");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV of seminorm and bound values over an alpha grid");
  sweep->add_option("--A", a_path, "weight matrix file")->required();
  sweep->add_option("--T", t_path, "operator matrix file")->required();
  sweep->add_option("--from", from, "first alpha")->required();
  sweep->add_option("--to", to, "last alpha")->required();
  sweep->add_option("--step", step, "alpha increment")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* check = app.add_subcommand(
      "check", "randomized verification campaign over all theorems");
  check->add_option("--trials", trials, "number of trials")->required();
  check->add_option("--dim", dim, "ambient dimension")->required();
  check->add_option("--rank-deficit", rank_deficit,
                    "zero eigenvalues forced into A");
  check->add_option("--seed", seed, "campaign seed");
  check->add_option("--theorems", theorems, "comma-separated theorem names");
  check->add_option("--tol", check_tol, "relative slack tolerance");

  app.add_subcommand("repro", "reproduce the worked numerical example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(a_path, t_path, alpha, tol);
    if (sweep->parsed())
      return run_sweep(a_path, t_path, from, to, step, out_path);
    if (check->parsed())
      return run_check(trials, dim, rank_deficit, seed, theorems, check_tol);
    return run_repro();
  } catch (const anorm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const anorm::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const anorm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 4;
  }
}
