#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anorm/seminorms.hpp"

namespace anorm {

/// One entry per theorem-level statement of the alpha-seminorm family.
enum class TheoremId {
  EQUIV_W,
  EQUIV_NORM,
  LOWER_MAX4,
  PROD_MIN3,
  PROD_COMMUTE,
  PROD_SHARP,
  CARTESIAN_LOWER,
  CARTESIAN_UPPER,
  WA_MIN_ALPHA_CARTESIAN,
  BUZANO,
  WA2_HALF,
  WA_MIN_ALPHA_SQUARE,
  FINAL_UPPER,
  WA_MIN_ALPHA_FINAL,
  ATTAINMENT_GAP,
  UNITARY_INVARIANCE,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);
const std::vector<TheoremId>& all_theorems();

/// Whether a theorem needs a second operand, and what kind.
bool theorem_needs_partner(TheoremId id);

enum class Verdict { Pass, Violation, Inconclusive };
std::string_view verdict_name(Verdict v);

/// One inequality evaluation. `slack` is rhs - lhs for <=-type statements
/// and -(|lhs - rhs|) for the equality-type invariance check, so a pass is
/// always slack >= -tol * (1 + |rhs|).
struct BoundReport {
  TheoremId theorem = TheoremId::EQUIV_W;
  std::optional<double> alpha;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  Verdict verdict = Verdict::Pass;
  std::string direction_note;
  EffortStats effort;
};

/// Evaluates one theorem on the given operands at the given effort level.
/// At standard effort a raw violation is reported as Inconclusive (pending
/// the 8x re-run the campaign performs); at boosted effort it becomes a
/// Violation. S is required for the product theorems and must be the
/// A-unitary for UNITARY_INVARIANCE; alpha is required except for BUZANO
/// and UNITARY_INVARIANCE (which defaults to 1/2).
BoundReport evaluate_bound(TheoremId id, const SemiHilbertContext& ctx,
                           const BAOperator& T, const BAOperator* S = nullptr,
                           std::optional<AlphaParam> alpha = std::nullopt,
                           double tol_rel = 1e-7,
                           const Effort& effort = Effort::standard(),
                           bool boosted = false);

/// Golden-section minimization of the right-hand side over alpha in [0, 1]
/// for the three min-over-alpha statements, bracketed by an 11-point coarse
/// grid with a fine-grid fallback guard. Returns (alpha_star, value).
std::pair<double, double> minimize_over_alpha(TheoremId id,
                                              const SemiHilbertContext& ctx,
                                              const BAOperator& T);

/// sqrt(alpha w_A^2 + (1 - alpha) ||T||_A^2) - ||T||_{A alpha};
/// nonnegative up to optimizer tolerance, zero exactly in the equality case.
double attainment_gap(const SemiHilbertContext& ctx, const BAOperator& T,
                      AlphaParam alpha);

struct AttainmentDiagnostic {
  double gap = 0.0;
  /// True when the alpha-seminorm witness simultaneously attains w_A and
  /// ||T||_A within diagnostic tolerance.
  bool shared_witness = false;
  double radius_defect = 0.0;  // w_A - |<B z*, z*>|
  double norm_defect = 0.0;    // ||T||_A - ||B z*||
};
AttainmentDiagnostic attainment_diagnostic(const SemiHilbertContext& ctx,
                                           const BAOperator& T,
                                           AlphaParam alpha);

/// Randomized verification campaign description.
struct CampaignConfig {
  std::size_t trials = 100;
  std::size_t dim = 3;
  std::size_t rank_deficit = 0;
  std::uint64_t seed = 0;
  std::vector<TheoremId> theorems = all_theorems();
  std::vector<double> alphas;  // empty -> default_alpha_grid()
  double tol_rel = 1e-7;
};

/// {0, 0.1, ..., 1.0} plus the exhibited points 7/8 and 12/13.
std::vector<double> default_alpha_grid();

struct ViolationRecord {
  TheoremId theorem;
  std::optional<double> alpha;
  double lhs, rhs, slack;
  std::size_t trial;
  std::uint64_t trial_seed;
  std::string weight_file;    // MatrixFile text of A
  std::string operand_file;   // MatrixFile text of T
  std::string partner_file;   // MatrixFile text of S when applicable
};

struct TheoremTally {
  std::size_t pass = 0;
  std::size_t violation = 0;
  std::size_t inconclusive = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::map<TheoremId, TheoremTally> tallies;
  std::vector<ViolationRecord> violations;
  std::vector<std::string> trial_errors;
  std::size_t trials_run = 0;

  std::size_t total_pass() const;
  std::size_t total_violations() const;
  bool clean() const { return violations.empty() && trial_errors.empty(); }
  /// Deterministic text rendering (identical bytes for identical configs).
  std::string to_text() const;
};

/// Runs the campaign: per trial, generates A with the requested rank
/// deficit, a B_A(H) operator T, the partner operands each conditional
/// theorem needs (a commuting polynomial in T, a compressed-algebra sharp
/// pair, a random A-unitary), evaluates every requested theorem at every
/// requested alpha, and re-runs near-violations at 8x effort before
/// classifying them. Per-trial errors are recorded, never thrown.
CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace anorm
