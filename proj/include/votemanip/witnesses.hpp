#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "votemanip/ballots.hpp"
#include "votemanip/manipulation.hpp"
#include "votemanip/ps_compare.hpp"
#include "votemanip/scoring.hpp"

namespace votemanip {

/// Machine-checkable separation claims between k-approval and k-Borda rules.
///
/// Each of the first eleven names a concrete profile family showing that one
/// rule is manipulable somewhere the other is not, pinning down one
/// non-inclusion direction of the manipulability ordering:
///
///   APPROVAL_I_NOT_GEQ_J        approval:j manipulable, approval:i robust
///   APPROVAL_J_NOT_GEQ_I_EVEN   approval:i manipulable, approval:j robust,
///                               n even, wide field (m >= 2j-1)
///   APPROVAL_J_NOT_GEQ_I_ODD    same, n odd >= 3, i >= 2, m >= 2j-1
///   APPROVAL_J_NOT_GEQ_1        same for i = 1, any field
///   APPROVAL_J_NOT_GEQ_I_SMALLM same, i >= 2, narrow field (m < 2j)
///   BORDA_I_NOT_GEQ_J_EVEN      borda:j manipulable, borda:i robust, n even
///   BORDA_I_NOT_GEQ_J_ODD       same, n odd >= 3
///   BORDA_J_NOT_GEQ_I_ODD       borda:i manipulable, borda:j robust, n odd
///                               (n = 3 only with i = 1; see the builder)
///   BORDA_J_NOT_GEQ_I_EVEN      same, n even >= 6
///   BORDA_J_NOT_GEQ_I_N4        same, n = 4
///   BORDA_FULL_NOT_GEQ_K        borda:k manipulable, borda:m-1 robust, n = 2
///
/// The last three are composite: they assemble the elementary families (or,
/// for the hierarchy, an exhaustive inclusion scan) across a parameter grid.
enum class ClaimId {
  APPROVAL_I_NOT_GEQ_J,
  APPROVAL_J_NOT_GEQ_I_EVEN,
  APPROVAL_J_NOT_GEQ_I_ODD,
  APPROVAL_J_NOT_GEQ_1,
  APPROVAL_J_NOT_GEQ_I_SMALLM,
  BORDA_I_NOT_GEQ_J_EVEN,
  BORDA_I_NOT_GEQ_J_ODD,
  BORDA_J_NOT_GEQ_I_ODD,
  BORDA_J_NOT_GEQ_I_EVEN,
  BORDA_J_NOT_GEQ_I_N4,
  BORDA_FULL_NOT_GEQ_K,
  THM_APPROVAL_INCOMPARABLE,
  THM_BORDA_INCOMPARABLE,
  BORDA_N2_HIERARCHY,
};

std::string_view to_string(ClaimId claim);
ClaimId parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();

/// Parameters of a claim instance. Every claim uses n and m; the two-rule
/// families use i < j, the full-Borda families use k.
struct WitnessParams {
  int n = 0;
  int m = 0;
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const WitnessParams&, const WitnessParams&) = default;
};

/// A constructed counterexample: the profile is expected to be manipulable
/// under manip_rule and immune under robust_rule.
struct WitnessCase {
  ClaimId claim;
  WitnessParams params;
  Profile profile;
  RuleSpec manip_rule;
  RuleSpec robust_rule;
};

/// True when `params` satisfies every stated precondition of `claim`;
/// otherwise carries the first violated bound.
struct PreconditionCheck {
  bool ok;
  std::string violation;
};

PreconditionCheck check_preconditions(ClaimId claim, const WitnessParams& params);

/// Builds the counterexample profile for an elementary claim. Throws
/// std::invalid_argument naming the violated bound when preconditions fail,
/// and for the composite claims, which have no single profile.
///
/// One family (APPROVAL_J_NOT_GEQ_I_SMALLM with m < i+j) leaves part of each
/// type-1 ballot unconstrained. By default that block is filled in ascending
/// id order; with `any_order_seed` set it is shuffled per voter so the claim
/// can be re-checked under arbitrary fills.
WitnessCase build_witness(ClaimId claim, const WitnessParams& params,
                          std::optional<std::uint64_t> any_order_seed = {});

struct VerifyWitnessOptions {
  /// Confirm the robust side with the brute-force oracle as well.
  bool brute_force_robust = false;
};

/// What verify_witness saw: the manipulation found under manip_rule, the
/// (hopefully absent) manipulation under robust_rule, and both sincere score
/// tables for auditing.
struct WitnessVerification {
  bool passed = false;
  std::optional<ManipulationWitness> manip_witness;
  std::optional<ManipulationWitness> robust_witness;
  ScoreTable manip_scores;
  ScoreTable robust_scores;
  std::string failure;
};

/// Checks that the case's profile is manipulable under manip_rule and not
/// under robust_rule (normal-form test; optionally also brute force on the
/// robust side).
WitnessVerification verify_witness(const WitnessCase& c,
                                   const VerifyWitnessOptions& options = {});

/// Inclusive integer range for grid verification.
struct GridRange {
  int lo = 0;
  int hi = 0;

  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Requested parameter grid. n and m are required; i, j, k default to every
/// structurally valid value (1 <= i < j <= m-1, or 1 <= k <= m-2).
struct ClaimGrid {
  GridRange n;
  GridRange m;
  std::optional<GridRange> i;
  std::optional<GridRange> j;
  std::optional<GridRange> k;
};

enum class TupleStatus { Pass, Fail, Uncovered };

struct TupleResult {
  WitnessParams params;
  TupleStatus status = TupleStatus::Fail;
  std::string detail;
};

struct VerifyClaimOptions {
  std::uint64_t seed = 12345;
  /// Extra rebuilds with shuffled "any order" blocks; all must pass.
  int any_order_reruns = 10;
  /// Brute-force the robust side for fields up to this size.
  int brute_force_max_m = 5;
  std::uint64_t budget = kDefaultProfileBudget;
  int threads = 1;
};

/// Grid verdict. `results` lists one entry per tuple that was attempted
/// (passing, failing, or uncovered by any family); tuples in the grid that
/// miss the claim's preconditions are only counted.
struct ClaimSummary {
  ClaimId claim;
  std::vector<TupleResult> results;
  int passed = 0;
  int failed = 0;
  int uncovered = 0;
  int skipped = 0;

  bool ok() const { return failed == 0; }
};

/// Runs a claim over every tuple in the grid. Elementary claims build and
/// verify their profile family; THM_* claims verify both non-inclusion
/// directions with whichever families cover the tuple; BORDA_N2_HIERARCHY
/// checks the inclusion "borda:k manipulable implies borda:k+1 manipulable"
/// exhaustively at n = 2.
ClaimSummary verify_claim(ClaimId claim, const ClaimGrid& grid,
                          const VerifyClaimOptions& options = {});

}  // namespace votemanip
