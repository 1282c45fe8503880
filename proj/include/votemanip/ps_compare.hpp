#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "votemanip/ballots.hpp"
#include "votemanip/scoring.hpp"

namespace votemanip {

/// Default cap on the number of profiles a single exhaustive scan may visit.
inline constexpr std::uint64_t kDefaultProfileBudget = 10'000'000;

/// How two rules f and g relate under the manipulability ordering:
/// f covers g when every profile on which g is manipulable also has f
/// manipulable. Strictness needs a one-sided counterexample.
enum class Relation { Equivalent, FStrictlyMore, GStrictlyMore, Incomparable };

std::string_view to_string(Relation r);

/// Raised when a requested scan would visit more profiles than the budget
/// allows; carries the exact count so callers can report it.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t profiles, std::uint64_t budget);

  std::uint64_t profiles() const { return profiles_; }
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t profiles_;
  std::uint64_t budget_;
};

struct CompareOptions {
  std::uint64_t budget = kDefaultProfileBudget;
  int threads = 1;
  /// Scan anonymous profiles (the default) or every ordered ballot tuple.
  /// Both modes decide the same relation; the tuple scan exists as an
  /// independent check and for exploration.
  bool anonymize = true;
  /// Stop as soon as the relation is decided. Witnesses stay canonical
  /// (earliest in enumeration order) but the tallies are skipped.
  bool fast = false;
};

struct ComparisonCounts {
  std::uint64_t profiles_scanned = 0;
  std::uint64_t manipulable_f = 0;
  std::uint64_t manipulable_g = 0;
  std::uint64_t manipulable_both = 0;

  friend bool operator==(const ComparisonCounts&,
                         const ComparisonCounts&) = default;
};

/// Outcome of one exhaustive comparison. witness_g_not_f is the first
/// profile in canonical order manipulable under g but not f (refuting
/// "f covers g"); witness_f_not_g mirrors it. Counts are present unless the
/// scan ran in fast mode.
struct ComparisonReport {
  RuleSpec f;
  RuleSpec g;
  int n = 0;
  int m = 0;
  Relation relation = Relation::Equivalent;
  std::optional<AnonymousProfile> witness_g_not_f;
  std::optional<AnonymousProfile> witness_f_not_g;
  std::optional<ComparisonCounts> counts;
};

/// Scans every profile with n voters over m candidates and classifies the
/// pair. Deterministic for fixed inputs regardless of thread count.
ComparisonReport compare_exhaustive(const RuleSpec& f, const RuleSpec& g,
                                    int n, int m,
                                    const CompareOptions& options = {});

/// First profile (canonical order) manipulable under g but not under f, or
/// nothing when "g manipulable implies f manipulable" holds exhaustively.
std::optional<AnonymousProfile> check_inclusion(const RuleSpec& f,
                                                const RuleSpec& g, int n,
                                                int m,
                                                const CompareOptions& options = {});

}  // namespace votemanip
