#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "votemanip/ballots.hpp"

namespace votemanip {

enum class RuleFamily { Approval, Borda };

std::string_view to_string(RuleFamily family);

/// A positional scoring rule: k-approval or k-Borda.
///
/// k-approval awards one point to each of a voter's top k candidates.
/// k-Borda awards k-t+1 points to the candidate ranked t-th for t <= k and
/// nothing below. Both require 1 <= k <= m-1, so the scoring vector is never
/// constant; k = m is rejected when the rule is applied to a profile.
struct RuleSpec {
  RuleFamily family;
  int k;

  static RuleSpec approval(int k) { return {RuleFamily::Approval, k}; }
  static RuleSpec borda(int k) { return {RuleFamily::Borda, k}; }

  /// Textual form, e.g. "approval:2" or "borda:3".
  std::string to_string() const;

  /// Parses "approval:<k>" / "borda:<k>". The alias "borda:m-1" resolves
  /// against `m` and is rejected when no candidate count is supplied.
  static RuleSpec parse(std::string_view text, std::optional<int> m = {});

  friend bool operator==(const RuleSpec&, const RuleSpec&) = default;
};

/// Per-position point values s_1 >= s_2 >= ... >= s_m >= 0, not all equal.
class ScoringVector {
public:
  explicit ScoringVector(std::vector<long long> points);

  int num_positions() const { return static_cast<int>(points_.size()); }
  long long at(int pos) const { return points_[pos]; }  // 0-based position
  const std::vector<long long>& points() const { return points_; }
  long long sum() const;

private:
  std::vector<long long> points_;
};

/// The scoring vector of `rule` for an m-candidate election.
/// Throws std::invalid_argument unless 1 <= k <= m-1.
ScoringVector scoring_vector(const RuleSpec& rule, int m);

/// Total points per candidate, exact integers.
class ScoreTable {
public:
  explicit ScoreTable(std::vector<long long> totals);

  int num_candidates() const { return static_cast<int>(totals_.size()); }
  long long at(Candidate c) const { return totals_[c]; }
  const std::vector<long long>& totals() const { return totals_; }
  long long sum() const;

  /// Highest-scoring candidate, lowest id breaking ties.
  Candidate winner() const;

  friend bool operator==(const ScoreTable&, const ScoreTable&) = default;

private:
  std::vector<long long> totals_;
};

ScoreTable tally(const Profile& p, const ScoringVector& v);

Candidate winner(const Profile& p, const ScoringVector& v);
Candidate winner(const Profile& p, const RuleSpec& rule);

}  // namespace votemanip
