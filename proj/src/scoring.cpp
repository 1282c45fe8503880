#include "votemanip/scoring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace votemanip {

std::string_view to_string(RuleFamily family) {
  return family == RuleFamily::Approval ? "approval" : "borda";
}

std::string RuleSpec::to_string() const {
  const char* name = family == RuleFamily::Approval ? "approval" : "borda";
  return std::string(name) + ":" + std::to_string(k);
}

RuleSpec RuleSpec::parse(std::string_view text, std::optional<int> m) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("rule \"" + std::string(text) +
                                "\" must look like approval:<k> or borda:<k>");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view karg = text.substr(colon + 1);
  RuleFamily family;
  if (name == "approval") {
    family = RuleFamily::Approval;
  } else if (name == "borda") {
    family = RuleFamily::Borda;
  } else {
    throw std::invalid_argument("unknown rule family \"" + std::string(name) +
                                "\" (expected approval or borda)");
  }
  int k = 0;
  if (karg == "m-1") {
    if (!m) {
      throw std::invalid_argument(
          "rule \"" + std::string(text) +
          "\" needs a candidate count to resolve m-1");
    }
    k = *m - 1;
  } else {
    const auto [ptr, ec] =
        std::from_chars(karg.data(), karg.data() + karg.size(), k);
    if (ec != std::errc() || ptr != karg.data() + karg.size()) {
      throw std::invalid_argument("rule \"" + std::string(text) +
                                  "\" has a malformed k");
    }
  }
  if (k < 1) {
    throw std::invalid_argument("rule \"" + std::string(text) +
                                "\" needs k >= 1");
  }
  return {family, k};
}

ScoringVector::ScoringVector(std::vector<long long> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("scoring vector is empty");
  for (std::size_t t = 0; t < points_.size(); ++t) {
    if (points_[t] < 0) {
      throw std::invalid_argument("scoring vector entries must be non-negative");
    }
    if (t > 0 && points_[t] > points_[t - 1]) {
      throw std::invalid_argument("scoring vector must be non-increasing");
    }
  }
  if (points_.front() == points_.back()) {
    throw std::invalid_argument(
        "scoring vector must not be constant (every candidate would tie)");
  }
}

long long ScoringVector::sum() const {
  return std::accumulate(points_.begin(), points_.end(), 0LL);
}

ScoringVector scoring_vector(const RuleSpec& rule, int m) {
  if (rule.k < 1 || rule.k > m - 1) {
    throw std::invalid_argument(rule.to_string() + " needs 1 <= k <= m-1 (m = " +
                                std::to_string(m) + ")");
  }
  std::vector<long long> points(m, 0);
  for (int pos = 0; pos < rule.k; ++pos) {
    points[pos] = rule.family == RuleFamily::Approval ? 1 : rule.k - pos;
  }
  return ScoringVector(std::move(points));
}

ScoreTable::ScoreTable(std::vector<long long> totals)
    : totals_(std::move(totals)) {
  if (totals_.empty()) throw std::invalid_argument("score table is empty");
}

long long ScoreTable::sum() const {
  return std::accumulate(totals_.begin(), totals_.end(), 0LL);
}

Candidate ScoreTable::winner() const {
  Candidate best = 0;
  for (Candidate c = 1; c < num_candidates(); ++c) {
    if (totals_[c] > totals_[best]) best = c;
  }
  return best;
}

ScoreTable tally(const Profile& p, const ScoringVector& v) {
  if (v.num_positions() != p.num_candidates()) {
    throw std::invalid_argument("scoring vector length " +
                                std::to_string(v.num_positions()) +
                                " does not match m = " +
                                std::to_string(p.num_candidates()));
  }
  std::vector<long long> totals(p.num_candidates(), 0);
  for (const LinearOrder& b : p.ballots()) {
    for (int pos = 0; pos < p.num_candidates(); ++pos) {
      totals[b.at(pos)] += v.at(pos);
    }
  }
  return ScoreTable(std::move(totals));
}

Candidate winner(const Profile& p, const ScoringVector& v) {
  return tally(p, v).winner();
}

Candidate winner(const Profile& p, const RuleSpec& rule) {
  return winner(p, scoring_vector(rule, p.num_candidates()));
}

}  // namespace votemanip
