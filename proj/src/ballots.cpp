#include "votemanip/ballots.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace votemanip {

namespace {

std::string describe_ranking(const std::vector<Candidate>& ranking) {
  std::string out = "(";
  for (std::size_t t = 0; t < ranking.size(); ++t) {
    if (t > 0) out += ",";
    out += std::to_string(ranking[t]);
  }
  return out + ")";
}

}  // namespace

LinearOrder::LinearOrder(std::vector<Candidate> ranking)
    : ranking_(std::move(ranking)) {
  const int m = static_cast<int>(ranking_.size());
  if (m == 0) throw std::invalid_argument("ballot must rank at least one candidate");
  std::vector<bool> seen(m, false);
  for (Candidate c : ranking_) {
    if (c < 0 || c >= m || seen[c]) {
      throw std::invalid_argument("ballot " + describe_ranking(ranking_) +
                                  " is not a permutation of 0.." +
                                  std::to_string(m - 1));
    }
    seen[c] = true;
  }
}

int LinearOrder::position_of(Candidate c) const {
  for (int pos = 0; pos < num_candidates(); ++pos) {
    if (ranking_[pos] == c) return pos;
  }
  throw std::invalid_argument("candidate " + std::to_string(c) +
                              " not on a ballot over " +
                              std::to_string(num_candidates()) + " candidates");
}

Profile::Profile(int m, std::vector<LinearOrder> ballots)
    : m_(m), ballots_(std::move(ballots)) {
  if (m_ < 1) throw std::invalid_argument("profile needs m >= 1 candidates");
  if (ballots_.empty()) throw std::invalid_argument("profile needs at least one voter");
  for (const LinearOrder& b : ballots_) {
    if (b.num_candidates() != m_) {
      throw std::invalid_argument("all ballots must rank exactly " +
                                  std::to_string(m_) + " candidates");
    }
  }
}

Profile Profile::with_ballot_replaced(int voter, LinearOrder misreport) const {
  if (voter < 0 || voter >= num_voters()) {
    throw std::invalid_argument("voter index " + std::to_string(voter) +
                                " out of range");
  }
  std::vector<LinearOrder> ballots = ballots_;
  ballots[voter] = std::move(misreport);
  return Profile(m_, std::move(ballots));
}

AnonymousProfile::AnonymousProfile(int m, std::vector<BallotCount> counts)
    : m_(m), counts_(std::move(counts)) {
  if (m_ < 1) throw std::invalid_argument("anonymous profile needs m >= 1");
  for (const BallotCount& bc : counts_) {
    if (bc.ballot.num_candidates() != m_) {
      throw std::invalid_argument("all ballots must rank exactly " +
                                  std::to_string(m_) + " candidates");
    }
    if (bc.count < 0) throw std::invalid_argument("ballot counts must be non-negative");
  }
  std::erase_if(counts_, [](const BallotCount& bc) { return bc.count == 0; });
  std::sort(counts_.begin(), counts_.end(),
            [](const BallotCount& a, const BallotCount& b) {
              return a.ballot < b.ballot;
            });
  // Merge adjacent duplicates so the representation is canonical.
  std::vector<BallotCount> merged;
  for (BallotCount& bc : counts_) {
    if (!merged.empty() && merged.back().ballot == bc.ballot) {
      merged.back().count += bc.count;
    } else {
      merged.push_back(std::move(bc));
    }
  }
  counts_ = std::move(merged);
  if (counts_.empty()) {
    throw std::invalid_argument("anonymous profile needs at least one voter");
  }
}

int AnonymousProfile::num_voters() const {
  int n = 0;
  for (const BallotCount& bc : counts_) n += bc.count;
  return n;
}

AnonymousProfile anonymize(const Profile& p) {
  std::vector<BallotCount> counts;
  counts.reserve(p.num_voters());
  for (const LinearOrder& b : p.ballots()) counts.push_back({b, 1});
  return AnonymousProfile(p.num_candidates(), std::move(counts));
}

Profile expand(const AnonymousProfile& a) {
  std::vector<LinearOrder> ballots;
  ballots.reserve(a.num_voters());
  for (const BallotCount& bc : a.counts()) {
    for (int t = 0; t < bc.count; ++t) ballots.push_back(bc.ballot);
  }
  return Profile(a.num_candidates(), std::move(ballots));
}

std::uint64_t factorial_checked(std::uint64_t m) {
  std::uint64_t r = 1;
  for (std::uint64_t t = 2; t <= m; ++t) {
    if (r > std::numeric_limits<std::uint64_t>::max() / t) {
      throw std::domain_error(std::to_string(m) + "! overflows 64 bits");
    }
    r *= t;
  }
  return r;
}

std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t t = 1; t <= k; ++t) {
    r = r * (n - k + t) / t;  // exact at every step: r holds C(n-k+t, t)
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw std::domain_error("C(" + std::to_string(n) + "," +
                              std::to_string(k) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t count_anonymous_profiles(int n, int m) {
  if (n < 1) throw std::domain_error("need n >= 1 voters");
  if (m < 1) throw std::domain_error("need m >= 1 candidates");
  const std::uint64_t ballots = factorial_checked(static_cast<std::uint64_t>(m));
  if (ballots > std::numeric_limits<std::uint64_t>::max() - static_cast<std::uint64_t>(n) + 1) {
    throw std::domain_error("anonymous profile count overflows 64 bits");
  }
  return binomial_checked(ballots + static_cast<std::uint64_t>(n) - 1,
                          static_cast<std::uint64_t>(n));
}

std::vector<LinearOrder> enumerate_orders(int m, int max_m) {
  if (m < 1 || m > max_m) {
    throw std::domain_error("m = " + std::to_string(m) +
                            " outside the enumeration range [1, " +
                            std::to_string(max_m) + "]");
  }
  std::vector<Candidate> ranking(m);
  for (int c = 0; c < m; ++c) ranking[c] = c;
  std::vector<LinearOrder> orders;
  orders.reserve(factorial_checked(static_cast<std::uint64_t>(m)));
  do {
    orders.emplace_back(ranking);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return orders;
}

AnonymousProfileEnumeration::AnonymousProfileEnumeration(int n, int m, int max_m)
    : n_(n), m_(m), size_(0), orders_(enumerate_orders(m, max_m)) {
  if (n < 1) throw std::domain_error("need n >= 1 voters");
  size_ = count_anonymous_profiles(n, m);
}

std::vector<std::uint32_t> AnonymousProfileEnumeration::ballot_indices_at(
    std::uint64_t index) const {
  if (index >= size_) {
    throw std::out_of_range("profile index " + std::to_string(index) +
                            " >= " + std::to_string(size_));
  }
  const std::uint64_t num_ballots = orders_.size();
  std::vector<std::uint32_t> idx(n_);
  std::uint32_t low = 0;
  for (int slot = 0; slot < n_; ++slot) {
    const std::uint64_t remaining = static_cast<std::uint64_t>(n_ - slot - 1);
    for (std::uint32_t v = low;; ++v) {
      // Completions with this slot fixed to v: multisets of size `remaining`
      // over ballots v..num_ballots-1.
      const std::uint64_t span = num_ballots - v;
      const std::uint64_t completions =
          binomial_checked(span + remaining - 1, remaining);
      if (index < completions) {
        idx[slot] = v;
        low = v;
        break;
      }
      index -= completions;
    }
  }
  return idx;
}

AnonymousProfile AnonymousProfileEnumeration::at(std::uint64_t index) const {
  const std::vector<std::uint32_t> idx = ballot_indices_at(index);
  std::vector<BallotCount> counts;
  for (std::uint32_t v : idx) {
    if (!counts.empty() && counts.back().ballot == orders_[v]) {
      counts.back().count += 1;
    } else {
      counts.push_back({orders_[v], 1});
    }
  }
  return AnonymousProfile(m_, std::move(counts));
}

Profile AnonymousProfileEnumeration::profile_at(std::uint64_t index) const {
  return make_profile(ballot_indices_at(index));
}

Profile AnonymousProfileEnumeration::make_profile(
    const std::vector<std::uint32_t>& idx) const {
  std::vector<LinearOrder> ballots;
  ballots.reserve(idx.size());
  for (std::uint32_t v : idx) ballots.push_back(orders_[v]);
  return Profile(m_, std::move(ballots));
}

void AnonymousProfileEnumeration::advance(std::vector<std::uint32_t>& idx) const {
  const std::uint32_t top = static_cast<std::uint32_t>(orders_.size()) - 1;
  int pos = n_ - 1;
  while (pos >= 0 && idx[pos] == top) --pos;
  if (pos < 0) throw std::out_of_range("advanced past the last profile");
  const std::uint32_t v = idx[pos] + 1;
  for (int t = pos; t < n_; ++t) idx[t] = v;
}

std::vector<AnonymousProfile> enumerate_anonymous_profiles(int n, int m,
                                                           int max_m) {
  AnonymousProfileEnumeration e(n, m, max_m);
  std::vector<AnonymousProfile> out;
  out.reserve(e.size());
  for (std::uint64_t t = 0; t < e.size(); ++t) out.push_back(e.at(t));
  return out;
}

}  // namespace votemanip
