#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace votemanip {

/// Candidate identity. Candidates are the integers 0..m-1, and the id doubles
/// as tie-breaking priority: whenever two candidates tie on points, the one
/// with the smaller id wins.
using Candidate = int;

/// Default ceiling on the candidate count for ballot enumeration.
/// 8! = 40320 distinct ballots; anything larger is refused unless the caller
/// raises the ceiling explicitly.
inline constexpr int kDefaultMaxEnumerationM = 8;

/// A voter's ballot: a strict ranking of all m candidates.
/// Position 0 is the most preferred candidate.
class LinearOrder {
public:
  /// Validates that `ranking` is a permutation of 0..m-1 and throws
  /// std::invalid_argument otherwise.
  explicit LinearOrder(std::vector<Candidate> ranking);

  int num_candidates() const { return static_cast<int>(ranking_.size()); }

  /// Candidate ranked at `pos` (0-based, 0 = most preferred).
  Candidate at(int pos) const { return ranking_[pos]; }

  /// 0-based position of candidate `c`.
  int position_of(Candidate c) const;

  /// True iff this ballot ranks `a` strictly above `b`.
  bool prefers(Candidate a, Candidate b) const {
    return position_of(a) < position_of(b);
  }

  const std::vector<Candidate>& ranking() const { return ranking_; }

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend std::strong_ordering operator<=>(const LinearOrder& a,
                                          const LinearOrder& b) {
    return a.ranking_ <=> b.ranking_;
  }

private:
  std::vector<Candidate> ranking_;
};

/// An ordered preference profile: one ballot per voter, all over the same
/// candidate set 0..m-1. Voters are identified by their index.
class Profile {
public:
  /// Requires at least one ballot and uniform candidate count; throws
  /// std::invalid_argument otherwise.
  Profile(int m, std::vector<LinearOrder> ballots);

  int num_candidates() const { return m_; }
  int num_voters() const { return static_cast<int>(ballots_.size()); }
  const LinearOrder& ballot(int voter) const { return ballots_[voter]; }
  const std::vector<LinearOrder>& ballots() const { return ballots_; }

  /// Copy of this profile with `voter`'s ballot replaced by `misreport`.
  Profile with_ballot_replaced(int voter, LinearOrder misreport) const;

  friend bool operator==(const Profile&, const Profile&) = default;

private:
  int m_;
  std::vector<LinearOrder> ballots_;
};

/// One distinct ballot together with how many voters cast it.
struct BallotCount {
  LinearOrder ballot;
  int count;

  friend bool operator==(const BallotCount&, const BallotCount&) = default;
};

/// A multiset of ballots: the anonymous quotient of a Profile. Entries are
/// kept sorted lexicographically by ballot with positive counts, so equal
/// multisets compare equal structurally.
class AnonymousProfile {
public:
  /// Normalizes (sorts, merges duplicates, drops zero counts) and validates.
  AnonymousProfile(int m, std::vector<BallotCount> counts);

  int num_candidates() const { return m_; }
  int num_voters() const;
  const std::vector<BallotCount>& counts() const { return counts_; }

  friend bool operator==(const AnonymousProfile&,
                         const AnonymousProfile&) = default;

private:
  int m_;
  std::vector<BallotCount> counts_;
};

/// Forgets voter identities. anonymize(expand(a)) == a for every a.
AnonymousProfile anonymize(const Profile& p);

/// Materializes the multiset as an ordered profile, ballots in canonical
/// (lexicographic) order.
Profile expand(const AnonymousProfile& a);

/// m! for small m; throws std::domain_error if the result overflows uint64.
std::uint64_t factorial_checked(std::uint64_t m);

/// Binomial coefficient with overflow detection (std::domain_error).
std::uint64_t binomial_checked(std::uint64_t n, std::uint64_t k);

/// Number of anonymous profiles with n voters over m candidates:
/// C(m! + n - 1, n). Throws std::domain_error on overflow, before any
/// enumeration work starts.
std::uint64_t count_anonymous_profiles(int n, int m);

/// All m! ballots in lexicographic order. Throws std::domain_error when m is
/// outside [1, max_m].
std::vector<LinearOrder> enumerate_orders(int m,
                                          int max_m = kDefaultMaxEnumerationM);

/// Lazy enumeration of every anonymous profile with n voters over m
/// candidates, in canonical order: profiles are identified with
/// non-decreasing index tuples into the lexicographic ballot list, ordered
/// lexicographically themselves. The enumeration is pure and restartable, so
/// disjoint index ranges can be scanned on different threads and merged
/// deterministically.
class AnonymousProfileEnumeration {
public:
  AnonymousProfileEnumeration(int n, int m,
                              int max_m = kDefaultMaxEnumerationM);

  int num_voters() const { return n_; }
  int num_candidates() const { return m_; }
  std::uint64_t size() const { return size_; }
  const std::vector<LinearOrder>& orders() const { return orders_; }

  /// The index-th profile in canonical order, as ballot-list indices.
  std::vector<std::uint32_t> ballot_indices_at(std::uint64_t index) const;

  /// The index-th profile as a multiset.
  AnonymousProfile at(std::uint64_t index) const;

  /// The index-th profile expanded, ballots in canonical order.
  Profile profile_at(std::uint64_t index) const;

  /// Visits profiles first..last-1 in order. The visitor receives
  /// (index, const Profile&).
  template <typename Visitor>
  void for_each(std::uint64_t first, std::uint64_t last,
                Visitor&& visit) const {
    if (first >= last) return;
    std::vector<std::uint32_t> idx = ballot_indices_at(first);
    for (std::uint64_t index = first; index < last; ++index) {
      visit(index, make_profile(idx));
      if (index + 1 < last) advance(idx);
    }
  }

private:
  Profile make_profile(const std::vector<std::uint32_t>& idx) const;
  void advance(std::vector<std::uint32_t>& idx) const;

  int n_;
  int m_;
  std::uint64_t size_;
  std::vector<LinearOrder> orders_;
};

/// Materialized list of every anonymous profile; intended for small spaces.
std::vector<AnonymousProfile> enumerate_anonymous_profiles(
    int n, int m, int max_m = kDefaultMaxEnumerationM);

}  // namespace votemanip
