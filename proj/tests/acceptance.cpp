// Acceptance gate: six end-to-end criteria, one verdict line each.
// Exits nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "votemanip/ballots.hpp"
#include "votemanip/manipulation.hpp"
#include "votemanip/ps_compare.hpp"
#include "votemanip/scoring.hpp"
#include "votemanip/witnesses.hpp"

using namespace votemanip;

namespace {

std::vector<RuleSpec> all_rules(int m) {
  std::vector<RuleSpec> rules;
  for (int k = 1; k <= m - 1; ++k) {
    rules.push_back(RuleSpec::approval(k));
    rules.push_back(RuleSpec::borda(k));
  }
  return rules;
}

/// splitmix64: tiny, seedable, and stable across platforms.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int bound) { return static_cast<int>(next() % bound); }
};

LinearOrder random_ballot(int m, Rng& rng) {
  std::vector<Candidate> ids(m);
  std::iota(ids.begin(), ids.end(), 0);
  for (int t = m - 1; t > 0; --t) std::swap(ids[t], ids[rng.below(t + 1)]);
  return LinearOrder(std::move(ids));
}

Profile random_profile(int n, int m, Rng& rng) {
  std::vector<LinearOrder> ballots;
  ballots.reserve(n);
  for (int v = 0; v < n; ++v) ballots.push_back(random_ballot(m, rng));
  return Profile(m, std::move(ballots));
}

Profile rotate_voters(const Profile& p) {
  std::vector<LinearOrder> ballots;
  ballots.reserve(p.num_voters());
  for (int v = 1; v < p.num_voters(); ++v) ballots.push_back(p.ballot(v));
  ballots.push_back(p.ballot(0));
  return Profile(p.num_candidates(), std::move(ballots));
}

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// ---- criterion 1: the normal-form test agrees with brute force ----------

bool oracle_equivalence(std::string* detail) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t checked = 0;
  for (const int n : {2, 3}) {
    for (const int m : {3, 4}) {
      const AnonymousProfileEnumeration e(n, m);
      const std::vector<RuleSpec> rules = all_rules(m);
      bool ok = true;
      e.for_each(0, e.size(), [&](std::uint64_t index, const Profile& p) {
        for (const RuleSpec& rule : rules) {
          const bool fast = find_manipulation(p, rule).has_value();
          const bool slow = brute_force_manipulation(p, rule).has_value();
          ++checked;
          if (fast != slow) {
            std::ostringstream what;
            what << "disagreement at n=" << n << " m=" << m << " profile #"
                 << index << " under " << rule.to_string();
            *detail = what.str();
            ok = false;
          }
        }
      });
      if (!ok) return false;
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::ostringstream what;
  what << checked << " profile/rule pairs in " << elapsed.count() << " ms";
  *detail = what.str();
  return true;
}

// ---- criteria 2-4: exhaustive relation checks ----------------------------

bool expect_relation(const RuleSpec& f, const RuleSpec& g, int n, int m,
                     Relation expected, std::string* detail) {
  const ComparisonReport r = compare_exhaustive(f, g, n, m);
  if (r.relation == expected) return true;
  std::ostringstream what;
  what << f.to_string() << " vs " << g.to_string() << " at n=" << n
       << " m=" << m << ": got " << to_string(r.relation) << ", expected "
       << to_string(expected);
  *detail = what.str();
  return false;
}

bool approval_incomparable(std::string* detail) {
  std::vector<std::pair<int, int>> cells;
  for (const int n : {2, 3, 4})
    for (const int m : {3, 4}) cells.emplace_back(n, m);
  cells.emplace_back(2, 5);
  int checked = 0;
  for (const auto& [n, m] : cells) {
    for (int i = 1; i <= m - 2; ++i) {
      for (int j = i + 1; j <= m - 1; ++j) {
        if (!expect_relation(RuleSpec::approval(i), RuleSpec::approval(j), n,
                             m, Relation::Incomparable, detail)) {
          return false;
        }
        ++checked;
      }
    }
  }
  *detail = std::to_string(checked) + " rule pairs, all Incomparable";
  return true;
}

bool borda_two_voter_hierarchy(std::string* detail) {
  int checked = 0;
  for (const int m : {4, 5}) {
    for (int k = 1; k < m - 2; ++k) {  // adjacent steps
      if (!expect_relation(RuleSpec::borda(k + 1), RuleSpec::borda(k), 2, m,
                           Relation::FStrictlyMore, detail)) {
        return false;
      }
      ++checked;
    }
    for (int i = 1; i <= m - 3; ++i) {  // transitive reach
      for (int j = i + 1; j <= m - 2; ++j) {
        if (!expect_relation(RuleSpec::borda(j), RuleSpec::borda(i), 2, m,
                             Relation::FStrictlyMore, detail)) {
          return false;
        }
        ++checked;
      }
    }
  }
  *detail = std::to_string(checked) + " comparisons, all FStrictlyMore";
  return true;
}

bool borda_incomparable(std::string* detail) {
  int checked = 0;
  for (const int n : {3, 4}) {
    for (const int m : {3, 4}) {
      for (int i = 1; i <= m - 2; ++i) {
        for (int j = i + 1; j <= m - 1; ++j) {
          if (!expect_relation(RuleSpec::borda(i), RuleSpec::borda(j), n, m,
                               Relation::Incomparable, detail)) {
            return false;
          }
          ++checked;
        }
      }
    }
  }
  // with two voters the top rung stays incomparable to every lower one
  for (const int m : {4, 5}) {
    for (int k = 1; k <= m - 3; ++k) {
      if (!expect_relation(RuleSpec::borda(m - 1), RuleSpec::borda(k), 2, m,
                           Relation::Incomparable, detail)) {
        return false;
      }
      ++checked;
    }
  }
  *detail = std::to_string(checked) + " comparisons, all Incomparable";
  return true;
}

// ---- criterion 5: every constructed witness verifies ----------------------

bool witness_grid(std::string* detail) {
  ClaimGrid grid;
  grid.n = {2, 8};
  grid.m = {3, 7};
  VerifyClaimOptions options;
  options.threads = worker_count();
  // the n=2 ladder at m=7 compares rules across 12.7M anonymous profiles
  options.budget = 13'000'000;

  int passed = 0, uncovered = 0;
  for (const ClaimId claim : all_claims()) {
    const ClaimSummary s = verify_claim(claim, grid, options);
    passed += s.passed;
    uncovered += s.uncovered;
    if (s.failed > 0) {
      for (const TupleResult& r : s.results) {
        if (r.status != TupleStatus::Fail) continue;
        *detail = std::string(to_string(claim)) + " failed: " + r.detail;
        return false;
      }
    }
    const bool composite = claim == ClaimId::THM_APPROVAL_INCOMPARABLE ||
                           claim == ClaimId::THM_BORDA_INCOMPARABLE ||
                           claim == ClaimId::BORDA_N2_HIERARCHY;
    if (!composite && s.uncovered > 0) {
      *detail = std::string(to_string(claim)) +
                " left tuples uncovered but is not a composite";
      return false;
    }
  }
  *detail = std::to_string(passed) + " tuples verified, " +
            std::to_string(uncovered) + " composite corners uncovered";
  return true;
}

// ---- criterion 6: structural properties ----------------------------------

struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw PropertyFailure(what);
}

void check_profile_properties(const Profile& p, const std::string& where) {
  const int m = p.num_candidates();
  const int n = p.num_voters();
  for (const RuleSpec& rule : all_rules(m)) {
    const ScoringVector v = scoring_vector(rule, m);
    const ScoreTable scores = tally(p, v);

    const long long expected_total = v.sum() * n;
    const long long actual_total =
        std::accumulate(scores.totals().begin(), scores.totals().end(), 0LL);
    expect(actual_total == expected_total,
           "score conservation violated under " + rule.to_string() + " " +
               where);

    const long long best =
        *std::max_element(scores.totals().begin(), scores.totals().end());
    for (Candidate c = 0; c < scores.winner(); ++c) {
      expect(scores.at(c) < best,
             "tie-break picked a non-minimal id under " + rule.to_string() +
                 " " + where);
    }
    expect(scores.at(scores.winner()) == best,
           "winner does not have the top score " + where);

    const Profile rotated = rotate_voters(p);
    const ScoreTable rotated_scores = tally(rotated, v);
    expect(rotated_scores.winner() == scores.winner(),
           "winner changed under a voter permutation " + where);
    expect(find_manipulation(p, rule).has_value() ==
               find_manipulation(rotated, rule).has_value(),
           "manipulability changed under a voter permutation " + where);

    const auto witness = find_manipulation(p, rule);
    if (witness) {
      expect(witness->sincere_winner == scores.winner(),
             "witness disagrees about the sincere winner " + where);
      const Profile misreported =
          p.with_ballot_replaced(witness->voter, witness->misreport);
      expect(tally(misreported, v).winner() == witness->new_winner,
             "witness misreport does not elect the claimed winner " + where);
      expect(p.ballot(witness->voter)
                 .prefers(witness->new_winner, witness->sincere_winner),
             "witness voter does not prefer the new winner " + where);
    }
  }

  // moving from one ladder step to the next adds between 0 and n points
  for (int k = 1; k <= m - 2; ++k) {
    const ScoreTable low = tally(p, scoring_vector(RuleSpec::borda(k), m));
    const ScoreTable high =
        tally(p, scoring_vector(RuleSpec::borda(k + 1), m));
    for (Candidate c = 0; c < m; ++c) {
      const long long shift = high.at(c) - low.at(c);
      expect(0 <= shift && shift <= n,
             "ladder step shifted a score outside [0, n] " + where);
    }
  }
}

Relation transpose(Relation r) {
  if (r == Relation::FStrictlyMore) return Relation::GStrictlyMore;
  if (r == Relation::GStrictlyMore) return Relation::FStrictlyMore;
  return r;
}

bool property_suite(std::string* detail) {
  try {
    std::uint64_t profiles = 0;
    for (int n = 1; n <= 3; ++n) {
      for (int m = 3; m <= 4; ++m) {
        const AnonymousProfileEnumeration e(n, m);
        e.for_each(0, e.size(), [&](std::uint64_t index, const Profile& p) {
          std::ostringstream where;
          where << "(n=" << n << ", m=" << m << ", profile #" << index << ")";
          check_profile_properties(p, where.str());
          ++profiles;
        });
      }
    }

    for (const int m : {5, 6, 7}) {
      Rng rng{0x5eed0000ULL + static_cast<std::uint64_t>(m)};
      for (int t = 0; t < 1000; ++t) {
        const int n = 2 + rng.below(4);
        const Profile p = random_profile(n, m, rng);
        std::ostringstream where;
        where << "(random m=" << m << " draw #" << t << ")";
        check_profile_properties(p, where.str());
        ++profiles;
      }
    }

    int mirrored = 0;
    for (int n = 1; n <= 3; ++n) {
      for (int m = 3; m <= 4; ++m) {
        for (const RuleSpec& f : all_rules(m)) {
          for (const RuleSpec& g : all_rules(m)) {
            const ComparisonReport fg = compare_exhaustive(f, g, n, m);
            const ComparisonReport gf = compare_exhaustive(g, f, n, m);
            expect(fg.relation == transpose(gf.relation),
                   "mirror relation mismatch for " + f.to_string() + " vs " +
                       g.to_string());
            expect(fg.counts->manipulable_f == gf.counts->manipulable_g &&
                       fg.counts->manipulable_g == gf.counts->manipulable_f &&
                       fg.counts->manipulable_both ==
                           gf.counts->manipulable_both,
                   "mirror counts mismatch for " + f.to_string() + " vs " +
                       g.to_string());
            ++mirrored;
          }
        }
      }
    }

    *detail = std::to_string(profiles) + " profiles, " +
              std::to_string(mirrored) + " mirrored comparisons";
    return true;
  } catch (const PropertyFailure& e) {
    *detail = e.what();
    return false;
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  int number;
  std::string description;
  std::function<bool(std::string*)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "normal-form manipulability equals brute force (n<=3, m<=4)",
       oracle_equivalence},
      {2, "approval rules pairwise incomparable (n<=4 at m<=4, and (2,5))",
       approval_incomparable},
      {3, "two-voter ladder strictly more manipulable below the top (m<=5)",
       borda_two_voter_hierarchy},
      {4, "point-ladder rules pairwise incomparable (n in {3,4}; top rung at "
          "n=2)",
       borda_incomparable},
      {5, "all claim witnesses verify on the n<=8, m<=7 grid",
       witness_grid},
      {6, "conservation, tie-break, anonymity, ladder shift, mirror, "
          "self-certification",
       property_suite},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string d;
    bool ok = false;
    try {
      ok = c.run(&d);
    } catch (const std::exception& e) {
      d = std::string("unexpected exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number
              << " — " << c.description << (d.empty() ? "" : " (" + d + ")")
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}
