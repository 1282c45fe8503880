#pragma once

#include <optional>
#include <vector>

#include "votemanip/ballots.hpp"
#include "votemanip/scoring.hpp"

namespace votemanip {

/// Evidence that one voter can change the outcome in their favour:
/// submitting `misreport` instead of their sincere ballot moves the win from
/// `sincere_winner` to `new_winner`, and the voter's sincere ballot ranks
/// `new_winner` strictly above `sincere_winner`.
struct ManipulationWitness {
  int voter;
  LinearOrder misreport;
  Candidate sincere_winner;
  Candidate new_winner;

  friend bool operator==(const ManipulationWitness&,
                         const ManipulationWitness&) = default;
};

/// A voter's candidates split against the sincere winner w: `good` holds the
/// candidates the voter sincerely ranks strictly above w, `bad` the rest
/// (including w itself). Both sides are ordered by descending score in the
/// profile without this voter, lowest id first among equals.
struct GoodBadPartition {
  Candidate sincere_winner;
  std::vector<Candidate> good;
  std::vector<Candidate> bad;
};

GoodBadPartition good_bad_partition(int voter, const Profile& p,
                                    const RuleSpec& rule);

/// The single misreport that decides manipulability for `voter`: good
/// candidates first (strongest co-scorer on top), then the bad block
/// reversed, so the sincere winner's strongest rivals sink to the bottom.
/// If this ballot does not yield a strictly better winner for the voter,
/// nothing does.
LinearOrder normal_form_vote(int voter, const Profile& p, const RuleSpec& rule);

/// Tests `voter` by the normal-form ballot alone. Returns the witness when
/// the modified profile elects someone the voter sincerely prefers to the
/// sincere winner, otherwise nothing.
std::optional<ManipulationWitness> manipulable_by(int voter, const Profile& p,
                                                  const RuleSpec& rule);

/// First voter (lowest index) with a manipulation, via the normal-form test.
std::optional<ManipulationWitness> find_manipulation(const Profile& p,
                                                     const RuleSpec& rule);

/// Reference oracle: tries every one of the m! misreports for each voter in
/// order and returns the first strict improvement. Slow but assumption-free;
/// must agree with find_manipulation on existence.
std::optional<ManipulationWitness> brute_force_manipulation(
    const Profile& p, const RuleSpec& rule,
    int max_m = kDefaultMaxEnumerationM);

/// Existence-only fast path for exhaustive scans; avoids building witnesses.
/// `v` must be the scoring vector of the rule under test for p's m.
bool is_manipulable(const Profile& p, const ScoringVector& v);

}  // namespace votemanip
