#include "votemanip/manipulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace votemanip {

namespace {

std::vector<long long> full_totals(const Profile& p, const ScoringVector& v) {
  std::vector<long long> totals(p.num_candidates(), 0);
  for (const LinearOrder& b : p.ballots()) {
    for (int pos = 0; pos < p.num_candidates(); ++pos) {
      totals[b.at(pos)] += v.at(pos);
    }
  }
  return totals;
}

Candidate argmax_lowest_id(const std::vector<long long>& totals) {
  Candidate best = 0;
  for (Candidate c = 1; c < static_cast<Candidate>(totals.size()); ++c) {
    if (totals[c] > totals[best]) best = c;
  }
  return best;
}

// Scores of the profile with `voter` removed, derived from the full tally.
std::vector<long long> totals_without(const Profile& p, const ScoringVector& v,
                                      const std::vector<long long>& full,
                                      int voter) {
  std::vector<long long> others = full;
  const LinearOrder& own = p.ballot(voter);
  for (int pos = 0; pos < p.num_candidates(); ++pos) {
    others[own.at(pos)] -= v.at(pos);
  }
  return others;
}

struct NormalFormOutcome {
  Candidate sincere_winner;
  Candidate new_winner;
  bool improves;
  std::vector<Candidate> ranking;
};

NormalFormOutcome run_normal_form(const Profile& p, const ScoringVector& v,
                                  const std::vector<long long>& full,
                                  Candidate w, int voter) {
  const int m = p.num_candidates();
  const LinearOrder& sincere = p.ballot(voter);
  const std::vector<long long> others = totals_without(p, v, full, voter);

  std::vector<Candidate> good;
  std::vector<Candidate> bad;
  for (Candidate c = 0; c < m; ++c) {
    (c != w && sincere.prefers(c, w) ? good : bad).push_back(c);
  }
  const auto by_rivalry = [&others](Candidate a, Candidate b) {
    if (others[a] != others[b]) return others[a] > others[b];
    return a < b;
  };
  std::sort(good.begin(), good.end(), by_rivalry);
  std::sort(bad.begin(), bad.end(), by_rivalry);

  NormalFormOutcome out;
  out.sincere_winner = w;
  out.ranking = std::move(good);
  out.ranking.insert(out.ranking.end(), bad.rbegin(), bad.rend());

  std::vector<long long> totals = others;
  for (int pos = 0; pos < m; ++pos) totals[out.ranking[pos]] += v.at(pos);
  out.new_winner = argmax_lowest_id(totals);
  out.improves = sincere.prefers(out.new_winner, w);
  return out;
}

void require_voter(const Profile& p, int voter) {
  if (voter < 0 || voter >= p.num_voters()) {
    throw std::invalid_argument("voter index " + std::to_string(voter) +
                                " out of range for " +
                                std::to_string(p.num_voters()) + " voters");
  }
}

}  // namespace

GoodBadPartition good_bad_partition(int voter, const Profile& p,
                                    const RuleSpec& rule) {
  require_voter(p, voter);
  const ScoringVector v = scoring_vector(rule, p.num_candidates());
  const std::vector<long long> full = full_totals(p, v);
  const Candidate w = argmax_lowest_id(full);
  const std::vector<long long> others = totals_without(p, v, full, voter);
  const LinearOrder& sincere = p.ballot(voter);

  GoodBadPartition part;
  part.sincere_winner = w;
  for (Candidate c = 0; c < p.num_candidates(); ++c) {
    (c != w && sincere.prefers(c, w) ? part.good : part.bad).push_back(c);
  }
  const auto by_rivalry = [&others](Candidate a, Candidate b) {
    if (others[a] != others[b]) return others[a] > others[b];
    return a < b;
  };
  std::sort(part.good.begin(), part.good.end(), by_rivalry);
  std::sort(part.bad.begin(), part.bad.end(), by_rivalry);
  return part;
}

LinearOrder normal_form_vote(int voter, const Profile& p,
                             const RuleSpec& rule) {
  require_voter(p, voter);
  const ScoringVector v = scoring_vector(rule, p.num_candidates());
  const std::vector<long long> full = full_totals(p, v);
  const Candidate w = argmax_lowest_id(full);
  return LinearOrder(run_normal_form(p, v, full, w, voter).ranking);
}

std::optional<ManipulationWitness> manipulable_by(int voter, const Profile& p,
                                                  const RuleSpec& rule) {
  require_voter(p, voter);
  const ScoringVector v = scoring_vector(rule, p.num_candidates());
  const std::vector<long long> full = full_totals(p, v);
  const Candidate w = argmax_lowest_id(full);
  NormalFormOutcome out = run_normal_form(p, v, full, w, voter);
  if (!out.improves) return std::nullopt;
  return ManipulationWitness{voter, LinearOrder(std::move(out.ranking)), w,
                             out.new_winner};
}

std::optional<ManipulationWitness> find_manipulation(const Profile& p,
                                                     const RuleSpec& rule) {
  const ScoringVector v = scoring_vector(rule, p.num_candidates());
  const std::vector<long long> full = full_totals(p, v);
  const Candidate w = argmax_lowest_id(full);
  for (int voter = 0; voter < p.num_voters(); ++voter) {
    NormalFormOutcome out = run_normal_form(p, v, full, w, voter);
    if (out.improves) {
      return ManipulationWitness{voter, LinearOrder(std::move(out.ranking)), w,
                                 out.new_winner};
    }
  }
  return std::nullopt;
}

std::optional<ManipulationWitness> brute_force_manipulation(const Profile& p,
                                                            const RuleSpec& rule,
                                                            int max_m) {
  const int m = p.num_candidates();
  const ScoringVector v = scoring_vector(rule, m);
  const std::vector<LinearOrder> orders = enumerate_orders(m, max_m);
  const std::vector<long long> full = full_totals(p, v);
  const Candidate w = argmax_lowest_id(full);
  std::vector<long long> totals(m);
  for (int voter = 0; voter < p.num_voters(); ++voter) {
    const LinearOrder& sincere = p.ballot(voter);
    const std::vector<long long> others = totals_without(p, v, full, voter);
    for (const LinearOrder& misreport : orders) {
      totals = others;
      for (int pos = 0; pos < m; ++pos) totals[misreport.at(pos)] += v.at(pos);
      const Candidate new_w = argmax_lowest_id(totals);
      if (sincere.prefers(new_w, w)) {
        return ManipulationWitness{voter, misreport, w, new_w};
      }
    }
  }
  return std::nullopt;
}

bool is_manipulable(const Profile& p, const ScoringVector& v) {
  const std::vector<long long> full = full_totals(p, v);
  const Candidate w = argmax_lowest_id(full);
  for (int voter = 0; voter < p.num_voters(); ++voter) {
    if (run_normal_form(p, v, full, w, voter).improves) return true;
  }
  return false;
}

}  // namespace votemanip
