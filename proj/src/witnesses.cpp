#include "votemanip/witnesses.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

namespace votemanip {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 14> kClaimNames{{
    {ClaimId::APPROVAL_I_NOT_GEQ_J, "APPROVAL_I_NOT_GEQ_J"},
    {ClaimId::APPROVAL_J_NOT_GEQ_I_EVEN, "APPROVAL_J_NOT_GEQ_I_EVEN"},
    {ClaimId::APPROVAL_J_NOT_GEQ_I_ODD, "APPROVAL_J_NOT_GEQ_I_ODD"},
    {ClaimId::APPROVAL_J_NOT_GEQ_1, "APPROVAL_J_NOT_GEQ_1"},
    {ClaimId::APPROVAL_J_NOT_GEQ_I_SMALLM, "APPROVAL_J_NOT_GEQ_I_SMALLM"},
    {ClaimId::BORDA_I_NOT_GEQ_J_EVEN, "BORDA_I_NOT_GEQ_J_EVEN"},
    {ClaimId::BORDA_I_NOT_GEQ_J_ODD, "BORDA_I_NOT_GEQ_J_ODD"},
    {ClaimId::BORDA_J_NOT_GEQ_I_ODD, "BORDA_J_NOT_GEQ_I_ODD"},
    {ClaimId::BORDA_J_NOT_GEQ_I_EVEN, "BORDA_J_NOT_GEQ_I_EVEN"},
    {ClaimId::BORDA_J_NOT_GEQ_I_N4, "BORDA_J_NOT_GEQ_I_N4"},
    {ClaimId::BORDA_FULL_NOT_GEQ_K, "BORDA_FULL_NOT_GEQ_K"},
    {ClaimId::THM_APPROVAL_INCOMPARABLE, "THM_APPROVAL_INCOMPARABLE"},
    {ClaimId::THM_BORDA_INCOMPARABLE, "THM_BORDA_INCOMPARABLE"},
    {ClaimId::BORDA_N2_HIERARCHY, "BORDA_N2_HIERARCHY"},
}};

// Deterministic generator for "any order" fills; fixed across platforms.
class SmallRng {
public:
  explicit SmallRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::size_t below(std::size_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<int> parts) {
  SmallRng rng(seed);
  std::uint64_t h = rng.next();
  for (int part : parts) {
    SmallRng step(h ^ (static_cast<std::uint64_t>(part) + 0x100));
    h = step.next();
  }
  return h;
}

void shuffle_from(std::vector<Candidate>& seq, std::size_t from, SmallRng& rng) {
  for (std::size_t t = seq.size(); t > from + 1; --t) {
    std::swap(seq[t - 1], seq[from + rng.below(t - from)]);
  }
}

// Ballot assembly in subscript blocks: candidates are grouped into
// contiguous id ranges and referenced by 1-based subscript within a group,
// so asc(base, 2, 4) appends the group's 2nd..4th members.
void asc(std::vector<Candidate>& seq, int base, int from, int to) {
  for (int t = from; t <= to; ++t) seq.push_back(base + t - 1);
}

void desc(std::vector<Candidate>& seq, int base, int from, int to) {
  for (int t = from; t >= to; --t) seq.push_back(base + t - 1);
}

void repeat(std::vector<LinearOrder>& out, const std::vector<Candidate>& seq,
            int copies) {
  for (int t = 0; t < copies; ++t) out.emplace_back(seq);
}

std::string param_text(const WitnessParams& p) {
  std::string s = "n=" + std::to_string(p.n) + " m=" + std::to_string(p.m);
  if (p.j > 0) s += " i=" + std::to_string(p.i) + " j=" + std::to_string(p.j);
  if (p.k > 0) s += " k=" + std::to_string(p.k);
  return s;
}

void require(bool ok, ClaimId claim, const std::string& bound,
             std::string* violation) {
  if (!ok && violation->empty()) {
    *violation = std::string(to_string(claim)) + " requires " + bound;
  }
}

void check_ij(ClaimId claim, const WitnessParams& p, std::string* violation) {
  require(p.i >= 1, claim, "i >= 1", violation);
  require(p.i < p.j, claim, "i < j", violation);
  require(p.j <= p.m - 1, claim, "j <= m-1", violation);
}

// The group favoured by tie-breaking ties with the voters' shared favourites
// under approval:j; everyone else mirrors the first ballot, except one voter
// who ranks that group reversed and so can demote the tie winner.
std::vector<LinearOrder> build_approval_i_not_geq_j(int n, int m, int i, int j) {
  const int a = 0, na = j - i;   // tie-break-favoured block
  const int b = j - i, nb = i;   // shared favourites
  const int c = j, nc = m - j;   // padding below the approval line
  std::vector<Candidate> t1;
  asc(t1, b, 1, nb);
  asc(t1, a, 1, na);
  asc(t1, c, 1, nc);
  std::vector<Candidate> t2;
  asc(t2, b, 1, nb);
  desc(t2, a, na, 1);
  asc(t2, c, 1, nc);
  std::vector<LinearOrder> ballots;
  repeat(ballots, t1, n - 1);
  repeat(ballots, t2, 1);
  return ballots;
}

// Two blocks of j-1 candidates face off; a lone swing voter can lift the
// id-0 candidate into a winning tie under approval:i, while under approval:j
// that candidate already wins with full support.
std::vector<LinearOrder> build_approval_j_not_geq_i_even(int n, int m, int j) {
  const int q = n / 2;
  const int a = 0;                              // the protected candidate
  const int b = 1, nb = j - 1;
  const int c = j, nc = j - 1;
  const int d = 2 * j - 1, nd = m - 2 * j + 1;  // padding
  std::vector<Candidate> t1;
  asc(t1, b, 1, nb);
  t1.push_back(a);
  asc(t1, c, 1, nc);
  asc(t1, d, 1, nd);
  std::vector<Candidate> t2;
  t2.push_back(a);
  asc(t2, c, 1, nc);
  asc(t2, b, 1, nb);
  asc(t2, d, 1, nd);
  std::vector<Candidate> t3;
  asc(t3, c, 1, nc);
  t3.push_back(a);
  asc(t3, b, 1, nb);
  asc(t3, d, 1, nd);
  std::vector<LinearOrder> ballots;
  repeat(ballots, t1, q);
  repeat(ballots, t2, q - 1);
  repeat(ballots, t3, 1);
  return ballots;
}

// A j-candidate block monopolizes the top under approval:j; under approval:i
// its internally reversed supporters can trade the block leader away.
std::vector<LinearOrder> build_approval_j_not_geq_i_odd(int n, int m, int i,
                                                        int j) {
  const int q = (n - 1) / 2;
  const int a = 0, na = j - 1;
  const int b = j - 1, nb = j;
  const int c = 2 * j - 1, nc = m - 2 * j + 1;
  std::vector<Candidate> t1;
  asc(t1, a, 1, i);
  asc(t1, b, 1, 1);
  asc(t1, a, i + 1, na);
  asc(t1, b, 2, nb);
  asc(t1, c, 1, nc);
  std::vector<Candidate> t2;
  desc(t2, b, i, 1);
  asc(t2, b, i + 1, nb);
  asc(t2, a, 1, na);
  asc(t2, c, 1, nc);
  std::vector<Candidate> t3;
  asc(t3, b, 1, nb);
  asc(t3, a, 1, na);
  asc(t3, c, 1, nc);
  std::vector<LinearOrder> ballots;
  repeat(ballots, t1, q);
  repeat(ballots, t2, q);
  repeat(ballots, t3, 1);
  return ballots;
}

// Plurality (approval:1) splits three front-runners so one ballot swap
// decides the tie; under approval:j the protected candidate's support is too
// broad to dislodge.
std::vector<LinearOrder> build_approval_j_not_geq_1(int n, int m, int j) {
  const int a = 0, b = 1, c = 2;
  const int d = 3, nd = m - 3;
  std::vector<LinearOrder> ballots;
  if (n % 2 == 0) {
    const int q = n / 2;
    std::vector<Candidate> t1{b, a};
    asc(t1, d, 1, j - 2);
    t1.push_back(c);
    asc(t1, d, j - 1, nd);
    std::vector<Candidate> t2{a, b};
    asc(t2, d, 1, j - 2);
    t2.push_back(c);
    asc(t2, d, j - 1, nd);
    std::vector<Candidate> t3{c, a};
    asc(t3, d, 1, j - 2);
    t3.push_back(b);
    asc(t3, d, j - 1, nd);
    repeat(ballots, t1, q);
    repeat(ballots, t2, q - 1);
    repeat(ballots, t3, 1);
  } else {
    const int q = (n - 1) / 2;
    std::vector<Candidate> t1{b, c};
    asc(t1, d, 1, j - 2);
    t1.push_back(a);
    asc(t1, d, j - 1, nd);
    std::vector<Candidate> t2{a, b};
    asc(t2, d, 1, j - 2);
    t2.push_back(c);
    asc(t2, d, j - 1, nd);
    std::vector<Candidate> t3{c, b};
    asc(t3, d, 1, j - 2);
    t3.push_back(a);
    asc(t3, d, j - 1, nd);
    repeat(ballots, t1, q);
    repeat(ballots, t2, q);
    repeat(ballots, t3, 1);
  }
  return ballots;
}

// Narrow fields (m < 2j): with few candidates below the approval:j line the
// robust side cannot be gamed, while approval:i still splits the electorate
// into two swappable halves (wide sub-case) or hands the win to a candidate
// one dissenter can overturn (tight sub-case).
std::vector<LinearOrder> build_approval_j_not_geq_i_smallm(
    int n, int m, int i, int j, std::optional<std::uint64_t> any_order_seed) {
  std::vector<LinearOrder> ballots;
  if (m >= i + j) {
    const int a = 0, na = 2 * i;
    const int b = 2 * i, nb = j - i;
    const int c = i + j, nc = m - i - j;
    std::vector<Candidate> t1;
    asc(t1, a, 1, i);
    asc(t1, b, 1, nb);
    desc(t1, a, na, i + 1);
    asc(t1, c, 1, nc);
    std::vector<Candidate> t2;
    asc(t2, a, i + 1, na);
    asc(t2, b, 1, nb);
    desc(t2, a, i, 1);
    asc(t2, c, 1, nc);
    repeat(ballots, t1, n / 2);
    repeat(ballots, t2, n - n / 2);
    return ballots;
  }
  const int a = 0, na = m - j;
  const int b = m - j, nb = j - i;
  const int c = m - i, nc = i;
  const int head_b = i + j - m;  // top-i = these b's plus the whole a block
  std::optional<SmallRng> rng;
  if (any_order_seed) rng.emplace(*any_order_seed);
  for (int voter = 0; voter < n - 1; ++voter) {
    std::vector<Candidate> t1;
    asc(t1, b, 1, head_b);
    asc(t1, a, 1, na);
    const std::size_t fixed = t1.size();
    asc(t1, b, head_b + 1, nb);
    asc(t1, c, 1, nc);
    if (rng) shuffle_from(t1, fixed, *rng);
    ballots.emplace_back(t1);
  }
  std::vector<Candidate> t2;
  asc(t2, c, 1, nc);
  asc(t2, b, 1, nb);
  asc(t2, a, 1, na);
  repeat(ballots, t2, 1);
  return ballots;
}

// Head-to-head pair with a tail of fillers: under borda:j the runner-up's
// supporter can bury the leader, under borda:i the lead is too wide.
std::vector<LinearOrder> build_borda_i_not_geq_j_even(int n, int m, int j) {
  const int q = n / 2;
  const int a = 0, b = 1;
  const int c = 2, nc = m - 2;
  std::vector<Candidate> t1{a};
  asc(t1, c, 1, j - 2);
  t1.push_back(b);
  asc(t1, c, j - 1, nc);
  std::vector<Candidate> t2{b, a};
  desc(t2, c, nc, 1);
  std::vector<Candidate> t3{a};
  asc(t3, c, 1, nc);
  t3.push_back(b);
  std::vector<Candidate> t4{b};
  desc(t4, c, nc, 1);
  t4.push_back(a);
  std::vector<LinearOrder> ballots;
  repeat(ballots, t1, 1);
  repeat(ballots, t2, 1);
  repeat(ballots, t3, q - 1);
  repeat(ballots, t4, q - 1);
  return ballots;
}

std::vector<LinearOrder> build_borda_i_not_geq_j_odd(int n, int m, int j) {
  const int q = (n - 1) / 2;
  const int a = 0, b = 1;
  const int c = 2, nc = m - 2;
  std::vector<Candidate> t1{b};
  asc(t1, c, 1, j - 2);
  t1.push_back(a);
  asc(t1, c, j - 1, nc);
  std::vector<Candidate> t2{b, a};
  asc(t2, c, 1, nc);
  std::vector<Candidate> t3{a, b};
  desc(t3, c, nc, 1);
  std::vector<LinearOrder> ballots;
  repeat(ballots, t1, 1);
  repeat(ballots, t2, q);
  repeat(ballots, t3, q);
  return ballots;
}

std::vector<LinearOrder> build_borda_j_not_geq_i_odd(int n, int m, int i) {
  const int q = (n - 1) / 2;
  const int a = 0, b = 1;
  const int c = 2, nc = m - 2;
  std::vector<Candidate> t1{a, b};
  desc(t1, c, nc, 1);
  std::vector<Candidate> t2{b, a};
  asc(t2, c, 1, nc);
  std::vector<Candidate> t3{b};
  asc(t3, c, 1, nc);
  t3.push_back(a);
  std::vector<Candidate> t4;
  asc(t4, c, 1, i);
  t4.push_back(b);
  asc(t4, c, i + 1, nc);
  t4.push_back(a);
  std::vector<LinearOrder> ballots;
  repeat(ballots, t1, q);
  repeat(ballots, t2, q - 1);
  repeat(ballots, t3, 1);
  repeat(ballots, t4, 1);
  return ballots;
}

std::vector<LinearOrder> build_borda_j_not_geq_i_even(int n, int m, int i) {
  const int q = n / 2;
  const int a = 0, b = 1;
  const int c = 2, nc = m - 2;
  std::vector<Candidate> t1{a, b};
  desc(t1, c, nc, 1);
  std::vector<Candidate> t2{b, a};
  asc(t2, c, 1, nc);
  std::vector<Candidate> t3{b};
  asc(t3, c, 1, nc);
  t3.push_back(a);
  std::vector<Candidate> t4;
  asc(t4, c, 1, i);
  t4.push_back(b);
  asc(t4, c, i + 1, nc);
  t4.push_back(a);
  std::vector<Candidate> t5;
  desc(t5, c, nc, nc - i + 1);
  t5.push_back(b);
  desc(t5, c, nc - i, 1);
  t5.push_back(a);
  std::vector<LinearOrder> ballots;
  repeat(ballots, t1, q - 1);
  repeat(ballots, t2, q - 2);
  repeat(ballots, t3, 1);
  repeat(ballots, t4, 1);
  repeat(ballots, t5, 1);
  return ballots;
}

std::vector<LinearOrder> build_borda_j_not_geq_i_n4(int m, int i, int j) {
  const int a = 0, b = 1;
  const int c = 2, nc = m - 2;
  std::vector<LinearOrder> ballots;
  if (i > 1) {
    std::vector<Candidate> t1{b};
    desc(t1, c, nc, 1);
    t1.push_back(a);
    std::vector<Candidate> t2{a, b};
    asc(t2, c, 1, nc);
    std::vector<Candidate> t3{a};
    asc(t3, c, 1, j - 2);
    t3.push_back(b);
    asc(t3, c, j - 1, nc);
    repeat(ballots, t1, 2);
    repeat(ballots, t2, 1);
    repeat(ballots, t3, 1);
  } else {
    std::vector<Candidate> t1{b, a};
    desc(t1, c, nc, 1);
    std::vector<Candidate> t2{a};
    asc(t2, c, 1, nc);
    t2.push_back(b);
    std::vector<Candidate> t3;
    asc(t3, c, 1, 1);
    t3.push_back(a);
    asc(t3, c, 2, nc);
    t3.push_back(b);
    repeat(ballots, t1, 2);
    repeat(ballots, t2, 1);
    repeat(ballots, t3, 1);
  }
  return ballots;
}

// Two voters, opposed: truncated scores let the loser's supporter flip the
// outcome, while full Borda pins every candidate into an unbreakable tie.
std::vector<LinearOrder> build_borda_full_not_geq_k(int m) {
  const int a = 0, na = m - 2;
  const int b = m - 2, c = m - 1;
  std::vector<Candidate> v1{b, c};
  asc(v1, a, 1, na);
  std::vector<Candidate> v2{c};
  asc(v2, a, 1, na);
  v2.push_back(b);
  std::vector<LinearOrder> ballots;
  repeat(ballots, v1, 1);
  repeat(ballots, v2, 1);
  return ballots;
}

std::optional<ClaimId> cover_approval_j_not_geq_i(const WitnessParams& p) {
  if (p.n < 2) return std::nullopt;
  if (p.i == 1) return ClaimId::APPROVAL_J_NOT_GEQ_1;
  if (p.m >= 2 * p.j) {
    return p.n % 2 == 0 ? ClaimId::APPROVAL_J_NOT_GEQ_I_EVEN
                        : ClaimId::APPROVAL_J_NOT_GEQ_I_ODD;
  }
  if (p.m >= 2 * p.i) return ClaimId::APPROVAL_J_NOT_GEQ_I_SMALLM;
  return std::nullopt;
}

std::optional<ClaimId> cover_borda_i_not_geq_j(const WitnessParams& p) {
  if (p.n < 3) return std::nullopt;
  return p.n % 2 == 0 ? ClaimId::BORDA_I_NOT_GEQ_J_EVEN
                      : ClaimId::BORDA_I_NOT_GEQ_J_ODD;
}

std::optional<ClaimId> cover_borda_j_not_geq_i(const WitnessParams& p) {
  if (p.n < 3) return std::nullopt;
  if (p.n % 2 == 1) {
    // The odd-n family breaks down at n = 3 for i >= 2; no family covers
    // that corner (exhaustive comparison still shows incomparability there).
    if (p.n == 3 && p.i >= 2) return std::nullopt;
    return ClaimId::BORDA_J_NOT_GEQ_I_ODD;
  }
  if (p.n == 4) return ClaimId::BORDA_J_NOT_GEQ_I_N4;
  return ClaimId::BORDA_J_NOT_GEQ_I_EVEN;
}

enum class Shape { IJ, JOnly, K, HierK };

Shape shape_of(ClaimId claim) {
  switch (claim) {
    case ClaimId::APPROVAL_J_NOT_GEQ_1:
      return Shape::JOnly;
    case ClaimId::BORDA_FULL_NOT_GEQ_K:
      return Shape::K;
    case ClaimId::BORDA_N2_HIERARCHY:
      return Shape::HierK;
    default:
      return Shape::IJ;
  }
}

int clamp_lo(int structural, const std::optional<GridRange>& r) {
  return r ? std::max(structural, r->lo) : structural;
}

int clamp_hi(int structural, const std::optional<GridRange>& r) {
  return r ? std::min(structural, r->hi) : structural;
}

std::vector<WitnessParams> grid_tuples(ClaimId claim, const ClaimGrid& grid) {
  std::vector<WitnessParams> out;
  for (int n = grid.n.lo; n <= grid.n.hi; ++n) {
    for (int m = grid.m.lo; m <= grid.m.hi; ++m) {
      switch (shape_of(claim)) {
        case Shape::IJ:
          for (int i = clamp_lo(1, grid.i); i <= clamp_hi(m - 2, grid.i); ++i) {
            for (int j = clamp_lo(i + 1, grid.j); j <= clamp_hi(m - 1, grid.j);
                 ++j) {
              out.push_back({n, m, i, j, 0});
            }
          }
          break;
        case Shape::JOnly:
          if (grid.i && !grid.i->contains(1)) break;
          for (int j = clamp_lo(2, grid.j); j <= clamp_hi(m - 1, grid.j); ++j) {
            out.push_back({n, m, 1, j, 0});
          }
          break;
        case Shape::K:
          for (int k = clamp_lo(1, grid.k); k <= clamp_hi(m - 2, grid.k); ++k) {
            out.push_back({n, m, 0, 0, k});
          }
          break;
        case Shape::HierK:
          for (int k = clamp_lo(1, grid.k); k <= clamp_hi(m - 3, grid.k); ++k) {
            out.push_back({n, m, 0, 0, k});
          }
          break;
      }
    }
  }
  return out;
}

struct FamilyRun {
  bool passed;
  std::string detail;
};

FamilyRun run_family(ClaimId claim, const WitnessParams& p,
                     const VerifyClaimOptions& options) {
  const VerifyWitnessOptions check{.brute_force_robust =
                                       p.m <= options.brute_force_max_m};
  const WitnessCase canonical = build_witness(claim, p);
  const WitnessVerification v = verify_witness(canonical, check);
  if (!v.passed) {
    return {false, std::string(to_string(claim)) + ": " + v.failure};
  }
  if (claim == ClaimId::APPROVAL_J_NOT_GEQ_I_SMALLM && p.m < p.i + p.j) {
    for (int t = 1; t <= options.any_order_reruns; ++t) {
      const std::uint64_t seed = mix_seed(options.seed, {p.n, p.m, p.i, p.j, t});
      const WitnessCase shuffled = build_witness(claim, p, seed);
      const WitnessVerification vs = verify_witness(shuffled, check);
      if (!vs.passed) {
        return {false, std::string(to_string(claim)) + ": shuffled fill " +
                           std::to_string(t) + " failed: " + vs.failure};
      }
    }
  }
  return {true, std::string(to_string(claim))};
}

TupleResult run_tuple(ClaimId claim, const WitnessParams& p,
                      const VerifyClaimOptions& options) {
  switch (claim) {
    case ClaimId::THM_APPROVAL_INCOMPARABLE: {
      const std::optional<ClaimId> back = cover_approval_j_not_geq_i(p);
      if (!back) {
        return {p, TupleStatus::Uncovered,
                "no family shows approval:" + std::to_string(p.j) +
                    " not covering approval:" + std::to_string(p.i) + " at " +
                    param_text(p)};
      }
      const FamilyRun fwd = run_family(ClaimId::APPROVAL_I_NOT_GEQ_J, p, options);
      if (!fwd.passed) return {p, TupleStatus::Fail, fwd.detail};
      const FamilyRun bwd = run_family(*back, p, options);
      if (!bwd.passed) return {p, TupleStatus::Fail, bwd.detail};
      return {p, TupleStatus::Pass, fwd.detail + " + " + bwd.detail};
    }
    case ClaimId::THM_BORDA_INCOMPARABLE: {
      const std::optional<ClaimId> fwd_claim = cover_borda_i_not_geq_j(p);
      const std::optional<ClaimId> bwd_claim = cover_borda_j_not_geq_i(p);
      if (!fwd_claim || !bwd_claim) {
        return {p, TupleStatus::Uncovered,
                "no family covers " + param_text(p)};
      }
      const FamilyRun fwd = run_family(*fwd_claim, p, options);
      if (!fwd.passed) return {p, TupleStatus::Fail, fwd.detail};
      const FamilyRun bwd = run_family(*bwd_claim, p, options);
      if (!bwd.passed) return {p, TupleStatus::Fail, bwd.detail};
      return {p, TupleStatus::Pass, fwd.detail + " + " + bwd.detail};
    }
    case ClaimId::BORDA_N2_HIERARCHY: {
      CompareOptions scan;
      scan.budget = options.budget;
      scan.threads = options.threads;
      const auto counterexample =
          check_inclusion(RuleSpec::borda(p.k + 1), RuleSpec::borda(p.k), 2,
                          p.m, scan);
      if (counterexample) {
        return {p, TupleStatus::Fail,
                "found a profile manipulable under borda:" +
                    std::to_string(p.k) + " but not borda:" +
                    std::to_string(p.k + 1)};
      }
      return {p, TupleStatus::Pass,
              "inclusion holds exhaustively at " + param_text(p)};
    }
    default: {
      const FamilyRun run = run_family(claim, p, options);
      return {p, run.passed ? TupleStatus::Pass : TupleStatus::Fail,
              run.detail};
    }
  }
}

}  // namespace

std::string_view to_string(ClaimId claim) {
  for (const auto& [id, name] : kClaimNames) {
    if (id == claim) return name;
  }
  throw std::logic_error("unreachable claim value");
}

ClaimId parse_claim(std::string_view name) {
  for (const auto& [id, claim_name] : kClaimNames) {
    if (claim_name == name) return id;
  }
  std::string known;
  for (const auto& [id, claim_name] : kClaimNames) {
    if (!known.empty()) known += ", ";
    known += claim_name;
  }
  throw std::invalid_argument("unknown claim \"" + std::string(name) +
                              "\"; expected one of: " + known);
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims = [] {
    std::vector<ClaimId> out;
    for (const auto& [id, name] : kClaimNames) out.push_back(id);
    return out;
  }();
  return claims;
}

PreconditionCheck check_preconditions(ClaimId claim,
                                      const WitnessParams& p) {
  std::string violation;
  require(p.m >= 1, claim, "m >= 1", &violation);
  require(p.n >= 1, claim, "n >= 1", &violation);
  if (!violation.empty()) return {false, violation};
  switch (claim) {
    case ClaimId::APPROVAL_I_NOT_GEQ_J:
      require(p.n >= 2, claim, "n >= 2", &violation);
      check_ij(claim, p, &violation);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_I_EVEN:
      require(p.n >= 2, claim, "n >= 2", &violation);
      require(p.n % 2 == 0, claim, "n even", &violation);
      check_ij(claim, p, &violation);
      require(p.m >= 2 * p.j - 1, claim, "m >= 2j-1", &violation);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_I_ODD:
      require(p.n >= 3, claim, "n >= 3", &violation);
      require(p.n % 2 == 1, claim, "n odd", &violation);
      require(p.i >= 2, claim, "i >= 2", &violation);
      check_ij(claim, p, &violation);
      require(p.m >= 2 * p.j - 1, claim, "m >= 2j-1", &violation);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_1:
      require(p.n >= 2, claim, "n >= 2", &violation);
      require(p.i == 1, claim, "i = 1", &violation);
      require(p.j >= 2, claim, "j >= 2", &violation);
      require(p.j <= p.m - 1, claim, "j <= m-1", &violation);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_I_SMALLM:
      require(p.n >= 2, claim, "n >= 2", &violation);
      require(p.i >= 2, claim, "i >= 2", &violation);
      check_ij(claim, p, &violation);
      require(p.m < 2 * p.j, claim, "m < 2j", &violation);
      require(p.m >= 2 * p.i, claim,
              "m >= 2i (the tight sub-case places i+j-m leading candidates "
              "and needs i+j-m <= j-i)",
              &violation);
      break;
    case ClaimId::BORDA_I_NOT_GEQ_J_EVEN:
      require(p.n >= 2, claim, "n >= 2", &violation);
      require(p.n % 2 == 0, claim, "n even", &violation);
      check_ij(claim, p, &violation);
      break;
    case ClaimId::BORDA_I_NOT_GEQ_J_ODD:
      require(p.n >= 3, claim, "n >= 3", &violation);
      require(p.n % 2 == 1, claim, "n odd", &violation);
      check_ij(claim, p, &violation);
      break;
    case ClaimId::BORDA_J_NOT_GEQ_I_ODD:
      require(p.n >= 3, claim, "n >= 3", &violation);
      require(p.n % 2 == 1, claim, "n odd", &violation);
      check_ij(claim, p, &violation);
      // At n = 3 the lone A-first voter is the only support A has, so
      // burying B leaves the top filler ahead of the intended tie; the
      // construction needs a second A-first voter unless i = 1.
      require(p.i == 1 || p.n >= 5, claim, "i = 1 or n >= 5", &violation);
      break;
    case ClaimId::BORDA_J_NOT_GEQ_I_EVEN:
      require(p.n >= 6, claim, "n >= 6", &violation);
      require(p.n % 2 == 0, claim, "n even", &violation);
      check_ij(claim, p, &violation);
      break;
    case ClaimId::BORDA_J_NOT_GEQ_I_N4:
      require(p.n == 4, claim, "n = 4", &violation);
      check_ij(claim, p, &violation);
      break;
    case ClaimId::BORDA_FULL_NOT_GEQ_K:
      require(p.n == 2, claim, "n = 2", &violation);
      require(p.m >= 3, claim, "m >= 3", &violation);
      require(p.k >= 1, claim, "k >= 1", &violation);
      require(p.k <= p.m - 2, claim, "k <= m-2", &violation);
      break;
    case ClaimId::THM_APPROVAL_INCOMPARABLE:
      require(p.n >= 2, claim, "n >= 2", &violation);
      check_ij(claim, p, &violation);
      break;
    case ClaimId::THM_BORDA_INCOMPARABLE:
      require(p.n >= 3, claim, "n >= 3", &violation);
      check_ij(claim, p, &violation);
      break;
    case ClaimId::BORDA_N2_HIERARCHY:
      require(p.n == 2, claim, "n = 2", &violation);
      require(p.k >= 1, claim, "k >= 1", &violation);
      require(p.k <= p.m - 3, claim, "k <= m-3 (m > k+2)", &violation);
      break;
  }
  return {violation.empty(), violation};
}

WitnessCase build_witness(ClaimId claim, const WitnessParams& params,
                          std::optional<std::uint64_t> any_order_seed) {
  const PreconditionCheck pre = check_preconditions(claim, params);
  if (!pre.ok) throw std::invalid_argument(pre.violation);
  const int n = params.n, m = params.m, i = params.i, j = params.j,
            k = params.k;
  std::vector<LinearOrder> ballots;
  RuleSpec manip = RuleSpec::approval(1);
  RuleSpec robust = RuleSpec::approval(1);
  switch (claim) {
    case ClaimId::APPROVAL_I_NOT_GEQ_J:
      ballots = build_approval_i_not_geq_j(n, m, i, j);
      manip = RuleSpec::approval(j);
      robust = RuleSpec::approval(i);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_I_EVEN:
      ballots = build_approval_j_not_geq_i_even(n, m, j);
      manip = RuleSpec::approval(i);
      robust = RuleSpec::approval(j);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_I_ODD:
      ballots = build_approval_j_not_geq_i_odd(n, m, i, j);
      manip = RuleSpec::approval(i);
      robust = RuleSpec::approval(j);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_1:
      ballots = build_approval_j_not_geq_1(n, m, j);
      manip = RuleSpec::approval(1);
      robust = RuleSpec::approval(j);
      break;
    case ClaimId::APPROVAL_J_NOT_GEQ_I_SMALLM:
      ballots = build_approval_j_not_geq_i_smallm(n, m, i, j, any_order_seed);
      manip = RuleSpec::approval(i);
      robust = RuleSpec::approval(j);
      break;
    case ClaimId::BORDA_I_NOT_GEQ_J_EVEN:
      ballots = build_borda_i_not_geq_j_even(n, m, j);
      manip = RuleSpec::borda(j);
      robust = RuleSpec::borda(i);
      break;
    case ClaimId::BORDA_I_NOT_GEQ_J_ODD:
      ballots = build_borda_i_not_geq_j_odd(n, m, j);
      manip = RuleSpec::borda(j);
      robust = RuleSpec::borda(i);
      break;
    case ClaimId::BORDA_J_NOT_GEQ_I_ODD:
      ballots = build_borda_j_not_geq_i_odd(n, m, i);
      manip = RuleSpec::borda(i);
      robust = RuleSpec::borda(j);
      break;
    case ClaimId::BORDA_J_NOT_GEQ_I_EVEN:
      ballots = build_borda_j_not_geq_i_even(n, m, i);
      manip = RuleSpec::borda(i);
      robust = RuleSpec::borda(j);
      break;
    case ClaimId::BORDA_J_NOT_GEQ_I_N4:
      ballots = build_borda_j_not_geq_i_n4(m, i, j);
      manip = RuleSpec::borda(i);
      robust = RuleSpec::borda(j);
      break;
    case ClaimId::BORDA_FULL_NOT_GEQ_K:
      ballots = build_borda_full_not_geq_k(m);
      manip = RuleSpec::borda(k);
      robust = RuleSpec::borda(m - 1);
      break;
    case ClaimId::THM_APPROVAL_INCOMPARABLE:
    case ClaimId::THM_BORDA_INCOMPARABLE:
    case ClaimId::BORDA_N2_HIERARCHY:
      throw std::invalid_argument(
          std::string(to_string(claim)) +
          " is a composite claim with no single profile; run verify_claim");
  }
  return WitnessCase{claim, params, Profile(m, std::move(ballots)), manip,
                     robust};
}

WitnessVerification verify_witness(const WitnessCase& c,
                                   const VerifyWitnessOptions& options) {
  const int m = c.profile.num_candidates();
  WitnessVerification out{false,
                          std::nullopt,
                          std::nullopt,
                          tally(c.profile, scoring_vector(c.manip_rule, m)),
                          tally(c.profile, scoring_vector(c.robust_rule, m)),
                          ""};
  out.manip_witness = find_manipulation(c.profile, c.manip_rule);
  out.robust_witness = find_manipulation(c.profile, c.robust_rule);
  if (!out.manip_witness) {
    out.failure = "expected a manipulation under " + c.manip_rule.to_string() +
                  " but found none";
    return out;
  }
  if (out.robust_witness) {
    out.failure = "expected " + c.robust_rule.to_string() +
                  " to be safe, but voter " +
                  std::to_string(out.robust_witness->voter) +
                  " can move the win from candidate " +
                  std::to_string(out.robust_witness->sincere_winner) + " to " +
                  std::to_string(out.robust_witness->new_winner);
    return out;
  }
  if (options.brute_force_robust) {
    const auto brute = brute_force_manipulation(c.profile, c.robust_rule);
    if (brute.has_value()) {
      out.robust_witness = brute;
      out.failure = "brute force found a manipulation under " +
                    c.robust_rule.to_string() +
                    " that the normal-form test missed";
      return out;
    }
  }
  out.passed = true;
  return out;
}

ClaimSummary verify_claim(ClaimId claim, const ClaimGrid& grid,
                          const VerifyClaimOptions& options) {
  if (options.threads < 1) throw std::invalid_argument("threads must be >= 1");
  ClaimSummary summary;
  summary.claim = claim;
  std::vector<WitnessParams> attempted;
  for (const WitnessParams& p : grid_tuples(claim, grid)) {
    if (check_preconditions(claim, p).ok) {
      attempted.push_back(p);
    } else {
      summary.skipped += 1;
    }
  }

  std::vector<TupleResult> results(attempted.size());
  // The hierarchy claim runs exhaustive scans itself, so it keeps the thread
  // budget for them instead of fanning out across tuples.
  const bool tuple_parallel =
      claim != ClaimId::BORDA_N2_HIERARCHY && options.threads > 1;
  if (!tuple_parallel) {
    for (std::size_t t = 0; t < attempted.size(); ++t) {
      results[t] = run_tuple(claim, attempted[t], options);
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    const int workers = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(options.threads), attempted.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = cursor.fetch_add(1); t < attempted.size();
             t = cursor.fetch_add(1)) {
          results[t] = run_tuple(claim, attempted[t], options);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (TupleResult& r : results) {
    switch (r.status) {
      case TupleStatus::Pass: summary.passed += 1; break;
      case TupleStatus::Fail: summary.failed += 1; break;
      case TupleStatus::Uncovered: summary.uncovered += 1; break;
    }
    summary.results.push_back(std::move(r));
  }
  return summary;
}

}  // namespace votemanip
