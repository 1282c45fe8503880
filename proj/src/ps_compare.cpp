#include "votemanip/ps_compare.hpp"

#include <limits>
#include <thread>

#include "votemanip/manipulation.hpp"

namespace votemanip {

namespace {

std::uint64_t pow_checked(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int t = 0; t < exp; ++t) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::domain_error("ordered profile count overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

struct ScanPartial {
  std::uint64_t scanned = 0;
  std::uint64_t manipulable_f = 0;
  std::uint64_t manipulable_g = 0;
  std::uint64_t manipulable_both = 0;
  std::optional<std::uint64_t> first_g_not_f;
  std::optional<std::uint64_t> first_f_not_g;

  // Ranges are merged in enumeration order, so keeping the smaller index
  // preserves "first in canonical order" no matter how work was split.
  void absorb(const ScanPartial& o) {
    scanned += o.scanned;
    manipulable_f += o.manipulable_f;
    manipulable_g += o.manipulable_g;
    manipulable_both += o.manipulable_both;
    if (o.first_g_not_f && (!first_g_not_f || *o.first_g_not_f < *first_g_not_f))
      first_g_not_f = o.first_g_not_f;
    if (o.first_f_not_g && (!first_f_not_g || *o.first_f_not_g < *first_f_not_g))
      first_f_not_g = o.first_f_not_g;
  }
};

// Visits profiles lo..hi-1 of either enumeration and classifies each under
// both rules.
class PairScanner {
public:
  PairScanner(const ScoringVector& vf, const ScoringVector& vg)
      : vf_(vf), vg_(vg) {}

  void visit(std::uint64_t index, const Profile& p, ScanPartial& out) const {
    const bool mf = is_manipulable(p, vf_);
    const bool mg = is_manipulable(p, vg_);
    out.scanned += 1;
    if (mf) out.manipulable_f += 1;
    if (mg) out.manipulable_g += 1;
    if (mf && mg) out.manipulable_both += 1;
    if (mg && !mf && !out.first_g_not_f) out.first_g_not_f = index;
    if (mf && !mg && !out.first_f_not_g) out.first_f_not_g = index;
  }

private:
  const ScoringVector& vf_;
  const ScoringVector& vg_;
};

// Ordered ballot tuples, indexed as base-(m!) numbers, most significant
// digit first. Used by the no-anonymize cross-check mode.
class TupleEnumeration {
public:
  TupleEnumeration(int n, int m)
      : n_(n), m_(m), orders_(enumerate_orders(m)) {
    size_ = pow_checked(orders_.size(), n_);
  }

  std::uint64_t size() const { return size_; }

  Profile profile_at(std::uint64_t index) const {
    return make_profile(digits_at(index));
  }

  template <typename Visitor>
  void for_each(std::uint64_t first, std::uint64_t last,
                Visitor&& visit) const {
    if (first >= last) return;
    std::vector<std::uint32_t> idx = digits_at(first);
    const std::uint32_t top = static_cast<std::uint32_t>(orders_.size()) - 1;
    for (std::uint64_t index = first; index < last; ++index) {
      visit(index, make_profile(idx));
      for (int t = n_ - 1; t >= 0; --t) {
        if (idx[t] < top) {
          idx[t] += 1;
          break;
        }
        idx[t] = 0;
      }
    }
  }

private:
  std::vector<std::uint32_t> digits_at(std::uint64_t index) const {
    std::vector<std::uint32_t> idx(n_);
    const std::uint64_t base = orders_.size();
    for (int t = n_ - 1; t >= 0; --t) {
      idx[t] = static_cast<std::uint32_t>(index % base);
      index /= base;
    }
    return idx;
  }

  Profile make_profile(const std::vector<std::uint32_t>& idx) const {
    std::vector<LinearOrder> ballots;
    ballots.reserve(idx.size());
    for (std::uint32_t v : idx) ballots.push_back(orders_[v]);
    return Profile(m_, std::move(ballots));
  }

  int n_;
  int m_;
  std::uint64_t size_;
  std::vector<LinearOrder> orders_;
};

template <typename Enumeration>
ScanPartial scan_range(const Enumeration& e, const PairScanner& scanner,
                       std::uint64_t lo, std::uint64_t hi, int threads) {
  if (hi - lo < 2 * 1024 || threads <= 1) {
    ScanPartial partial;
    e.for_each(lo, hi, [&](std::uint64_t index, const Profile& p) {
      scanner.visit(index, p, partial);
    });
    return partial;
  }
  const std::uint64_t span = hi - lo;
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(threads, span));
  std::vector<ScanPartial> partials(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t a = lo + span * w / workers;
    const std::uint64_t b = lo + span * (w + 1) / workers;
    pool.emplace_back([&, w, a, b] {
      e.for_each(a, b, [&](std::uint64_t index, const Profile& p) {
        scanner.visit(index, p, partials[w]);
      });
    });
  }
  for (std::thread& t : pool) t.join();
  ScanPartial merged;
  for (const ScanPartial& partial : partials) merged.absorb(partial);
  return merged;
}

template <typename Enumeration, typename StopWhen>
ScanPartial scan_all(const Enumeration& e, const PairScanner& scanner,
                     const CompareOptions& options, StopWhen&& done) {
  if (!options.fast) {
    return scan_range(e, scanner, 0, e.size(), options.threads);
  }
  ScanPartial merged;
  const std::uint64_t chunk =
      std::max<std::uint64_t>(65536, static_cast<std::uint64_t>(options.threads) * 16384);
  std::uint64_t pos = 0;
  while (pos < e.size() && !done(merged)) {
    const std::uint64_t hi = std::min<std::uint64_t>(e.size(), pos + chunk);
    merged.absorb(scan_range(e, scanner, pos, hi, options.threads));
    pos = hi;
  }
  return merged;
}

void validate_scan_inputs(const RuleSpec& f, const RuleSpec& g, int n, int m,
                          const CompareOptions& options) {
  if (n < 1) throw std::invalid_argument("need n >= 1 voters");
  if (options.threads < 1) throw std::invalid_argument("threads must be >= 1");
  scoring_vector(f, m);
  scoring_vector(g, m);
}

template <typename Enumeration>
AnonymousProfile witness_at(const Enumeration& e, std::uint64_t index) {
  return anonymize(e.profile_at(index));
}

void recheck_witness(const AnonymousProfile& a, const RuleSpec& manip,
                     const RuleSpec& robust) {
  const Profile p = expand(a);
  if (!find_manipulation(p, manip) || find_manipulation(p, robust)) {
    throw std::logic_error("comparison scan produced an inconsistent witness");
  }
}

template <typename Enumeration>
ComparisonReport run_comparison(const Enumeration& e, const RuleSpec& f,
                                const RuleSpec& g, int n, int m,
                                const CompareOptions& options) {
  if (e.size() > options.budget) throw BudgetExceeded(e.size(), options.budget);
  const ScoringVector vf = scoring_vector(f, m);
  const ScoringVector vg = scoring_vector(g, m);
  const PairScanner scanner(vf, vg);
  const ScanPartial result =
      scan_all(e, scanner, options, [](const ScanPartial& s) {
        return s.first_g_not_f && s.first_f_not_g;
      });

  ComparisonReport report;
  report.f = f;
  report.g = g;
  report.n = n;
  report.m = m;
  const bool f_covers_g = !result.first_g_not_f.has_value();
  const bool g_covers_f = !result.first_f_not_g.has_value();
  report.relation = f_covers_g
                        ? (g_covers_f ? Relation::Equivalent
                                      : Relation::FStrictlyMore)
                        : (g_covers_f ? Relation::GStrictlyMore
                                      : Relation::Incomparable);
  if (result.first_g_not_f) {
    report.witness_g_not_f = witness_at(e, *result.first_g_not_f);
    recheck_witness(*report.witness_g_not_f, g, f);
  }
  if (result.first_f_not_g) {
    report.witness_f_not_g = witness_at(e, *result.first_f_not_g);
    recheck_witness(*report.witness_f_not_g, f, g);
  }
  if (!options.fast) {
    report.counts = ComparisonCounts{result.scanned, result.manipulable_f,
                                     result.manipulable_g,
                                     result.manipulable_both};
  }
  return report;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "Equivalent";
    case Relation::FStrictlyMore: return "FStrictlyMore";
    case Relation::GStrictlyMore: return "GStrictlyMore";
    case Relation::Incomparable: return "Incomparable";
  }
  throw std::logic_error("unreachable relation value");
}

BudgetExceeded::BudgetExceeded(std::uint64_t profiles, std::uint64_t budget)
    : std::runtime_error("scan would visit " + std::to_string(profiles) +
                         " profiles, over the budget of " +
                         std::to_string(budget)),
      profiles_(profiles),
      budget_(budget) {}

ComparisonReport compare_exhaustive(const RuleSpec& f, const RuleSpec& g,
                                    int n, int m,
                                    const CompareOptions& options) {
  validate_scan_inputs(f, g, n, m, options);
  if (options.anonymize) {
    const AnonymousProfileEnumeration e(n, m);
    return run_comparison(e, f, g, n, m, options);
  }
  const TupleEnumeration e(n, m);
  return run_comparison(e, f, g, n, m, options);
}

std::optional<AnonymousProfile> check_inclusion(const RuleSpec& f,
                                                const RuleSpec& g, int n,
                                                int m,
                                                const CompareOptions& options) {
  validate_scan_inputs(f, g, n, m, options);
  CompareOptions fast_options = options;
  fast_options.fast = true;
  const auto run = [&](const auto& e) -> std::optional<AnonymousProfile> {
    if (e.size() > options.budget)
      throw BudgetExceeded(e.size(), options.budget);
    const ScoringVector vf = scoring_vector(f, m);
    const ScoringVector vg = scoring_vector(g, m);
    const PairScanner scanner(vf, vg);
    const ScanPartial result =
        scan_all(e, scanner, fast_options, [](const ScanPartial& s) {
          return s.first_g_not_f.has_value();
        });
    if (!result.first_g_not_f) return std::nullopt;
    AnonymousProfile a = witness_at(e, *result.first_g_not_f);
    recheck_witness(a, g, f);
    return a;
  };
  if (options.anonymize) {
    return run(AnonymousProfileEnumeration(n, m));
  }
  return run(TupleEnumeration(n, m));
}

}  // namespace votemanip
