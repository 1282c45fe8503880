// Command-line front end: winner determination, manipulability checks,
// exhaustive rule comparison, claim verification, and CSV sweeps.
//
// Exit codes: 0 = success / claims hold, 1 = a verification failed,
// 2 = invalid input or enumeration budget exceeded.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "votemanip/json_io.hpp"
#include "votemanip/version.hpp"
#include "votemanip/witnesses.hpp"

namespace vm = votemanip;

namespace {

int parse_int(std::string_view text, const std::string& flag) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(flag + " expects an integer or a..b range, got \"" +
                                std::string(text) + "\"");
  }
  return value;
}

// "3" or "2..6", inclusive.
vm::GridRange parse_range(const std::string& text, const std::string& flag) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, flag);
    return {v, v};
  }
  vm::GridRange r{parse_int(text.substr(0, dots), flag),
                  parse_int(text.substr(dots + 2), flag)};
  if (r.lo > r.hi) {
    throw std::invalid_argument(flag + " range is empty: " + text);
  }
  return r;
}

vm::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("--profile: cannot open " + path);
  }
  try {
    return vm::Json::parse(in);
  } catch (const vm::Json::parse_error& e) {
    throw std::invalid_argument("--profile: " + path + " is not valid JSON (" +
                                e.what() + ")");
  }
}

void print_json(const vm::Json& doc) { std::cout << doc.dump() << "\n"; }

struct WinnerArgs {
  std::string rule;
  std::string profile_path;
};

int run_winner(const WinnerArgs& args) {
  const vm::Profile profile = vm::profile_from_json(load_json(args.profile_path));
  const vm::RuleSpec rule =
      vm::RuleSpec::parse(args.rule, profile.num_candidates());
  const vm::ScoreTable scores =
      vm::tally(profile, vm::scoring_vector(rule, profile.num_candidates()));
  print_json(vm::winner_report_to_json(scores));
  return 0;
}

struct ManipulableArgs {
  std::string rule;
  std::string profile_path;
  std::optional<int> voter;
  bool brute_force = false;
};

int run_manipulable(const ManipulableArgs& args) {
  const vm::Profile profile = vm::profile_from_json(load_json(args.profile_path));
  const vm::RuleSpec rule =
      vm::RuleSpec::parse(args.rule, profile.num_candidates());
  std::optional<vm::ManipulationWitness> witness;
  if (args.brute_force) {
    witness = vm::brute_force_manipulation(profile, rule);
  } else if (args.voter) {
    witness = vm::manipulable_by(*args.voter, profile, rule);
  } else {
    witness = vm::find_manipulation(profile, rule);
  }
  vm::Json doc{{"manipulable", witness.has_value()},
               {"witness", witness ? vm::witness_to_json(*witness)
                                   : vm::Json(nullptr)}};
  print_json(doc);
  return 0;
}

struct CompareArgs {
  std::string f;
  std::string g;
  int n = 0;
  int m = 0;
  std::uint64_t budget = vm::kDefaultProfileBudget;
  int threads = 1;
  bool no_anonymize = false;
  bool fast = false;
  std::string format = "json";
};

std::string csv_count(const std::optional<vm::ComparisonCounts>& counts,
                      std::uint64_t vm::ComparisonCounts::*member) {
  return counts ? std::to_string((*counts).*member) : std::string();
}

void print_report_csv(const vm::ComparisonReport& r) {
  std::cout << "family_f,k_f,family_g,k_g,n,m,relation,profiles_scanned,"
               "manip_f,manip_g,manip_both\n";
  std::cout << vm::to_string(r.f.family) << "," << r.f.k << ","
            << vm::to_string(r.g.family) << "," << r.g.k << "," << r.n << ","
            << r.m << "," << vm::to_string(r.relation) << ","
            << csv_count(r.counts, &vm::ComparisonCounts::profiles_scanned)
            << ","
            << csv_count(r.counts, &vm::ComparisonCounts::manipulable_f) << ","
            << csv_count(r.counts, &vm::ComparisonCounts::manipulable_g) << ","
            << csv_count(r.counts, &vm::ComparisonCounts::manipulable_both)
            << "\n";
}

int run_compare(const CompareArgs& args) {
  const vm::RuleSpec f = vm::RuleSpec::parse(args.f, args.m);
  const vm::RuleSpec g = vm::RuleSpec::parse(args.g, args.m);
  vm::CompareOptions options;
  options.budget = args.budget;
  options.threads = args.threads;
  options.anonymize = !args.no_anonymize;
  options.fast = args.fast;
  const vm::ComparisonReport report =
      vm::compare_exhaustive(f, g, args.n, args.m, options);
  if (args.format == "csv") {
    print_report_csv(report);
    return 0;
  }
  vm::Json doc = vm::comparison_report_to_json(report);
  doc["tool_version"] = vm::kToolVersion;
  doc["flags"] = vm::Json{{"f", args.f},
                          {"g", args.g},
                          {"n", args.n},
                          {"m", args.m},
                          {"budget", args.budget},
                          {"threads", args.threads},
                          {"anonymize", !args.no_anonymize},
                          {"fast", args.fast}};
  print_json(doc);
  return 0;
}

struct VerifyArgs {
  std::string claim;
  std::string n;
  std::string m;
  std::optional<std::string> i;
  std::optional<std::string> j;
  std::optional<std::string> k;
  std::uint64_t seed = 12345;
  int reruns = 10;
  int brute_max_m = 5;
  std::uint64_t budget = vm::kDefaultProfileBudget;
  int threads = 1;
};

std::string tuple_text(const vm::WitnessParams& p) {
  std::string s = "n=" + std::to_string(p.n) + " m=" + std::to_string(p.m);
  if (p.j > 0) s += " i=" + std::to_string(p.i) + " j=" + std::to_string(p.j);
  if (p.k > 0) s += " k=" + std::to_string(p.k);
  return s;
}

int run_verify(const VerifyArgs& args) {
  const vm::ClaimId claim = vm::parse_claim(args.claim);
  vm::ClaimGrid grid;
  grid.n = parse_range(args.n, "--n");
  grid.m = parse_range(args.m, "--m");
  if (args.i) grid.i = parse_range(*args.i, "--i");
  if (args.j) grid.j = parse_range(*args.j, "--j");
  if (args.k) grid.k = parse_range(*args.k, "--k");
  vm::VerifyClaimOptions options;
  options.seed = args.seed;
  options.any_order_reruns = args.reruns;
  options.brute_force_max_m = args.brute_max_m;
  options.budget = args.budget;
  options.threads = args.threads;
  const vm::ClaimSummary summary = vm::verify_claim(claim, grid, options);

  std::cerr << "claim " << vm::to_string(summary.claim) << "\n";
  for (const vm::TupleResult& r : summary.results) {
    const char* status = r.status == vm::TupleStatus::Pass ? "pass"
                         : r.status == vm::TupleStatus::Fail
                             ? "FAIL"
                             : "uncovered";
    std::cerr << "  " << tuple_text(r.params) << "  " << status << "  "
              << r.detail << "\n";
  }
  std::cerr << "passed " << summary.passed << "  failed " << summary.failed
            << "  uncovered " << summary.uncovered << "  skipped "
            << summary.skipped << "\n";

  vm::Json doc = vm::claim_summary_to_json(summary);
  doc["tool_version"] = vm::kToolVersion;
  vm::Json flags{{"claim", args.claim}, {"n", args.n}, {"m", args.m}};
  flags["i"] = args.i ? vm::Json(*args.i) : vm::Json(nullptr);
  flags["j"] = args.j ? vm::Json(*args.j) : vm::Json(nullptr);
  flags["k"] = args.k ? vm::Json(*args.k) : vm::Json(nullptr);
  flags["seed"] = args.seed;
  flags["reruns"] = args.reruns;
  flags["brute-max-m"] = args.brute_max_m;
  flags["budget"] = args.budget;
  flags["threads"] = args.threads;
  doc["flags"] = std::move(flags);
  print_json(doc);
  return summary.ok() ? 0 : 1;
}

struct SweepArgs {
  std::string f;
  std::string g;
  std::string n;
  std::string m;
  std::optional<std::string> kf;
  std::optional<std::string> kg;
  std::uint64_t budget = vm::kDefaultProfileBudget;
  int threads = 1;
};

vm::RuleFamily parse_family(const std::string& text, const std::string& flag) {
  if (text == "approval") return vm::RuleFamily::Approval;
  if (text == "borda") return vm::RuleFamily::Borda;
  throw std::invalid_argument(flag + " must be \"approval\" or \"borda\", got \"" +
                              text + "\"");
}

int run_sweep(const SweepArgs& args) {
  const vm::RuleFamily family_f = parse_family(args.f, "--f");
  const vm::RuleFamily family_g = parse_family(args.g, "--g");
  const vm::GridRange n_range = parse_range(args.n, "--n");
  const vm::GridRange m_range = parse_range(args.m, "--m");
  const vm::GridRange all{1, std::numeric_limits<int>::max()};
  const vm::GridRange kf_range = args.kf ? parse_range(*args.kf, "--k-f") : all;
  const vm::GridRange kg_range = args.kg ? parse_range(*args.kg, "--k-g") : all;

  // Refuse before emitting any rows if some cell would blow the budget.
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
      const std::uint64_t cell = vm::count_anonymous_profiles(n, m);
      if (cell > args.budget) throw vm::BudgetExceeded(cell, args.budget);
    }
  }

  vm::CompareOptions options;
  options.budget = args.budget;
  options.threads = args.threads;
  std::cout << "family_f,k_f,family_g,k_g,n,m,relation,profiles_scanned,"
               "manip_f,manip_g,manip_both\n";
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
      for (int kf = 1; kf <= m - 1; ++kf) {
        if (!kf_range.contains(kf)) continue;
        for (int kg = 1; kg <= m - 1; ++kg) {
          if (!kg_range.contains(kg)) continue;
          const vm::ComparisonReport r = vm::compare_exhaustive(
              vm::RuleSpec{family_f, kf}, vm::RuleSpec{family_g, kg}, n, m,
              options);
          std::cout << vm::to_string(family_f) << "," << kf << ","
                    << vm::to_string(family_g) << "," << kg << "," << n << ","
                    << m << "," << vm::to_string(r.relation) << ","
                    << r.counts->profiles_scanned << ","
                    << r.counts->manipulable_f << ","
                    << r.counts->manipulable_g << ","
                    << r.counts->manipulable_both << "\n";
        }
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(vm::kToolName) +
               " — scoring-rule elections, manipulability, and rule comparison"};
  app.require_subcommand(1);

  WinnerArgs winner_args;
  CLI::App* winner_cmd =
      app.add_subcommand("winner", "Winner and scores for a profile");
  winner_cmd->add_option("--rule", winner_args.rule, "approval:k or borda:k")
      ->required();
  winner_cmd
      ->add_option("--profile", winner_args.profile_path, "profile JSON file")
      ->required();

  ManipulableArgs manip_args;
  CLI::App* manip_cmd = app.add_subcommand(
      "manipulable", "Search for a single-voter manipulation");
  manip_cmd->add_option("--rule", manip_args.rule, "approval:k or borda:k")
      ->required();
  manip_cmd
      ->add_option("--profile", manip_args.profile_path, "profile JSON file")
      ->required();
  CLI::Option* voter_opt = manip_cmd->add_option(
      "--voter", manip_args.voter, "check only this voter (0-based)");
  manip_cmd
      ->add_flag("--brute-force", manip_args.brute_force,
                 "use the exhaustive misreport oracle")
      ->excludes(voter_opt);

  CompareArgs compare_args;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Pathak-Sonmez comparison of two rules at fixed (n, m)");
  compare_cmd->add_option("--f", compare_args.f, "first rule")->required();
  compare_cmd->add_option("--g", compare_args.g, "second rule")->required();
  compare_cmd->add_option("--n", compare_args.n, "number of voters")
      ->required();
  compare_cmd->add_option("--m", compare_args.m, "number of candidates")
      ->required();
  compare_cmd->add_option("--budget", compare_args.budget,
                          "maximum profiles to scan");
  compare_cmd->add_option("--threads", compare_args.threads, "worker threads");
  compare_cmd->add_flag("--no-anonymize", compare_args.no_anonymize,
                        "scan every ordered ballot tuple instead of "
                        "anonymous profiles");
  compare_cmd->add_flag("--fast", compare_args.fast,
                        "stop once the relation is decided; omits counts");
  compare_cmd->add_option("--format", compare_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Verify a claim over a parameter grid");
  verify_cmd->add_option("--claim", verify_args.claim, "claim name")
      ->required();
  verify_cmd->add_option("--n", verify_args.n, "voters, as a..b or a")
      ->required();
  verify_cmd->add_option("--m", verify_args.m, "candidates, as a..b or a")
      ->required();
  verify_cmd->add_option("--i", verify_args.i, "restrict i (default: all)");
  verify_cmd->add_option("--j", verify_args.j, "restrict j (default: all)");
  verify_cmd->add_option("--k", verify_args.k, "restrict k (default: all)");
  verify_cmd->add_option("--seed", verify_args.seed,
                         "seed for shuffled any-order re-runs");
  verify_cmd->add_option("--reruns", verify_args.reruns,
                         "shuffled re-runs per any-order tuple");
  verify_cmd->add_option("--brute-max-m", verify_args.brute_max_m,
                         "brute-force the robust side up to this m");
  verify_cmd->add_option("--budget", verify_args.budget,
                         "maximum profiles per exhaustive scan");
  verify_cmd->add_option("--threads", verify_args.threads, "worker threads");

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "CSV grid of comparisons over (n, m, k_f, k_g) ranges");
  sweep_cmd->add_option("--f", sweep_args.f, "first rule family")->required();
  sweep_cmd->add_option("--g", sweep_args.g, "second rule family")->required();
  sweep_cmd->add_option("--n", sweep_args.n, "voters, as a..b or a")
      ->required();
  sweep_cmd->add_option("--m", sweep_args.m, "candidates, as a..b or a")
      ->required();
  sweep_cmd->add_option("--k-f", sweep_args.kf, "restrict k_f (default: all)");
  sweep_cmd->add_option("--k-g", sweep_args.kg, "restrict k_g (default: all)");
  sweep_cmd->add_option("--budget", sweep_args.budget,
                        "maximum profiles per cell");
  sweep_cmd->add_option("--threads", sweep_args.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*winner_cmd) return run_winner(winner_args);
    if (*manip_cmd) return run_manipulable(manip_args);
    if (*compare_cmd) return run_compare(compare_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*sweep_cmd) return run_sweep(sweep_args);
  } catch (const vm::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
