#include "votemanip/json_io.hpp"

#include <stdexcept>
#include <string>

namespace votemanip {

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw std::invalid_argument("profile JSON is missing the \"" +
                                std::string(name) + "\" field");
  }
  return doc.at(name);
}

int int_field(const Json& doc, const char* name) {
  const Json& value = field(doc, name);
  if (!value.is_number_integer()) {
    throw std::invalid_argument("profile JSON field \"" + std::string(name) +
                                "\" must be an integer");
  }
  return value.get<int>();
}

}  // namespace

Json ballot_to_json(const LinearOrder& ballot) {
  return Json(ballot.ranking());
}

LinearOrder ballot_from_json(const Json& doc) {
  if (!doc.is_array()) {
    throw std::invalid_argument(
        "a ballot must be an array of candidate ids, most-preferred first");
  }
  std::vector<Candidate> ranking;
  ranking.reserve(doc.size());
  for (const Json& entry : doc) {
    if (!entry.is_number_integer()) {
      throw std::invalid_argument("ballot entries must be candidate ids");
    }
    ranking.push_back(entry.get<Candidate>());
  }
  return LinearOrder(std::move(ranking));
}

Json profile_to_json(const Profile& p) {
  Json ballots = Json::array();
  for (const LinearOrder& b : p.ballots()) ballots.push_back(ballot_to_json(b));
  return Json{{"m", p.num_candidates()}, {"ballots", std::move(ballots)}};
}

Json anonymous_profile_to_json(const AnonymousProfile& a) {
  Json counts = Json::array();
  for (const BallotCount& entry : a.counts()) {
    counts.push_back(
        Json{{"ballot", ballot_to_json(entry.ballot)}, {"n", entry.count}});
  }
  return Json{{"m", a.num_candidates()}, {"counts", std::move(counts)}};
}

Profile profile_from_json(const Json& doc) {
  const int m = int_field(doc, "m");
  if (doc.contains("ballots")) {
    const Json& ballots = doc.at("ballots");
    if (!ballots.is_array() || ballots.empty()) {
      throw std::invalid_argument(
          "profile JSON field \"ballots\" must be a non-empty array");
    }
    std::vector<LinearOrder> parsed;
    parsed.reserve(ballots.size());
    for (const Json& b : ballots) parsed.push_back(ballot_from_json(b));
    return Profile(m, std::move(parsed));
  }
  if (doc.contains("counts")) return expand(anonymous_profile_from_json(doc));
  throw std::invalid_argument(
      "profile JSON needs either a \"ballots\" or a \"counts\" field");
}

AnonymousProfile anonymous_profile_from_json(const Json& doc) {
  const int m = int_field(doc, "m");
  if (doc.contains("counts")) {
    const Json& counts = doc.at("counts");
    if (!counts.is_array() || counts.empty()) {
      throw std::invalid_argument(
          "profile JSON field \"counts\" must be a non-empty array");
    }
    std::vector<BallotCount> parsed;
    parsed.reserve(counts.size());
    for (const Json& entry : counts) {
      parsed.push_back(BallotCount{ballot_from_json(field(entry, "ballot")),
                                   int_field(entry, "n")});
    }
    return AnonymousProfile(m, std::move(parsed));
  }
  if (doc.contains("ballots")) return anonymize(profile_from_json(doc));
  throw std::invalid_argument(
      "profile JSON needs either a \"ballots\" or a \"counts\" field");
}

Json winner_report_to_json(const ScoreTable& scores) {
  Json table = Json::object();
  for (int c = 0; c < scores.num_candidates(); ++c) {
    table[std::to_string(c)] = scores.at(c);
  }
  return Json{{"winner", scores.winner()}, {"scores", std::move(table)}};
}

Json witness_to_json(const ManipulationWitness& w) {
  return Json{{"voter", w.voter},
              {"misreport", ballot_to_json(w.misreport)},
              {"sincere_winner", w.sincere_winner},
              {"new_winner", w.new_winner}};
}

Json comparison_report_to_json(const ComparisonReport& report) {
  Json witnesses = Json::object();
  witnesses["g_not_f"] = report.witness_g_not_f
                             ? anonymous_profile_to_json(*report.witness_g_not_f)
                             : Json(nullptr);
  witnesses["f_not_g"] = report.witness_f_not_g
                             ? anonymous_profile_to_json(*report.witness_f_not_g)
                             : Json(nullptr);
  Json doc{{"f", report.f.to_string()},
           {"g", report.g.to_string()},
           {"n", report.n},
           {"m", report.m},
           {"relation", std::string(to_string(report.relation))},
           {"witnesses", std::move(witnesses)}};
  if (report.counts) {
    doc["counts"] = Json{{"profiles_scanned", report.counts->profiles_scanned},
                         {"manipulable_f", report.counts->manipulable_f},
                         {"manipulable_g", report.counts->manipulable_g},
                         {"manipulable_both", report.counts->manipulable_both}};
  }
  return doc;
}

Json claim_summary_to_json(const ClaimSummary& summary) {
  Json results = Json::array();
  for (const TupleResult& r : summary.results) {
    Json params{{"n", r.params.n}, {"m", r.params.m}};
    if (r.params.j > 0) {
      params["i"] = r.params.i;
      params["j"] = r.params.j;
    }
    if (r.params.k > 0) params["k"] = r.params.k;
    const char* status = r.status == TupleStatus::Pass       ? "pass"
                         : r.status == TupleStatus::Fail     ? "fail"
                                                             : "uncovered";
    results.push_back(Json{{"params", std::move(params)},
                           {"status", status},
                           {"detail", r.detail}});
  }
  return Json{{"claim", std::string(to_string(summary.claim))},
              {"passed", summary.passed},
              {"failed", summary.failed},
              {"uncovered", summary.uncovered},
              {"skipped", summary.skipped},
              {"results", std::move(results)}};
}

}  // namespace votemanip
