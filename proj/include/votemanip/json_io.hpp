#pragma once

#include "json.hpp"
#include "votemanip/ballots.hpp"
#include "votemanip/manipulation.hpp"
#include "votemanip/ps_compare.hpp"
#include "votemanip/scoring.hpp"
#include "votemanip/witnesses.hpp"

namespace votemanip {

/// All emitted documents preserve key insertion order, so output is
/// byte-stable across runs.
using Json = nlohmann::ordered_json;

Json ballot_to_json(const LinearOrder& ballot);
LinearOrder ballot_from_json(const Json& doc);

/// {"m": 3, "ballots": [[0,1,2], ...]} — most-preferred candidate first.
Json profile_to_json(const Profile& p);

/// {"m": 3, "counts": [{"ballot": [0,1,2], "n": 2}, ...]}
Json anonymous_profile_to_json(const AnonymousProfile& a);

/// Reads either the ordered or the anonymous form (expanding counts).
Profile profile_from_json(const Json& doc);
AnonymousProfile anonymous_profile_from_json(const Json& doc);

/// {"winner": 0, "scores": {"0": 2, "1": 2, "2": 0}}
Json winner_report_to_json(const ScoreTable& scores);

/// {"voter": 1, "misreport": [...], "sincere_winner": 0, "new_winner": 2}
Json witness_to_json(const ManipulationWitness& w);

/// {"f": ..., "g": ..., "n": ..., "m": ..., "relation": ...,
///  "witnesses": {"g_not_f": ..., "f_not_g": ...}, "counts": {...}}
/// with null for an absent witness; "counts" is omitted after a fast scan.
Json comparison_report_to_json(const ComparisonReport& report);

/// Claim name, tallies, and one entry per attempted tuple.
Json claim_summary_to_json(const ClaimSummary& summary);

}  // namespace votemanip
