// End-to-end checks of the installed binary: pinned output bytes, exit
// codes, and stream separation. The binary path is injected at compile
// time as CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "votemanip/json_io.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string scratch_name(const char* stem) {
  static int counter = 0;
  return std::string(stem) + "_" + std::to_string(::getpid()) + "_" +
         std::to_string(counter++) + ".tmp";
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  const std::string out_path = scratch_name("cli_out");
  const std::string err_path = scratch_name("cli_err");
  const std::string command = std::string("\"") + CLI_PATH + "\" " + args +
                              " >" + out_path + " 2>" + err_path;
  const int raw = std::system(command.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

/// Writes `content` to a scratch file for the duration of one test.
struct TempFile {
  explicit TempFile(const std::string& content)
      : path(scratch_name("cli_profile")) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

votemanip::Json parse_stdout(const CliResult& r) {
  return votemanip::Json::parse(r.out);
}

}  // namespace

TEST_CASE("help succeeds and a missing subcommand is an input error") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("winner").exit_code == 2);  // missing required options
}

TEST_CASE("winner emits the pinned byte sequence for both profile forms") {
  const TempFile ordered(R"({"m":3,"ballots":[[1,0,2],[1,0,2]]})");
  const TempFile counted(R"({"m":3,"counts":[{"ballot":[1,0,2],"n":2}]})");
  const std::string expected =
      "{\"winner\":0,\"scores\":{\"0\":2,\"1\":2,\"2\":0}}\n";

  CliResult r = run_cli("winner --rule approval:2 --profile " + ordered.path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == expected);
  CHECK(r.err.empty());

  r = run_cli("winner --rule approval:2 --profile " + counted.path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == expected);
}

TEST_CASE("winner rejects bad inputs with exit 2 and a reasoned message") {
  const TempFile profile(R"({"m":3,"ballots":[[1,0,2],[1,0,2]]})");
  CliResult r = run_cli("winner --rule approval:9 --profile " + profile.path);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("approval:9 needs 1 <= k <= m-1 (m = 3)") !=
        std::string::npos);
  CHECK(r.out.empty());

  r = run_cli("winner --rule approval:2 --profile no_such_file.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);

  const TempFile missing_m(R"({"ballots":[[0,1,2]]})");
  r = run_cli("winner --rule approval:1 --profile " + missing_m.path);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("missing the \"m\" field") != std::string::npos);
}

TEST_CASE("manipulable answers yes and no with a pinned witness shape") {
  const TempFile profile(R"({"m":3,"ballots":[[1,0,2],[1,0,2]]})");

  CliResult r =
      run_cli("manipulable --rule approval:2 --profile " + profile.path);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"manipulable\":true,\"witness\":{\"voter\":0,\"misreport\":[1,2,0],"
        "\"sincere_winner\":0,\"new_winner\":1}}\n");

  r = run_cli("manipulable --rule borda:1 --profile " + profile.path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"manipulable\":false,\"witness\":null}\n");

  r = run_cli("manipulable --rule approval:2 --voter 1 --profile " +
              profile.path);
  CHECK(parse_stdout(r)["witness"]["voter"] == 1);

  r = run_cli("manipulable --rule approval:2 --brute-force --profile " +
              profile.path);
  CHECK(parse_stdout(r)["manipulable"] == true);

  r = run_cli("manipulable --rule approval:2 --voter 5 --profile " +
              profile.path);
  CHECK(r.exit_code == 2);
}

TEST_CASE("compare reports relation, counts, and the flags that produced them") {
  CliResult r = run_cli("compare --f approval:2 --g approval:1 --n 2 --m 3");
  CHECK(r.exit_code == 0);
  const votemanip::Json doc = parse_stdout(r);
  CHECK(doc["relation"] == "Incomparable");
  CHECK(doc["counts"]["profiles_scanned"] == 21);
  CHECK(doc["counts"]["manipulable_f"] == 6);
  CHECK(doc["counts"]["manipulable_g"] == 2);
  CHECK(doc["tool_version"] == "0.1.0");
  CHECK(doc["flags"]["anonymize"] == true);
  CHECK(doc["flags"]["fast"] == false);

  const votemanip::Json ordered = parse_stdout(
      run_cli("compare --f approval:2 --g approval:1 --n 2 --m 3 "
              "--no-anonymize"));
  CHECK(ordered["relation"] == "Incomparable");
  CHECK(ordered["flags"]["anonymize"] == false);
  CHECK(ordered["counts"]["profiles_scanned"] == 36);

  const votemanip::Json fast = parse_stdout(run_cli(
      "compare --f approval:2 --g approval:1 --n 2 --m 3 --fast"));
  CHECK(fast["relation"] == "Incomparable");
  CHECK_FALSE(fast.contains("counts"));
}

TEST_CASE("compare csv prints a header and one row, blank counts after --fast") {
  const std::string header =
      "family_f,k_f,family_g,k_g,n,m,relation,profiles_scanned,"
      "manip_f,manip_g,manip_both\n";

  CliResult r = run_cli(
      "compare --f approval:2 --g approval:1 --n 2 --m 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == header + "approval,2,approval,1,2,3,Incomparable,21,6,2,0\n");

  r = run_cli(
      "compare --f approval:2 --g approval:1 --n 2 --m 3 --format csv --fast");
  CHECK(r.out == header + "approval,2,approval,1,2,3,Incomparable,,,,\n");
}

TEST_CASE("compare refuses to start a scan it cannot finish") {
  const CliResult r =
      run_cli("compare --f borda:2 --g borda:1 --n 2 --m 4 --budget 10");
  CHECK(r.exit_code == 2);
  CHECK(r.err ==
        "error: scan would visit 300 profiles, over the budget of 10\n");
  CHECK(r.out.empty());
}

TEST_CASE("verify returns 0 on a passing grid and writes JSON to stdout") {
  const CliResult r =
      run_cli("verify --claim APPROVAL_I_NOT_GEQ_J --n 2 --m 3..4");
  CHECK(r.exit_code == 0);
  const votemanip::Json doc = parse_stdout(r);
  CHECK(doc["claim"] == "APPROVAL_I_NOT_GEQ_J");
  CHECK(doc["passed"] == 4);
  CHECK(doc["failed"] == 0);
  CHECK(doc["flags"]["claim"] == "APPROVAL_I_NOT_GEQ_J");
  CHECK(doc["tool_version"] == "0.1.0");
  // the human-readable table goes to stderr, out of the JSON stream
  CHECK(r.err.find("claim APPROVAL_I_NOT_GEQ_J") != std::string::npos);
  CHECK(r.err.find("passed 4  failed 0") != std::string::npos);
}

TEST_CASE("verify reports uncovered composite corners without failing") {
  const CliResult r =
      run_cli("verify --claim THM_BORDA_INCOMPARABLE --n 3 --m 4");
  CHECK(r.exit_code == 0);
  const votemanip::Json doc = parse_stdout(r);
  CHECK(doc["passed"] == 2);
  CHECK(doc["uncovered"] == 1);
  CHECK(r.err.find("uncovered 1") != std::string::npos);
}

TEST_CASE("verify rejects unknown claims, naming the valid ones") {
  const CliResult r = run_cli("verify --claim NO_SUCH_CLAIM --n 2 --m 3");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("APPROVAL_I_NOT_GEQ_J") != std::string::npos);
}

TEST_CASE("verify output is identical whatever the worker count") {
  const std::string grid = " --n 2..4 --m 3..5";
  const CliResult one =
      run_cli("verify --claim APPROVAL_J_NOT_GEQ_1" + grid + " --threads 1");
  const CliResult three =
      run_cli("verify --claim APPROVAL_J_NOT_GEQ_1" + grid + " --threads 3");
  CHECK(one.exit_code == 0);
  CHECK(three.exit_code == 0);
  // thread count is echoed in flags, so compare everything but the flags
  votemanip::Json a = parse_stdout(one);
  votemanip::Json b = parse_stdout(three);
  a.erase("flags");
  b.erase("flags");
  CHECK(a == b);
}

TEST_CASE("sweep walks the whole k grid in a deterministic order") {
  const CliResult r = run_cli("sweep --f approval --g approval --n 2 --m 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "family_f,k_f,family_g,k_g,n,m,relation,profiles_scanned,"
        "manip_f,manip_g,manip_both\n"
        "approval,1,approval,1,2,3,Equivalent,21,2,2,2\n"
        "approval,1,approval,2,2,3,Incomparable,21,2,6,0\n"
        "approval,2,approval,1,2,3,Incomparable,21,6,2,0\n"
        "approval,2,approval,2,2,3,Equivalent,21,6,6,6\n");

  const CliResult narrowed = run_cli(
      "sweep --f approval --g approval --n 2 --m 3 --k-f 2 --k-g 1");
  CHECK(narrowed.out ==
        "family_f,k_f,family_g,k_g,n,m,relation,profiles_scanned,"
        "manip_f,manip_g,manip_both\n"
        "approval,2,approval,1,2,3,Incomparable,21,6,2,0\n");
}

TEST_CASE("sweep validates families and pre-checks the whole budget") {
  CliResult r = run_cli("sweep --f plurality --g approval --n 2 --m 3");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("--f must be \"approval\" or \"borda\"") !=
        std::string::npos);

  // (2,4) costs 300 profiles: the refusal must come before any row — or
  // the header — hits stdout
  r = run_cli("sweep --f approval --g approval --n 2 --m 3..4 --budget 30");
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err ==
        "error: scan would visit 300 profiles, over the budget of 30\n");
}
