// Exit-code and output contract of the command-line tool, exercised
// against the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd =
      std::string(ANC_CLI_BIN) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("enumerate: canonical listing with the count on stderr") {
  const RunResult r = run("enumerate --type B-perm -p 1 -q 1");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 6);
  CHECK(r.out.substr(0, 3) == "id\n");
  CHECK(r.err.find("count: 6") != std::string::npos);

  const RunResult again = run("enumerate --type B-perm -p 1 -q 1");
  CHECK(again.out == r.out);  // byte-identical across runs
}

TEST_CASE("enumerate json includes the figure-1 partition") {
  const RunResult r = run("enumerate --type B-part -p 4 -q 2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"].get<long long>() == doc["items"].size());
  bool found = false;
  for (const auto& item : doc["items"]) {
    if (item["blocks"] ==
        nlohmann::json::parse("[[1, 2, 3, 5], [4, -6], [6, -4], [-1, -2, -3, -5]]"))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("enumerate rejects out-of-bound parameters with exit 2") {
  CHECK(run("enumerate --type B-perm -p 6 -q 2").exit_code == 2);
  CHECK(run("enumerate --type B-perm -p 0 -q 2").exit_code == 2);
  CHECK(run("enumerate --type X -p 1 -q 1").exit_code == 2);
}

TEST_CASE("verify: exit codes and schema") {
  CHECK(run("verify t3 -n 4").exit_code == 0);
  CHECK(run("verify t1 -p 2 -q 2").exit_code == 0);
  CHECK(run("verify t2 -p 2 -q 1").exit_code == 0);
  CHECK(run("verify d -p 2 -q 1").exit_code == 0);
  CHECK(run("verify t3 -n 99").exit_code == 2);
  CHECK(run("verify t3").exit_code == 2);
  CHECK(run("verify t1 -p 2").exit_code == 2);
  CHECK(run("verify bogus -p 1 -q 1").exit_code == 2);

  const RunResult r = run("verify t2 -p 2 -q 1 --format json");
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["theorem"] == "order-iso");
  CHECK(doc["passed"] == true);
  CHECK(doc["witness"].is_null());
  CHECK(doc["params"]["p"] == 2);

  // Deterministic modulo the elapsed time.
  auto doc2 = nlohmann::json::parse(run("verify t2 -p 2 -q 1 --format json").out);
  doc["elapsed_ms"] = 0;
  doc2["elapsed_ms"] = 0;
  CHECK(doc == doc2);
}

TEST_CASE("hasse exports") {
  const RunResult dot = run("hasse --poset ncb -p 2 -q 1 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("digraph hasse {") == 0);
  CHECK(dot.out.find("->") != std::string::npos);

  const RunResult ncb = run("hasse --poset ncb -p 1 -q 1 --format json");
  REQUIRE(ncb.exit_code == 0);
  const auto ncb_doc = nlohmann::json::parse(ncb.out);
  CHECK(ncb_doc["elements"].size() == 6);

  const RunResult interval = run("hasse --poset interval -p 1 -q 1 --format json");
  REQUIRE(interval.exit_code == 0);
  const auto interval_doc = nlohmann::json::parse(interval.out);
  CHECK(interval_doc["covers"].size() == ncb_doc["covers"].size());

  CHECK(run("hasse --poset ncb -p 9 -q 1 --format dot").exit_code == 2);
}

TEST_CASE("counterexample reproduces and exits zero") {
  const RunResult r = run("counterexample");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(1,2,3,4)(-1,-2,-3,-4)") != std::string::npos);
  CHECK(r.out.find("(1,3)(-1,-3)") != std::string::npos);
  CHECK(r.out.find("AC3") != std::string::npos);
  CHECK(r.out.find("verdict: PASSED") != std::string::npos);
}

TEST_CASE("check: membership verdicts and parse errors") {
  const RunResult member = run("check \"(1,2,3,5)(4,-6)\" -p 4 -q 2");
  CHECK(member.exit_code == 0);
  CHECK(member.out.find("verdict: member") != std::string::npos);

  CHECK(run("check \"()\" -p 1 -q 1").exit_code == 0);

  const RunResult crossing = run("check \"(1,3)(2,4)\" -p 3 -q 1");
  CHECK(crossing.exit_code == 1);
  CHECK(crossing.out.find("witness") != std::string::npos);

  CHECK(run("check \"(1,3)(2,4)\" -p 4 -q 0").exit_code == 2);
  CHECK(run("check \"(1,99)\" -p 1 -q 1").exit_code == 2);
  CHECK(run("check \"oops\" -p 1 -q 1").exit_code == 2);

  const RunResult json_out = run("check \"(1,2,3,5)(4,-6)\" -p 4 -q 2 --format json");
  REQUIRE(json_out.exit_code == 0);
  const auto doc = nlohmann::json::parse(json_out.out);
  CHECK(doc["member_by_genus"] == true);
  CHECK(doc["member_by_patterns"] == true);
  CHECK(doc["le_gamma"] == true);
  CHECK(doc["genus"] == 0);
}

TEST_CASE("output persists to a file") {
  const std::string path = "cli_output.tmp";
  const RunResult r = run("--output " + path + " enumerate --type B-perm -p 1 -q 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path).substr(0, 3) == "id\n");
  std::remove(path.c_str());
}

TEST_CASE("bound overrides via flag and environment") {
  CHECK(run("verify t1 -p 3 -q 3").exit_code == 2);       // above the default bound
  CHECK(run("--bound 6 verify t1 -p 3 -q 3").exit_code == 0);
  CHECK(run("--jobs 4 verify t3 -n 4").exit_code == 0);

  const std::string out_path = "cli_env.tmp";
  const int status = std::system((std::string("ANNULAR_NC_BOUND=6 ") + ANC_CLI_BIN +
                                  " verify t1 -p 3 -q 3 > " + out_path + " 2>&1")
                                     .c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::remove(out_path.c_str());
}
