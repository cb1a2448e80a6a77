#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PARTFIX_CLI_PATH
#error "PARTFIX_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& arguments) {
  const std::string command =
      std::string("\"") + PARTFIX_CLI_PATH + "\" " + arguments + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t read = 0;
  while ((read = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, read);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("stats prints the worked example") {
  const RunResult r = run_cli("stats 5,3,3,3,1 --k 0 --k 1 --j 0 --j 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "weight: 15"));
  CHECK(contains(r.output, "conjugate: 5,4,4,1,1"));
  CHECK(contains(r.output, "durfee side: 3"));
  CHECK(contains(r.output, "frobenius: 4,1,0/4,2,1"));
  CHECK(contains(r.output, "crank: 3"));
  CHECK(contains(r.output, "mex(j=0): 2"));
  CHECK(contains(r.output, "mex(j=2): 4"));
  CHECK(contains(r.output, "fixed point(k=0): at i=3"));
  CHECK(contains(r.output, "fixed point(k=1): at i=2"));
}

TEST_CASE("stats emits machine-readable JSON") {
  const RunResult r = run_cli("stats 4,4,4,2,1 --k=-2 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(r.output);
  CHECK(parsed["weight"] == 15);
  CHECK(parsed["crank"] == 3);
  CHECK(parsed["frobenius"]["text"] == "3,2,1/4,2,0");
  REQUIRE(parsed["fixed_points"].size() == 1);
  CHECK(parsed["fixed_points"][0]["k"] == -2);
  CHECK(parsed["fixed_points"][0]["found"] == true);
  CHECK(parsed["fixed_points"][0]["index"] == 4);
}

TEST_CASE("stats on the empty partition reports crank as undefined") {
  const RunResult text = run_cli("stats \"\"");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "crank: undefined"));

  const RunResult json = run_cli("stats \"\" --format json");
  CHECK(json.exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(json.output);
  CHECK(parsed["crank"].is_null());
  CHECK(parsed["weight"] == 0);
}

TEST_CASE("stats rejects malformed partitions with the usage exit code") {
  CHECK(run_cli("stats 3,5").exit_code == 2);
  CHECK(run_cli("stats 1,0").exit_code == 2);
  CHECK(run_cli("stats 2,x").exit_code == 2);
}

TEST_CASE("counts renders the small table") {
  const RunResult r = run_cli("counts --n-max 4 --k-max 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "n,p,fixed_0,unfixed_0,fixed_1,unfixed_1"));
  CHECK(contains(r.output, "4,5,2,3,2,3"));
}

TEST_CASE("counts emits the crank table") {
  const RunResult r = run_cli("counts --crank --n-max 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "m\\n,1,2,3"));
  CHECK(contains(r.output, "-3,0,0,1"));
  CHECK(contains(r.output, "0,0,0,1"));
}

TEST_CASE("table1 confirms the stored reference") {
  const RunResult r = run_cli("table1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "all 84 cells match the stored reference"));

  const RunResult csv = run_cli("table1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.output, "k,2,3,4,5,6,7,8,9,10,11,12,13,14,15"));
  CHECK(contains(csv.output, "0,0,1,1,1,1,1,2,2,4,4,7,7,11,12"));
  CHECK(contains(csv.output, "5,2,3,5,7,9,13,18,24,32,42,55,73,93,120"));

  const RunResult json = run_cli("table1 --format json");
  CHECK(json.exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(json.output);
  CHECK(parsed["mismatches"] == 0);
  REQUIRE(parsed["rows"].size() == 6);
  CHECK(parsed["rows"][2]["counts"][0] == "2");
}

TEST_CASE("gf prints series text and JSON") {
  const RunResult text = run_cli("gf all --order 6");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "1 + q + 2*q^2 + 3*q^3 + 5*q^4 + 7*q^5 + 11*q^6"));

  const RunResult fixed = run_cli("gf fixed --k 1 --order 6 --format json");
  CHECK(fixed.exit_code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(fixed.output);
  CHECK(parsed["kind"] == "fixed");
  CHECK(parsed["k"] == 1);
  REQUIRE(parsed["coefficients"].size() == 7);
  CHECK(parsed["coefficients"][2] == "1");  // (2) is the only 1-fixed weight-2 case

  const RunResult tail = run_cli("gf crank_tail --j=-1 --order 8 --format json");
  CHECK(tail.exit_code == 0);
  const nlohmann::json tail_json = nlohmann::json::parse(tail.output);
  CHECK(tail_json["j"] == -1);
  REQUIRE(tail_json["coefficients"].size() == 9);

  CHECK(run_cli("gf bogus").exit_code == 2);
  CHECK(run_cli("gf neg_fixed --k 0 --order 5").exit_code == 2);
}

TEST_CASE("verify runs a suite and reports success") {
  const RunResult r = run_cli("verify fixed-points --n-max 12");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "fixed-points"));
  CHECK(contains(r.output, "0 failures"));

  CHECK(run_cli("verify bogus-suite").exit_code == 2);
  // The dispatcher clamps the series check to the truncation order rather
  // than failing, so a short order still succeeds.
  CHECK(run_cli("verify series-crank-tails --n-max 30 --order 20").exit_code == 0);
  CHECK(run_cli("verify all --order 1").exit_code == 2);
}

TEST_CASE("verify JSON output is byte-identical across runs") {
  const std::string arguments =
      "verify crank-windows --n-max 12 --k-max 2 --series-n-max 25 --format json";
  const RunResult first = run_cli(arguments);
  const RunResult second = run_cli(arguments);
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK_FALSE(first.output.empty());
  CHECK(first.output == second.output);
  const nlohmann::json parsed = nlohmann::json::parse(first.output);
  CHECK(parsed["summary"]["failures"] == 0);
}

TEST_CASE("verify honors the parallel flag without changing output") {
  const std::string base = "verify k-fixed-points --n-max 14 --k-max 2 --format json";
  const RunResult serial = run_cli(base);
  const RunResult threaded = run_cli(base + " --parallel 4");
  CHECK(serial.exit_code == 0);
  CHECK(threaded.exit_code == 0);
  CHECK(serial.output == threaded.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("unknown-command").exit_code == 2);
  CHECK(run_cli("counts --format yaml").exit_code == 2);
  CHECK(run_cli("verify --parallel 0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
