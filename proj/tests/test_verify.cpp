#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "partfix/counting.hpp"
#include "partfix/verify.hpp"

using partfix::VerificationReport;
using partfix::Verifier;
using partfix::VerifyOptions;
using partfix::VerifyRanges;
using partfix::WeightProfile;

namespace {

long long total_failures(const std::vector<VerificationReport>& reports) {
  long long failures = 0;
  for (const auto& report : reports) failures += report.failure_count();
  return failures;
}

const partfix::ReportCell* find_cell(const VerificationReport& report,
                                     const std::string& check) {
  for (const auto& cell : report.cells)
    if (cell.check == check) return &cell;
  return nullptr;
}

}  // namespace

TEST_CASE("weight profile agrees with the standalone operations") {
  const WeightProfile w = partfix::build_weight_profile(10, 4);
  CHECK(w.n == 10);
  CHECK(w.stat_cap == 4);
  CHECK(w.total == partfix::partition_count(10));
  const partfix::CrankHistogram oracle = partfix::crank_counts(10);
  for (long long m = -10; m <= 10; ++m) REQUIRE(w.crank.count(m) == oracle.count(m));
  for (long long k = 0; k <= 4; ++k) {
    const auto ki = static_cast<std::size_t>(k);
    REQUIRE(w.fixed[ki] == partfix::count_fixed(10, k));
    REQUIRE(w.total - w.fixed[ki] == partfix::count_unfixed(10, k));
    REQUIRE(w.neg_fixed[ki] == partfix::count_fixed(10, -k));
    REQUIRE(w.few_parts[ki] == partfix::partition_count_max_parts(10, k - 1));
  }
  const partfix::Trichotomy t = partfix::negative_trichotomy(10, 3);
  CHECK(w.neg_fixed[3] == t.fixed);
  CHECK(w.few_parts[3] == t.few_parts);
  CHECK(w.total - w.neg_fixed[3] - w.few_parts[3] == t.unfixed);
}

TEST_CASE("weight profile of the empty weight") {
  const WeightProfile w = partfix::build_weight_profile(0, 2);
  CHECK(w.total == 1);
  CHECK(w.crank.range_count(-5, 5) == 0);
  CHECK(w.fixed[0] == 0);
  CHECK(w.few_parts[1] == 1);
  CHECK(w.mex_even[0] == 0);  // mex() = 1 is odd
}

TEST_CASE("verifier caches and upgrades profiles") {
  Verifier verifier;
  const WeightProfile& first = verifier.profile(6, 2);
  CHECK(first.n == 6);
  CHECK(first.stat_cap >= 2);
  const WeightProfile& upgraded = verifier.profile(6, 10);
  CHECK(upgraded.stat_cap >= 10);
  CHECK(upgraded.total == partfix::partition_count(6));
}

TEST_CASE("fixed point equalities hold") {
  Verifier verifier;
  const VerificationReport report = verifier.fixed_point_equalities(25);
  CHECK(report.identity_id == "fixed-points");
  CHECK(report.cells.size() == 24 * 7);
  CHECK(report.failure_count() == 0);
  CHECK(report.passed());
}

TEST_CASE("k-fixed point equalities hold") {
  Verifier verifier;
  const VerificationReport report = verifier.k_fixed_point_equalities(3, 20);
  CHECK(report.cells.size() == 4 * 19 * 8);
  CHECK(report.failure_count() == 0);
}

TEST_CASE("negative fixed point equalities hold") {
  Verifier verifier;
  const VerificationReport report = verifier.neg_fixed_point_equalities(3, 20);
  CHECK(report.failure_count() == 0);
}

TEST_CASE("mex crank tail equalities hold") {
  Verifier verifier;
  const VerificationReport report = verifier.mex_crank_tails(3, 20);
  CHECK(report.failure_count() == 0);
}

TEST_CASE("series crank tails match enumeration") {
  Verifier verifier;
  const VerificationReport report = verifier.series_crank_tails(-3, 3, 20, 40);
  CHECK(report.failure_count() == 0);
  CHECK_THROWS_AS(verifier.series_crank_tails(-3, 3, 50, 40),
                  std::invalid_argument);
  CHECK_THROWS_AS(verifier.series_crank_tails(3, -3, 20, 40),
                  std::invalid_argument);
}

TEST_CASE("crank range table matches the stored reference") {
  Verifier verifier;
  const VerificationReport report = verifier.crank_range_table();
  CHECK(report.cells.size() == 84 + 14);
  CHECK(report.failure_count() == 0);
  const auto& reference = partfix::reference_crank_range_table();
  CHECK(reference[0][0] == 0);   // k=0, n=2
  CHECK(reference[0][13] == 12); // k=0, n=15
  CHECK(reference[5][13] == 120);
}

TEST_CASE("crank window identities hold and the sweep is decisive") {
  Verifier verifier;
  const VerificationReport report = verifier.crank_window_identities(3, 20, 60);
  CHECK(report.failure_count() == 0);

  const partfix::ReportCell* full = find_cell(report, "shift-unique-full-window");
  REQUIRE(full != nullptr);
  REQUIRE(full->params.size() == 1);
  CHECK(full->params[0].first == "delta_found");
  CHECK(full->params[0].second == 1);  // windows [-k, k] need c = 2k + 1

  const partfix::ReportCell* inner = find_cell(report, "shift-unique-inner-window");
  REQUIRE(inner != nullptr);
  CHECK(inner->params[0].second == -1);  // windows [-k+1, k-1] need c = 2k - 1
}

TEST_CASE("fixed point duality holds") {
  Verifier verifier;
  const VerificationReport report = verifier.fixed_point_duality(3, 20);
  CHECK(report.cells.size() == 3 * 19);
  CHECK(report.failure_count() == 0);
}

TEST_CASE("run_all covers the eight suites in a fixed order") {
  Verifier verifier;
  VerifyRanges small;
  small.n_max = 12;
  small.k_max = 2;
  small.j_lo = -2;
  small.j_hi = 2;
  small.order = 20;
  small.window_series_n_max = 30;
  const auto reports = verifier.run_all(small);
  REQUIRE(reports.size() == 8);
  const std::vector<std::string> expected{
      "fixed-points",       "k-fixed-points",    "neg-fixed-points",
      "mex-crank-tails",    "series-crank-tails", "crank-range-table",
      "crank-windows",      "fixed-point-duality"};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(reports[i].identity_id == expected[i]);
  CHECK(total_failures(reports) == 0);
}

TEST_CASE("named suites dispatch") {
  const auto& names = partfix::suite_names();
  REQUIRE(names.size() == 9);
  CHECK(names.front() == "all");

  Verifier verifier;
  VerifyRanges small;
  small.n_max = 10;
  small.k_max = 2;
  small.j_lo = -2;
  small.j_hi = 2;
  small.order = 15;
  small.window_series_n_max = 20;
  for (const std::string& name : names) {
    const auto reports = partfix::run_named_suite(verifier, name, small);
    REQUIRE(reports.has_value());
    if (name == "all")
      CHECK(reports->size() == 8);
    else {
      REQUIRE(reports->size() == 1);
      CHECK(reports->front().identity_id == name);
    }
  }
  CHECK_FALSE(partfix::run_named_suite(verifier, "bogus", small).has_value());
}

TEST_CASE("parallel profile construction changes nothing") {
  VerifyRanges small;
  small.n_max = 15;
  small.k_max = 2;
  small.j_lo = -2;
  small.j_hi = 2;
  small.order = 20;
  small.window_series_n_max = 25;

  Verifier serial(VerifyOptions{1});
  Verifier threaded(VerifyOptions{4});
  const std::string lhs = partfix::reports_to_json(serial.run_all(small));
  const std::string rhs = partfix::reports_to_json(threaded.run_all(small));
  CHECK(lhs == rhs);
}

TEST_CASE("JSON reports are deterministic and carry no clock") {
  Verifier a, b;
  const std::string lhs = partfix::reports_to_json(
      std::vector<VerificationReport>{a.crank_window_identities(2, 12, 25)});
  const std::string rhs = partfix::reports_to_json(
      std::vector<VerificationReport>{b.crank_window_identities(2, 12, 25)});
  CHECK(lhs == rhs);
  CHECK(lhs.find("seconds") == std::string::npos);
  CHECK(lhs.find("\"identity_id\": \"crank-windows\"") != std::string::npos);
}

TEST_CASE("text rendering summarizes and annotates the sweep") {
  Verifier verifier;
  const std::string text =
      partfix::report_to_text(verifier.crank_window_identities(2, 10, 20));
  CHECK(text.find("crank-windows") != std::string::npos);
  CHECK(text.find("0 failures") != std::string::npos);
  CHECK(text.find("note shift-unique-full-window delta_found=1") !=
        std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  const std::string all_text = partfix::reports_to_text(
      std::vector<VerificationReport>{verifier.fixed_point_equalities(8)});
  CHECK(all_text.find("summary: 1 suites") != std::string::npos);
}
