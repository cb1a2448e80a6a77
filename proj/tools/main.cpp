#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partfix/counting.hpp"
#include "partfix/partition.hpp"
#include "partfix/qseries.hpp"
#include "partfix/statistics.hpp"
#include "partfix/verify.hpp"

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

ojson long_list(const std::vector<long long>& values) {
  ojson out = ojson::array();
  for (long long v : values) out.push_back(v);
  return out;
}

int run_stats(const std::string& partition_text, const std::vector<long long>& ks,
              const std::vector<long long>& js, const std::string& format) {
  const partfix::Partition p = partfix::parse_partition(partition_text);
  const partfix::Partition conj = partfix::conjugate(p);
  const partfix::FrobeniusSymbol frob = partfix::frobenius_symbol(p);
  const bool has_crank = !p.empty();
  const long long crank_value = has_crank ? partfix::crank(p) : 0;

  if (format == "json") {
    ojson out;
    out["partition"] = p.to_text();
    out["weight"] = p.weight();
    out["part_count"] = p.part_count();
    out["conjugate"] = conj.to_text();
    out["durfee_side"] = partfix::durfee_side(p);
    ojson frob_json;
    frob_json["top"] = long_list(frob.top());
    frob_json["bottom"] = long_list(frob.bottom());
    frob_json["text"] = frob.to_text();
    out["frobenius"] = std::move(frob_json);
    out["crank"] = has_crank ? ojson(crank_value) : ojson(nullptr);
    ojson mexes = ojson::array();
    ojson rects = ojson::array();
    for (long long j : js) {
      ojson m;
      m["j"] = j;
      m["value"] = partfix::mex_j(p, j);
      mexes.push_back(std::move(m));
      ojson rect;
      rect["j"] = j;
      rect["rows"] = partfix::durfee_rect_rows(p, j);
      rects.push_back(std::move(rect));
    }
    out["mex"] = std::move(mexes);
    out["rectangle_rows"] = std::move(rects);
    ojson fixed = ojson::array();
    for (long long k : ks) {
      const partfix::FixedPointResult result = partfix::find_fixed_point(p, k);
      ojson f;
      f["k"] = k;
      f["found"] = result.found;
      f["index"] = result.found ? ojson(result.index) : ojson(nullptr);
      fixed.push_back(std::move(f));
    }
    out["fixed_points"] = std::move(fixed);
    std::cout << out.dump(2) << '\n';
    return kExitPass;
  }

  std::cout << "partition: " << p.to_text() << '\n'
            << "weight: " << p.weight() << '\n'
            << "parts: " << p.part_count() << '\n'
            << "conjugate: " << conj.to_text() << '\n'
            << "durfee side: " << partfix::durfee_side(p) << '\n'
            << "frobenius: " << frob.to_text() << '\n';
  if (has_crank)
    std::cout << "crank: " << crank_value << '\n';
  else
    std::cout << "crank: undefined\n";
  for (long long j : js)
    std::cout << "mex(j=" << j << "): " << partfix::mex_j(p, j) << '\n';
  for (long long j : js)
    std::cout << "rectangle rows(j=" << j
              << "): " << partfix::durfee_rect_rows(p, j) << '\n';
  for (long long k : ks) {
    const partfix::FixedPointResult result = partfix::find_fixed_point(p, k);
    std::cout << "fixed point(k=" << k << "): ";
    if (result.found)
      std::cout << "at i=" << result.index << '\n';
    else
      std::cout << "none\n";
  }
  return kExitPass;
}

int run_counts(long long n_max, long long k_max, bool crank_table,
               const std::string& format) {
  if (crank_table) {
    const partfix::CrankTable table(1, n_max);
    if (format == "json") {
      ojson out;
      out["n_lo"] = table.n_lo();
      out["n_hi"] = table.n_hi();
      out["m_lo"] = table.m_lo();
      out["m_hi"] = table.m_hi();
      ojson rows = ojson::array();
      for (long long m = table.m_lo(); m <= table.m_hi(); ++m) {
        ojson row;
        row["m"] = m;
        ojson values = ojson::array();
        for (long long n = table.n_lo(); n <= table.n_hi(); ++n)
          values.push_back(table.count(m, n).get_str());
        row["counts"] = std::move(values);
        rows.push_back(std::move(row));
      }
      out["rows"] = std::move(rows);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << table.to_csv();
    }
    return kExitPass;
  }

  std::vector<std::vector<partfix::BigInt>> fixed(
      static_cast<std::size_t>(n_max) + 1);
  std::vector<std::vector<partfix::BigInt>> unfixed(
      static_cast<std::size_t>(n_max) + 1);
  for (long long n = 0; n <= n_max; ++n)
    for (long long k = 0; k <= k_max; ++k) {
      fixed[static_cast<std::size_t>(n)].push_back(partfix::count_fixed(n, k));
      unfixed[static_cast<std::size_t>(n)].push_back(partfix::count_unfixed(n, k));
    }

  if (format == "json") {
    ojson out;
    out["n_max"] = n_max;
    out["k_max"] = k_max;
    ojson rows = ojson::array();
    for (long long n = 0; n <= n_max; ++n) {
      ojson row;
      row["n"] = n;
      row["p"] = partfix::partition_count(n).get_str();
      ojson f = ojson::array();
      ojson g = ojson::array();
      for (long long k = 0; k <= k_max; ++k) {
        f.push_back(fixed[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]
                        .get_str());
        g.push_back(
            unfixed[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]
                .get_str());
      }
      row["fixed"] = std::move(f);
      row["unfixed"] = std::move(g);
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << '\n';
    return kExitPass;
  }

  const char separator = (format == "csv") ? ',' : ' ';
  const int width = (format == "csv") ? 0 : 8;
  std::cout << std::setw(width) << "n" << separator << std::setw(width) << "p";
  for (long long k = 0; k <= k_max; ++k) {
    std::ostringstream f, g;
    f << "fixed_" << k;
    g << "unfixed_" << k;
    std::cout << separator << std::setw(width) << f.str() << separator
              << std::setw(width) << g.str();
  }
  std::cout << '\n';
  for (long long n = 0; n <= n_max; ++n) {
    std::cout << std::setw(width) << n << separator << std::setw(width)
              << partfix::partition_count(n).get_str();
    for (long long k = 0; k <= k_max; ++k)
      std::cout << separator << std::setw(width)
                << fixed[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]
                       .get_str()
                << separator << std::setw(width)
                << unfixed[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]
                       .get_str();
    std::cout << '\n';
  }
  return kExitPass;
}

int run_table1(const std::string& format) {
  const auto& reference = partfix::reference_crank_range_table();
  std::array<std::array<partfix::BigInt, 14>, 6> computed;
  long long mismatches = 0;
  for (long long k = 0; k <= 5; ++k)
    for (long long n = 2; n <= 15; ++n) {
      partfix::BigInt value = partfix::crank_range_count(n, -k, k);
      if (value !=
          partfix::to_bigint(
              reference[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - 2)]))
        ++mismatches;
      computed[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - 2)] =
          std::move(value);
    }

  if (format == "json") {
    ojson out;
    ojson rows = ojson::array();
    for (long long k = 0; k <= 5; ++k) {
      ojson row;
      row["k"] = k;
      ojson values = ojson::array();
      for (long long n = 2; n <= 15; ++n)
        values.push_back(computed[static_cast<std::size_t>(k)]
                                 [static_cast<std::size_t>(n - 2)]
                                     .get_str());
      row["counts"] = std::move(values);
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    out["mismatches"] = mismatches;
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "k";
    for (long long n = 2; n <= 15; ++n) std::cout << ',' << n;
    std::cout << '\n';
    for (long long k = 0; k <= 5; ++k) {
      std::cout << k;
      for (long long n = 2; n <= 15; ++n)
        std::cout << ','
                  << computed[static_cast<std::size_t>(k)]
                             [static_cast<std::size_t>(n - 2)]
                                 .get_str();
      std::cout << '\n';
    }
    if (mismatches > 0)
      std::cout << "# " << mismatches << " cells differ from the reference\n";
  } else {
    std::cout << std::setw(4) << "k\\n";
    for (long long n = 2; n <= 15; ++n) std::cout << std::setw(5) << n;
    std::cout << '\n';
    for (long long k = 0; k <= 5; ++k) {
      std::cout << std::setw(4) << k;
      for (long long n = 2; n <= 15; ++n)
        std::cout << std::setw(5)
                  << computed[static_cast<std::size_t>(k)]
                             [static_cast<std::size_t>(n - 2)]
                                 .get_str();
      std::cout << '\n';
    }
    if (mismatches == 0)
      std::cout << "all 84 cells match the stored reference\n";
    else
      std::cout << mismatches << " cells differ from the stored reference\n";
  }
  return mismatches == 0 ? kExitPass : kExitCheckFailed;
}

int run_gf(const std::string& kind, long long k, long long j, int order,
           const std::string& format) {
  partfix::TruncatedSeries series = partfix::TruncatedSeries::zero(order);
  long long parameter = 0;
  const char* parameter_name = "k";
  if (kind == "fixed") {
    series = partfix::gf_fixed(k, order);
    parameter = k;
  } else if (kind == "all") {
    series = partfix::gf_all(k, order);
    parameter = k;
  } else if (kind == "unfixed") {
    series = partfix::gf_unfixed(k, order);
    parameter = k;
  } else if (kind == "neg_fixed") {
    series = partfix::gf_neg_fixed(k, order);
    parameter = k;
  } else {
    series = partfix::gf_crank_tail(j, order);
    parameter = j;
    parameter_name = "j";
  }

  if (format == "json") {
    ojson out;
    out["kind"] = kind;
    out[parameter_name] = parameter;
    out["order"] = order;
    out["coefficients"] = series.coefficient_strings();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << series.to_text() << '\n';
  }
  return kExitPass;
}

int run_verify(const std::string& suite, const partfix::VerifyRanges& ranges,
               int parallel, const std::string& format) {
  partfix::Verifier verifier(partfix::VerifyOptions{parallel});
  const auto reports = partfix::run_named_suite(verifier, suite, ranges);
  if (!reports) {
    std::cerr << "unknown suite '" << suite << "'; known:";
    for (const auto& name : partfix::suite_names()) std::cerr << ' ' << name;
    std::cerr << '\n';
    return kExitUsage;
  }
  if (format == "json")
    std::cout << partfix::reports_to_json(*reports);
  else
    std::cout << partfix::reports_to_text(*reports);
  long long failures = 0;
  for (const auto& report : *reports) failures += report.failure_count();
  return failures == 0 ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integer-partition statistics, counts, and identity checks"};
  app.require_subcommand(1);

  std::string format = "text";

  auto* stats = app.add_subcommand("stats", "Statistics of one partition");
  std::string partition_text;
  std::vector<long long> stat_ks{0};
  std::vector<long long> stat_js{0};
  stats->add_option("partition", partition_text,
                    "Comma-separated nonincreasing parts, e.g. 5,4,4,1,1 "
                    "(empty string for the empty partition)")
      ->required();
  stats->add_option("--k", stat_ks,
                    "Fixed-point offsets to test (any integers; write --k=-2 "
                    "for negatives)");
  stats->add_option("--j", stat_js, "Offsets for mex and rectangle rows")
      ->check(CLI::NonNegativeNumber);
  stats->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* counts = app.add_subcommand("counts", "Count tables over a weight range");
  long long counts_n_max = 15;
  long long counts_k_max = 2;
  bool counts_crank = false;
  counts->add_option("--n-max", counts_n_max, "Largest weight (default 15)")
      ->check(CLI::Range(0LL, 200LL));
  counts->add_option("--k-max", counts_k_max,
                     "Largest fixed-point offset (default 2)")
      ->check(CLI::Range(0LL, 64LL));
  counts->add_flag("--crank", counts_crank,
                   "Emit the crank histogram table M(m, n) instead");
  counts->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* table1 = app.add_subcommand(
      "table1", "Recompute the reference crank-window count table "
                "(0 <= k <= 5, 2 <= n <= 15) and compare");
  table1->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* gf = app.add_subcommand("gf", "Generating-function coefficients");
  std::string gf_kind;
  long long gf_k = 0;
  long long gf_j = 0;
  int gf_order = 20;
  gf->add_option("kind", gf_kind,
                 "fixed | all | unfixed | neg_fixed | crank_tail")
      ->required()
      ->check(CLI::IsMember({"fixed", "all", "unfixed", "neg_fixed", "crank_tail"}));
  gf->add_option("--k", gf_k,
                 "Fixed-point offset (>= 0; for neg_fixed the series counts "
                 "(-k)-fixed points, k >= 1)");
  gf->add_option("--j", gf_j, "Crank tail cutoff (crank_tail only; any integer, "
                              "write --j=-2 for negatives)");
  gf->add_option("--order", gf_order, "Truncation order (default 20)")
      ->check(CLI::Range(0, 100000));
  gf->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run identity-check suites");
  std::string suite = "all";
  partfix::VerifyRanges ranges;
  int parallel = 1;
  verify->add_option("suite", suite, "Suite name, or 'all' (default)");
  verify->add_option("--n-max", ranges.n_max, "Largest weight (default 40)")
      ->check(CLI::Range(2LL, 200LL));
  verify->add_option("--k-max", ranges.k_max,
                     "Largest fixed-point offset (default 6)")
      ->check(CLI::Range(0LL, 64LL));
  verify->add_option("--j-min", ranges.j_lo,
                     "Smallest crank-tail cutoff (default -5; write --j-min=-5)");
  verify->add_option("--j-max", ranges.j_hi, "Largest crank-tail cutoff (default 5)");
  verify->add_option("--order", ranges.order,
                     "Series truncation order (default 100)")
      ->check(CLI::Range(2, 100000));
  verify->add_option("--series-n-max", ranges.window_series_n_max,
                     "Series reach of the window checks (default 200)")
      ->check(CLI::Range(2LL, 100000LL));
  verify->add_option("--parallel", parallel,
                     "Worker threads for enumeration (default 1; reports are "
                     "identical for every value)")
      ->check(CLI::Range(1, 256));
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(stats))
      return run_stats(partition_text, stat_ks, stat_js, format);
    if (app.got_subcommand(counts))
      return run_counts(counts_n_max, counts_k_max, counts_crank, format);
    if (app.got_subcommand(table1)) return run_table1(format);
    if (app.got_subcommand(gf)) return run_gf(gf_kind, gf_k, gf_j, gf_order, format);
    if (app.got_subcommand(verify))
      return run_verify(suite, ranges, parallel, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
