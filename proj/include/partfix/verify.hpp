#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partfix/bigint.hpp"
#include "partfix/counting.hpp"

namespace partfix {

/// One checked equality.  lhs and rhs are exact integers; pass means
/// lhs == rhs.  witnesses holds up to five offending partitions (text form)
/// when the two sides count predicates over the same weight and disagree.
struct ReportCell {
  std::string check;
  std::vector<std::pair<std::string, long long>> params;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
  std::vector<std::string> witnesses;
};

struct VerificationReport {
  std::string identity_id;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<ReportCell> cells;
  /// Wall-clock duration; shown in the text rendering only, never in JSON,
  /// so repeated runs serialize identically.
  double seconds = 0.0;

  long long failure_count() const;
  bool passed() const { return failure_count() == 0; }
};

/// Everything the identity checks need about the partitions of one weight,
/// gathered in a single enumeration pass.  Each statistic is computed by its
/// own public operation (find_fixed_point, frobenius_symbol, mex_j, crank),
/// so agreement between columns is evidence, not circularity.
struct WeightProfile {
  long long n = 0;
  long long stat_cap = 0;  // statistics tracked for 0 <= k <= stat_cap
  BigInt total;            // partitions seen; equals p(n)
  CrankHistogram crank;    // all-zero at n = 0 (the empty partition has no crank)
  std::vector<BigInt> fixed;              // [k] = f_k(n)
  std::vector<BigInt> frob_top_has;       // [k] = #{top row of Frobenius symbol contains k}
  std::vector<BigInt> mex_even;           // [k] = #{mex_k - k even}
  std::vector<BigInt> mex_odd_with_part;  // [k] = #{mex_k - k odd and k a part}; [0] = 0
  std::vector<BigInt> neg_fixed;          // [k] = f_{-k}(n); [0] = f_0(n)
  std::vector<BigInt> few_parts;          // [k] = #{fewer than k parts} = p(n, k-1)
};

WeightProfile build_weight_profile(long long n, long long stat_cap);

struct VerifyOptions {
  /// Worker threads for profile construction.  Reports are byte-identical
  /// for every degree; only the wall clock changes.
  int parallel = 1;
};

struct VerifyRanges {
  long long n_max = 40;
  long long k_max = 6;
  long long j_lo = -5;
  long long j_hi = 5;
  int order = 100;                     // truncation order for series suites
  long long window_series_n_max = 200; // series reach of the window checks
};

/// Runs the identity suites.  Caches one WeightProfile per weight for the
/// object's lifetime, so consecutive suites share enumeration work.
class Verifier {
 public:
  explicit Verifier(VerifyOptions options = {});

  /// f(n) = #{Frobenius top row contains 0} = #{mex even}
  ///      = sum_{m>=1} M(m,n), and the unfixed complements, for 2 <= n <= n_max.
  VerificationReport fixed_point_equalities(long long n_max);

  /// The k-fixed-point analogue for 0 <= k <= k_max, including the
  /// cross-weight form g_k(n) = sum_{m>=k} M(m, n+k).
  VerificationReport k_fixed_point_equalities(long long k_max, long long n_max);

  /// Negative index: f_{-k}(n) + p(n,k-1) = sum_{m>=-k+1} M(m,n) and
  /// g'_{-k}(n) = sum_{m>=k} M(m,n), with the trichotomy summing to p(n).
  /// k = 0 runs as the degenerate row p(n,-1) = 0.
  VerificationReport neg_fixed_point_equalities(long long k_max, long long n_max);

  /// sum_{m>=j} M(m,n) = #{nu of n-j : mex_j(nu) - j odd}, and for j >= 1
  /// also = #{mu of n : mex_j(mu) - j odd, j a part}.  The j = 0 part-form
  /// is skipped: 0 is never a part.
  VerificationReport mex_crank_tails(long long j_max, long long n_max);

  /// gf_crank_tail coefficients against enumerated crank tails,
  /// j_lo <= j <= j_hi, 2 <= n <= n_max <= order.
  VerificationReport series_crank_tails(long long j_lo, long long j_hi,
                                        long long n_max, int order);

  /// Recomputes the reference table of #{lambda : -k <= crank <= k} for
  /// 0 <= k <= 5, 2 <= n <= 15 via crank_range_count and compares every cell.
  VerificationReport crank_range_table();

  /// Window identities: g_k - f_k = sum_{m=-k..k} M(m,n), the trichotomy
  /// combination = sum_{m=-k+1..k-1} M(m,n), the k = 0 specialization
  /// g - f = M(0,n) > 0 (enumeration to n_max, series to series_n_max), and
  /// a sweep that determines the pentagonal shift c = 2k + delta consistent
  /// with the oracle for each window family, reported as data.
  VerificationReport crank_window_identities(long long k_max, long long n_max,
                                             long long series_n_max);

  /// g_{k-1}(n) - f_{k-1}(n) = f_{-k}(n) + p(n,k-1) - g'_{-k}(n).
  VerificationReport fixed_point_duality(long long k_max, long long n_max);

  /// All suites above in a fixed order.
  std::vector<VerificationReport> run_all(const VerifyRanges& ranges = {});

  /// Cached profile; builds (or upgrades) on demand.
  const WeightProfile& profile(long long n, long long stat_cap);

 private:
  void ensure_profiles(long long n_lo, long long n_hi, long long stat_cap);
  VerifyOptions options_;
  std::map<long long, WeightProfile> profiles_;
};

/// Reference values of #{lambda of n : -k <= crank(lambda) <= k};
/// rows k = 0..5, columns n = 2..15.  Row k = 0 is M(0,n) (OEIS A064410).
const std::array<std::array<long long, 14>, 6>& reference_crank_range_table();

/// Known suite names: the eight identity ids plus "all".
const std::vector<std::string>& suite_names();

/// Runs "all" or a single named suite; nullopt for an unknown name.
std::optional<std::vector<VerificationReport>> run_named_suite(
    Verifier& verifier, std::string_view name, const VerifyRanges& ranges);

std::string report_to_text(const VerificationReport& report);
std::string reports_to_text(const std::vector<VerificationReport>& reports);
/// Deterministic: two runs over the same ranges byte-match.
std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace partfix
