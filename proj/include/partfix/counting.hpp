#pragma once

#include <string>
#include <vector>

#include "partfix/bigint.hpp"
#include "partfix/partition.hpp"

namespace partfix {

/// p(n), the number of partitions of n, via the pentagonal-number recurrence.
/// Memoized for the process lifetime; safe for concurrent callers.
BigInt partition_count(long long n);

/// p(n, k), the number of partitions of n with at most k parts.
/// p(n, 0) = [n == 0]; k < 0 gives 0 for n >= 1 and 1 for n == 0.
BigInt partition_count_max_parts(long long n, long long k);

/// Crank histogram over the partitions of a fixed weight n >= 1:
/// count(m) = M(m, n) = #{ lambda of n : crank(lambda) = m }, stored densely
/// for -n <= m <= n and zero outside.  This is the combinatorial convention;
/// at n = 1 it differs from the generating-function convention, so identity
/// checks against series start at n = 2.
class CrankHistogram {
 public:
  static CrankHistogram from_counts(long long n, std::vector<BigInt> counts);

  long long n() const noexcept { return n_; }
  /// M(m, n); zero outside [-n, n].
  const BigInt& count(long long m) const;
  /// Sum of M(m, n) over lo <= m <= hi.
  BigInt range_count(long long lo, long long hi) const;
  /// Sum of M(m, n) over m >= lo.
  BigInt tail_count(long long lo) const;
  /// Sum over all m; equals p(n).
  BigInt total() const;

 private:
  long long n_ = 0;
  std::vector<BigInt> counts_ = std::vector<BigInt>(1);  // index m + n, size 2n + 1
};

/// Builds the histogram by enumerating all partitions of n.  Requires n >= 1.
CrankHistogram crank_counts(long long n);

/// #{ lambda of n : lo <= crank(lambda) <= hi }, by enumeration.
BigInt crank_range_count(long long n, long long lo, long long hi);

/// Rectangular table of M(m, n) for n_lo <= n <= n_hi, -n_hi <= m <= n_hi.
class CrankTable {
 public:
  CrankTable(long long n_lo, long long n_hi);

  long long n_lo() const noexcept { return n_lo_; }
  long long n_hi() const noexcept { return n_hi_; }
  long long m_lo() const noexcept { return -n_hi_; }
  long long m_hi() const noexcept { return n_hi_; }

  const BigInt& count(long long m, long long n) const;
  BigInt range_count(long long n, long long lo, long long hi) const;

  /// Header "m\n",<n_lo>,...,<n_hi>; then one row per m ascending.
  std::string to_csv() const;

 private:
  long long n_lo_, n_hi_;
  std::vector<CrankHistogram> rows_;  // indexed n - n_lo
};

/// f_k(n): partitions of n with a k-fixed point (any integer k), by
/// enumeration with find_fixed_point.
BigInt count_fixed(long long n, long long k);

/// g_k(n) = p(n) - f_k(n): partitions of n without a k-fixed point.
/// Requires k >= 0 (the negative case splits three ways instead).
BigInt count_unfixed(long long n, long long k);

/// For k >= 1 the partitions of n split by the (-k)-fixed-point statistic:
///   fixed      - at least k parts, some part(i) = i - k  (forces > k parts),
///   few_parts  - fewer than k parts (equals p(n, k-1)),
///   unfixed    - at least k parts, no such i.
struct Trichotomy {
  BigInt fixed;
  BigInt few_parts;
  BigInt unfixed;
};

Trichotomy negative_trichotomy(long long n, long long k);

/// p(n) + 2 * sum_{j>=1} (-1)^j p(n - j(j+c)/2), terms with n - j(j+c)/2 < 0
/// dropped.  Requires odd c (even c makes the step non-integral for odd j);
/// negative odd c is accepted, in which case early steps may be negative and
/// the summand uses p at arguments above n.
BigInt pentagonal_alternating_sum(long long n, long long c);

}  // namespace partfix
