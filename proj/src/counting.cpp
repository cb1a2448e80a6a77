#include "partfix/counting.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "partfix/statistics.hpp"

namespace partfix {

namespace {

struct PartitionCountCache {
  std::vector<BigInt> values{BigInt(1)};  // p(0) = 1
  std::shared_mutex mutex;
};

PartitionCountCache& count_cache() {
  static PartitionCountCache cache;
  return cache;
}

}  // namespace

BigInt partition_count(long long n) {
  if (n < 0) return 0;
  auto& cache = count_cache();
  const auto index = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(cache.mutex);
    if (index < cache.values.size()) return cache.values[index];
  }
  std::unique_lock lock(cache.mutex);
  // p(m) = sum_{g>=1} (-1)^{g+1} [p(m - g(3g-1)/2) + p(m - g(3g+1)/2)]
  for (auto m = static_cast<long long>(cache.values.size()); m <= n; ++m) {
    BigInt sum = 0;
    for (long long g = 1;; ++g) {
      const long long pent1 = g * (3 * g - 1) / 2;
      const long long pent2 = g * (3 * g + 1) / 2;
      if (pent1 > m && pent2 > m) break;
      const bool add = (g % 2 == 1);
      if (pent1 <= m) {
        const auto& term = cache.values[static_cast<std::size_t>(m - pent1)];
        add ? sum += term : sum -= term;
      }
      if (pent2 <= m) {
        const auto& term = cache.values[static_cast<std::size_t>(m - pent2)];
        add ? sum += term : sum -= term;
      }
    }
    cache.values.push_back(std::move(sum));
  }
  return cache.values[index];
}

BigInt partition_count_max_parts(long long n, long long k) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  if (k <= 0) return 0;
  if (k > n) k = n;
  // p(n,k) = p(n,k-1) + p(n-k,k), rolled into one ascending pass per part size.
  std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
  dp[0] = 1;
  for (long long j = 1; j <= k; ++j)
    for (long long m = j; m <= n; ++m)
      dp[static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(m - j)];
  return dp[static_cast<std::size_t>(n)];
}

CrankHistogram CrankHistogram::from_counts(long long n, std::vector<BigInt> counts) {
  if (n < 0) throw std::invalid_argument("histogram weight must be nonnegative");
  if (counts.size() != static_cast<std::size_t>(2 * n + 1))
    throw std::invalid_argument("histogram needs 2n+1 buckets");
  CrankHistogram h;
  h.n_ = n;
  h.counts_ = std::move(counts);
  return h;
}

const BigInt& CrankHistogram::count(long long m) const {
  static const BigInt zero(0);
  if (m < -n_ || m > n_) return zero;
  return counts_[static_cast<std::size_t>(m + n_)];
}

BigInt CrankHistogram::range_count(long long lo, long long hi) const {
  BigInt sum = 0;
  for (long long m = std::max(lo, -n_); m <= std::min(hi, n_); ++m)
    sum += counts_[static_cast<std::size_t>(m + n_)];
  return sum;
}

BigInt CrankHistogram::tail_count(long long lo) const {
  return range_count(lo, n_);
}

BigInt CrankHistogram::total() const { return range_count(-n_, n_); }

CrankHistogram crank_counts(long long n) {
  if (n < 1) throw std::invalid_argument("crank histogram requires n >= 1");
  std::vector<long long> buckets(static_cast<std::size_t>(2 * n + 1), 0);
  for_each_partition(n, [&](std::span<const long long> view) {
    const Partition p(std::vector<long long>(view.begin(), view.end()));
    ++buckets[static_cast<std::size_t>(crank(p) + n)];
  });
  std::vector<BigInt> counts(buckets.size());
  for (std::size_t i = 0; i < buckets.size(); ++i) counts[i] = to_bigint(buckets[i]);
  return CrankHistogram::from_counts(n, std::move(counts));
}

BigInt crank_range_count(long long n, long long lo, long long hi) {
  return crank_counts(n).range_count(lo, hi);
}

CrankTable::CrankTable(long long n_lo, long long n_hi) : n_lo_(n_lo), n_hi_(n_hi) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("crank table needs 1 <= n_lo <= n_hi");
  rows_.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (long long n = n_lo; n <= n_hi; ++n) rows_.push_back(crank_counts(n));
}

const BigInt& CrankTable::count(long long m, long long n) const {
  if (n < n_lo_ || n > n_hi_) throw std::out_of_range("n outside crank table");
  return rows_[static_cast<std::size_t>(n - n_lo_)].count(m);
}

BigInt CrankTable::range_count(long long n, long long lo, long long hi) const {
  if (n < n_lo_ || n > n_hi_) throw std::out_of_range("n outside crank table");
  return rows_[static_cast<std::size_t>(n - n_lo_)].range_count(lo, hi);
}

std::string CrankTable::to_csv() const {
  std::ostringstream out;
  out << "m\\n";
  for (long long n = n_lo_; n <= n_hi_; ++n) out << ',' << n;
  out << '\n';
  for (long long m = m_lo(); m <= m_hi(); ++m) {
    out << m;
    for (long long n = n_lo_; n <= n_hi_; ++n) out << ',' << count(m, n);
    out << '\n';
  }
  return out.str();
}

BigInt count_fixed(long long n, long long k) {
  if (n < 0) return 0;
  long long matches = 0;
  for_each_partition(n, [&](std::span<const long long> view) {
    const Partition p(std::vector<long long>(view.begin(), view.end()));
    if (find_fixed_point(p, k).found) ++matches;
  });
  return to_bigint(matches);
}

BigInt count_unfixed(long long n, long long k) {
  if (k < 0)
    throw std::invalid_argument(
        "count_unfixed requires k >= 0; use negative_trichotomy below zero");
  if (n < 0) return 0;
  long long misses = 0;
  for_each_partition(n, [&](std::span<const long long> view) {
    const Partition p(std::vector<long long>(view.begin(), view.end()));
    if (!find_fixed_point(p, k).found) ++misses;
  });
  return to_bigint(misses);
}

Trichotomy negative_trichotomy(long long n, long long k) {
  if (k < 1) throw std::invalid_argument("negative_trichotomy requires k >= 1");
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  long long fixed = 0, few = 0, unfixed = 0;
  for_each_partition(n, [&](std::span<const long long> view) {
    if (static_cast<long long>(view.size()) < k) {
      ++few;
      return;
    }
    const Partition p(std::vector<long long>(view.begin(), view.end()));
    find_fixed_point(p, -k).found ? ++fixed : ++unfixed;
  });
  Trichotomy t;
  t.fixed = to_bigint(fixed);
  t.few_parts = to_bigint(few);
  t.unfixed = to_bigint(unfixed);
  return t;
}

BigInt pentagonal_alternating_sum(long long n, long long c) {
  if (c % 2 == 0)
    throw std::invalid_argument(
        "pentagonal shift must be odd: j(j+c)/2 is not integral otherwise");
  if (n < 0) return 0;
  BigInt sum = partition_count(n);
  for (long long j = 1;; ++j) {
    const long long step = j * (j + c) / 2;  // j(j+c) is even for odd c
    if (step > n) {
      if (j > -c) break;  // steps only grow from here on
      continue;           // negative c: early overshoots may recover
    }
    const BigInt term = partition_count(n - step);
    if (j % 2 == 1)
      sum -= 2 * term;
    else
      sum += 2 * term;
  }
  return sum;
}

}  // namespace partfix
