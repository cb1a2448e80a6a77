#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "partfix/partition.hpp"

namespace partfix {

/// Frobenius symbol of a partition: two strictly decreasing rows of
/// nonnegative integers of equal length d (the Durfee side),
///   top[i]    = part(i) - i,
///   bottom[i] = conjugate part(i) - i,   1 <= i <= d.
/// Weight identity: n = d + sum(top) + sum(bottom).
class FrobeniusSymbol {
 public:
  FrobeniusSymbol() = default;
  /// Validates equal lengths, strict decrease, nonnegative entries.
  FrobeniusSymbol(std::vector<long long> top, std::vector<long long> bottom);

  const std::vector<long long>& top() const noexcept { return top_; }
  const std::vector<long long>& bottom() const noexcept { return bottom_; }
  std::size_t size() const noexcept { return top_.size(); }

  /// "4,1,0/4,2,1"; the empty symbol renders as "/".
  std::string to_text() const;

  friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;

 private:
  std::vector<long long> top_;
  std::vector<long long> bottom_;
};

/// Outcome of a fixed-point search.  index is 1-based and only meaningful
/// when found; at most one index can satisfy part(i) = i + k because
/// part(i) - i is strictly decreasing in i.
struct FixedPointResult {
  bool found = false;
  std::size_t index = 0;
};

/// Side of the Durfee square: #{ i : part(i) >= i }.
long long durfee_side(const Partition& p);

/// Rows of the largest d x (d+j) rectangle in the diagram:
/// #{ i : part(i) >= i + j }.  Any integer j; rows with i + j <= 0 count
/// automatically since parts are positive.
long long durfee_rect_rows(const Partition& p, long long j);

FrobeniusSymbol frobenius_symbol(const Partition& p);

/// Inverse of frobenius_symbol; round-trips exactly.
Partition partition_from_frobenius(const FrobeniusSymbol& symbol);

/// Dyson's crank: largest part if no part equals 1, otherwise
/// (#parts greater than omega) - omega where omega = #parts equal to 1.
/// Undefined on the empty partition: throws std::domain_error.
long long crank(const Partition& p);

/// Least integer greater than j that is not a part.  Requires j >= 0.
long long mex_j(const Partition& p, long long j);

inline long long mex(const Partition& p) { return mex_j(p, 0); }

/// Searches for the unique i with part(i) = i + k; any integer k.
/// Parts implicitly equal to 0 beyond the last part never count.
FixedPointResult find_fixed_point(const Partition& p, long long k);

}  // namespace partfix
