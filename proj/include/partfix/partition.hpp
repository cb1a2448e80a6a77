#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partfix {

/// Thrown by parse_partition.  Carries the violation kind and the 1-based
/// index of the offending token.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { NonIntegerToken, NonPositivePart, IncreasingPair };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// A partition of a nonnegative integer: finitely many parts in nonincreasing
/// order, every part >= 1.  The empty partition is the unique partition of 0.
/// Statistic definitions index parts 1-based; part(1) is the largest part.
class Partition {
 public:
  Partition() = default;
  /// Validates nonincreasing order and positivity; throws std::invalid_argument.
  explicit Partition(std::vector<long long> parts);

  const std::vector<long long>& parts() const noexcept { return parts_; }
  /// 1-based access; throws std::out_of_range.
  long long part(std::size_t i) const { return parts_.at(i - 1); }
  std::size_t part_count() const noexcept { return parts_.size(); }
  long long weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Comma-separated parts, e.g. "5,3,3,3,1"; empty partition renders as "".
  std::string to_text() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<long long> parts_;
  long long weight_ = 0;
};

/// Parses "5,3,3,3,1" (ASCII whitespace around tokens ignored).  The empty or
/// all-whitespace string denotes the empty partition.  Throws ParseError with
/// the offending 1-based token position on malformed input.
Partition parse_partition(std::string_view text);

/// Ferrers-diagram transpose.  Involution: conjugate(conjugate(p)) == p.
Partition conjugate(const Partition& p);

/// Streams every partition of n exactly once, in reverse-lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n).  The stream holds p(n)
/// partitions in total, so exhausting it is only feasible for moderate n
/// (p(60) = 966467 already).
class PartitionStream {
 public:
  explicit PartitionStream(long long n);

  /// Advances to the next partition; false once exhausted.
  bool advance();
  /// Parts of the current partition; valid only until the next advance().
  std::span<const long long> view() const {
    return {parts_.data(), static_cast<std::size_t>(size_)};
  }
  /// Pull interface: advance and copy out.
  std::optional<Partition> next();

 private:
  enum class State { NotStarted, Active, Done };
  std::vector<long long> parts_;
  long long n_;
  long long size_ = 0;
  long long h_ = 0;  // 1-based index of the last part exceeding 1
  State state_ = State::NotStarted;
};

/// Streams every partition of n with at most max_parts parts, exactly once,
/// in reverse-lexicographic order.  Independent of PartitionStream: a bounded
/// depth-first descent rather than the successor rule, so the two enumerators
/// cross-validate.
class BoundedPartitionStream {
 public:
  BoundedPartitionStream(long long n, long long max_parts);

  bool advance();
  std::span<const long long> view() const {
    return {parts_.data(), parts_.size()};
  }
  std::optional<Partition> next();

 private:
  enum class State { NotStarted, Active, Done };
  void descend();
  std::vector<long long> parts_;
  long long n_;
  long long max_parts_;
  long long remaining_ = 0;
  State state_ = State::NotStarted;
};

inline PartitionStream enumerate_partitions(long long n) {
  return PartitionStream(n);
}

inline BoundedPartitionStream enumerate_partitions_max_parts(long long n,
                                                             long long max_parts) {
  return BoundedPartitionStream(n, max_parts);
}

/// Visits every partition of n as a span of nonincreasing parts.
template <typename Visitor>
void for_each_partition(long long n, Visitor&& visit) {
  PartitionStream stream(n);
  while (stream.advance()) visit(stream.view());
}

template <typename Visitor>
void for_each_partition_max_parts(long long n, long long max_parts,
                                  Visitor&& visit) {
  BoundedPartitionStream stream(n, max_parts);
  while (stream.advance()) visit(stream.view());
}

}  // namespace partfix
