#include "partfix/partition.hpp"

#include <cctype>
#include <charconv>

namespace partfix {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be nonincreasing");
    weight_ += parts_[i];
  }
}

std::string Partition::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  if (trim(text).empty()) return {};
  std::vector<long long> parts;
  std::size_t position = 1;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token =
        trim(comma == std::string_view::npos ? text.substr(start)
                                             : text.substr(start, comma - start));
    long long value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw ParseError(ParseError::Kind::NonIntegerToken, position,
                       "token " + std::to_string(position) + " is not an integer");
    if (value < 1)
      throw ParseError(ParseError::Kind::NonPositivePart, position,
                       "part " + std::to_string(position) + " must be positive");
    if (!parts.empty() && value > parts.back())
      throw ParseError(ParseError::Kind::IncreasingPair, position,
                       "part " + std::to_string(position) +
                           " exceeds its predecessor; parts must be nonincreasing");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
    ++position;
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<long long> columns(static_cast<std::size_t>(p.parts().front()), 0);
  for (long long part : p.parts())
    for (long long j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
  return Partition(std::move(columns));
}

PartitionStream::PartitionStream(long long n) : n_(n) {
  if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
  if (n > 0) parts_.assign(static_cast<std::size_t>(n), 1);
}

/* Successor rule: with parts_ nonincreasing and every entry after position h_
 * equal to 1, decrement the last part exceeding 1 to r, refill with copies of
 * r, and append the remainder.  Visits the partitions of n in
 * reverse-lexicographic order starting from (n). */
bool PartitionStream::advance() {
  switch (state_) {
    case State::Done:
      return false;
    case State::NotStarted:
      state_ = State::Active;
      size_ = n_ > 0 ? 1 : 0;
      if (n_ > 0) {
        parts_[0] = n_;
        h_ = 1;
      }
      return true;
    case State::Active:
      break;
  }
  if (n_ == 0 || parts_[0] == 1) {
    state_ = State::Done;
    return false;
  }
  long long& last_big = parts_[static_cast<std::size_t>(h_ - 1)];
  if (last_big == 2) {
    ++size_;
    last_big = 1;
    --h_;
  } else {
    const long long r = last_big - 1;
    long long t = size_ - h_ + 1;
    last_big = r;
    while (t >= r) {
      ++h_;
      parts_[static_cast<std::size_t>(h_ - 1)] = r;
      t -= r;
    }
    if (t == 0) {
      size_ = h_;
    } else {
      size_ = h_ + 1;
      if (t > 1) {
        ++h_;
        parts_[static_cast<std::size_t>(h_ - 1)] = t;
      }
    }
  }
  return true;
}

std::optional<Partition> PartitionStream::next() {
  if (!advance()) return std::nullopt;
  const auto v = view();
  return Partition(std::vector<long long>(v.begin(), v.end()));
}

BoundedPartitionStream::BoundedPartitionStream(long long n, long long max_parts)
    : n_(n), max_parts_(max_parts) {
  if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
  if (max_parts < 0) throw std::invalid_argument("part bound must be nonnegative");
}

void BoundedPartitionStream::descend() {
  while (remaining_ > 0) {
    const long long bound =
        parts_.empty() ? remaining_ : std::min(parts_.back(), remaining_);
    parts_.push_back(bound);
    remaining_ -= bound;
  }
}

/* Depth-first descent over nonincreasing prefixes: each step takes the
 * largest part the remainder and slot budget allow, and backtracking retries
 * the deepest choice one lower.  A value v fits at depth d exactly when the
 * remainder spreads over the leftover slots: ceil(remaining / v) <= slots. */
bool BoundedPartitionStream::advance() {
  switch (state_) {
    case State::Done:
      return false;
    case State::NotStarted:
      state_ = State::Active;
      if (n_ == 0) return true;  // the empty partition, even with bound 0
      if (max_parts_ == 0) {
        state_ = State::Done;
        return false;
      }
      remaining_ = n_;
      descend();
      return true;
    case State::Active:
      break;
  }
  while (!parts_.empty()) {
    const long long popped = parts_.back();
    parts_.pop_back();
    remaining_ += popped;
    const long long slots = max_parts_ - static_cast<long long>(parts_.size());
    const long long lower = popped - 1;
    if (lower >= 1 && (remaining_ + lower - 1) / lower <= slots) {
      parts_.push_back(lower);
      remaining_ -= lower;
      descend();
      return true;
    }
  }
  state_ = State::Done;
  return false;
}

std::optional<Partition> BoundedPartitionStream::next() {
  if (!advance()) return std::nullopt;
  const auto v = view();
  return Partition(std::vector<long long>(v.begin(), v.end()));
}

}  // namespace partfix
