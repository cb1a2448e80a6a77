#include "partfix/statistics.hpp"

#include <stdexcept>

namespace partfix {

FrobeniusSymbol::FrobeniusSymbol(std::vector<long long> top,
                                 std::vector<long long> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size())
    throw std::invalid_argument("Frobenius rows must have equal length");
  for (const auto* row : {&top_, &bottom_}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      if ((*row)[i] < 0)
        throw std::invalid_argument("Frobenius entries must be nonnegative");
      if (i > 0 && (*row)[i] >= (*row)[i - 1])
        throw std::invalid_argument("Frobenius rows must strictly decrease");
    }
  }
}

std::string FrobeniusSymbol::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < top_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(top_[i]);
  }
  out += '/';
  for (std::size_t i = 0; i < bottom_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(bottom_[i]);
  }
  return out;
}

long long durfee_side(const Partition& p) {
  const auto& parts = p.parts();
  long long d = 0;
  while (d < static_cast<long long>(parts.size()) &&
         parts[static_cast<std::size_t>(d)] >= d + 1)
    ++d;
  return d;
}

long long durfee_rect_rows(const Partition& p, long long j) {
  // part(i) - i strictly decreases, so the rows satisfying part(i) >= i + j
  // form a prefix.
  const auto& parts = p.parts();
  long long rows = 0;
  while (rows < static_cast<long long>(parts.size()) &&
         parts[static_cast<std::size_t>(rows)] >= rows + 1 + j)
    ++rows;
  return rows;
}

FrobeniusSymbol frobenius_symbol(const Partition& p) {
  const long long d = durfee_side(p);
  std::vector<long long> top(static_cast<std::size_t>(d));
  std::vector<long long> bottom(static_cast<std::size_t>(d));
  const Partition conj = conjugate(p);
  for (long long i = 1; i <= d; ++i) {
    top[static_cast<std::size_t>(i - 1)] = p.part(static_cast<std::size_t>(i)) - i;
    bottom[static_cast<std::size_t>(i - 1)] =
        conj.part(static_cast<std::size_t>(i)) - i;
  }
  return FrobeniusSymbol(std::move(top), std::move(bottom));
}

Partition partition_from_frobenius(const FrobeniusSymbol& symbol) {
  const long long d = static_cast<long long>(symbol.size());
  std::vector<long long> parts;
  for (long long i = 1; i <= d; ++i)
    parts.push_back(symbol.top()[static_cast<std::size_t>(i - 1)] + i);
  // Row i below the Durfee square has one cell per column of height >= i.
  for (long long i = d + 1;; ++i) {
    long long row = 0;
    for (long long j = 1; j <= d; ++j)
      if (symbol.bottom()[static_cast<std::size_t>(j - 1)] + j >= i) ++row;
    if (row == 0) break;
    parts.push_back(row);
  }
  return Partition(std::move(parts));
}

long long crank(const Partition& p) {
  if (p.empty())
    throw std::domain_error("crank is undefined for the empty partition");
  const auto& parts = p.parts();
  long long ones = 0;
  for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++ones;
  if (ones == 0) return parts.front();
  long long larger = 0;
  for (long long part : parts) {
    if (part <= ones) break;
    ++larger;
  }
  return larger - ones;
}

long long mex_j(const Partition& p, long long j) {
  if (j < 0) throw std::invalid_argument("mex_j requires j >= 0");
  const auto& parts = p.parts();
  long long candidate = j + 1;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (*it < candidate) continue;
    if (*it == candidate)
      ++candidate;
    else
      break;
  }
  return candidate;
}

FixedPointResult find_fixed_point(const Partition& p, long long k) {
  const auto& parts = p.parts();
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    const long long diff = parts[i - 1] - static_cast<long long>(i);
    if (diff == k) return {true, i};
    if (diff < k) break;  // part(i) - i strictly decreases: no later match
  }
  return {};
}

}  // namespace partfix
