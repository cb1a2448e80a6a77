#include "partfix/qseries.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace partfix {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeff_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeff_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int exponent, int order) {
  TruncatedSeries s(order);
  if (exponent < 0 || exponent > order)
    throw std::out_of_range("monomial exponent outside truncation order");
  s.coeff_[static_cast<std::size_t>(exponent)] = 1;
  return s;
}

const BigInt& TruncatedSeries::coefficient(int n) const {
  if (n < 0 || n > order_)
    throw std::out_of_range("coefficient index outside truncation order");
  return coeff_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coefficient(int n, BigInt value) {
  if (n < 0 || n > order_)
    throw std::out_of_range("coefficient index outside truncation order");
  coeff_[static_cast<std::size_t>(n)] = std::move(value);
}

TruncatedSeries TruncatedSeries::shifted(int e) const {
  if (e < 0) throw std::invalid_argument("shift exponent must be nonnegative");
  TruncatedSeries s(order_);
  for (int i = 0; i + e <= order_; ++i)
    s.coeff_[static_cast<std::size_t>(i + e)] = coeff_[static_cast<std::size_t>(i)];
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order_)
    throw std::invalid_argument("truncation must shorten the series");
  TruncatedSeries s(new_order);
  for (int i = 0; i <= new_order; ++i)
    s.coeff_[static_cast<std::size_t>(i)] = coeff_[static_cast<std::size_t>(i)];
  return s;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series orders differ; truncate explicitly");
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (int i = 0; i <= order_; ++i)
    coeff_[static_cast<std::size_t>(i)] += rhs.coeff_[static_cast<std::size_t>(i)];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  for (int i = 0; i <= order_; ++i)
    coeff_[static_cast<std::size_t>(i)] -= rhs.coeff_[static_cast<std::size_t>(i)];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  require_same_order(lhs, rhs);
  const int order = lhs.order();
  TruncatedSeries product(order);
  for (int i = 0; i <= order; ++i) {
    const BigInt& a = lhs.coeff_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; i + j <= order; ++j)
      product.coeff_[static_cast<std::size_t>(i + j)] +=
          a * rhs.coeff_[static_cast<std::size_t>(j)];
  }
  return product;
}

std::string TruncatedSeries::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e <= order_; ++e) {
    const BigInt& c = coeff_[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (e == 0) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude << '*';
      out << 'q';
      if (e > 1) out << '^' << e;
    }
  }
  if (first) out << '0';
  return out.str();
}

std::vector<std::string> TruncatedSeries::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeff_.size());
  for (const BigInt& c : coeff_) out.push_back(c.get_str());
  return out;
}

namespace {

struct PochhammerCache {
  std::map<std::pair<long long, int>, TruncatedSeries> entries;
  std::shared_mutex mutex;
};

PochhammerCache& pochhammer_cache() {
  static PochhammerCache cache;
  return cache;
}

TruncatedSeries compute_inv_pochhammer(long long m, int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  // Multiplying by 1/(1-q^t) is a prefix sum with stride t; factors with
  // t > order cannot touch coefficients at or below the truncation.
  for (long long t = 1; t <= m && t <= order; ++t)
    for (int i = static_cast<int>(t); i <= order; ++i)
      s.set_coefficient(i, s.coefficient(i) + s.coefficient(i - static_cast<int>(t)));
  return s;
}

}  // namespace

TruncatedSeries inv_pochhammer(long long m, int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (m < 0) return TruncatedSeries::zero(order);
  auto& cache = pochhammer_cache();
  const std::pair<long long, int> key{m, order};
  {
    std::shared_lock lock(cache.mutex);
    const auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  TruncatedSeries s = compute_inv_pochhammer(m, order);
  std::unique_lock lock(cache.mutex);
  return cache.entries.try_emplace(key, std::move(s)).first->second;
}

TruncatedSeries gf_fixed(long long k, int order) {
  if (k < 0) throw std::invalid_argument("gf_fixed requires k >= 0");
  TruncatedSeries sum = TruncatedSeries::zero(order);
  for (long long i = 1; i * (i + k) <= order; ++i) {
    const auto e = static_cast<int>(i * (i + k));
    sum += (inv_pochhammer(i + k, order) * inv_pochhammer(i - 1, order)).shifted(e);
  }
  return sum;
}

TruncatedSeries gf_all(long long k, int order) {
  if (k < 0) throw std::invalid_argument("gf_all requires k >= 0");
  TruncatedSeries sum = TruncatedSeries::zero(order);
  for (long long i = 0; i * (i + k) <= order; ++i) {
    const auto e = static_cast<int>(i * (i + k));
    sum += (inv_pochhammer(i + k, order) * inv_pochhammer(i, order)).shifted(e);
  }
  return sum;
}

TruncatedSeries gf_unfixed(long long k, int order) {
  if (k < 0) throw std::invalid_argument("gf_unfixed requires k >= 0");
  TruncatedSeries sum = TruncatedSeries::zero(order);
  for (long long i = 0; i * (i + k + 1) <= order; ++i) {
    const auto e = static_cast<int>(i * (i + k + 1));
    sum += (inv_pochhammer(i + k, order) * inv_pochhammer(i, order)).shifted(e);
  }
  return sum;
}

TruncatedSeries gf_neg_fixed(long long k, int order) {
  if (k < 1) throw std::invalid_argument("gf_neg_fixed requires k >= 1");
  TruncatedSeries sum = TruncatedSeries::zero(order);
  for (long long i = k + 1; i * (i - k) <= order; ++i) {
    const auto e = static_cast<int>(i * (i - k));
    sum += (inv_pochhammer(i - k, order) * inv_pochhammer(i - 1, order)).shifted(e);
  }
  return sum;
}

TruncatedSeries gf_crank_tail(long long j, int order) {
  TruncatedSeries sum = TruncatedSeries::zero(order);
  // Terms with i + j < 0 vanish (1/(q;q)_{i+j} is zero there), so the sum
  // effectively starts at i = max(0, -j), where the exponent is nonnegative.
  for (long long i = std::max<long long>(0, -j); (i + 1) * (i + j) <= order; ++i) {
    const auto e = static_cast<int>((i + 1) * (i + j));
    sum += (inv_pochhammer(i, order) * inv_pochhammer(i + j, order)).shifted(e);
  }
  return sum;
}

}  // namespace partfix
