#pragma once

#include <string>
#include <vector>

#include "partfix/bigint.hpp"

namespace partfix {

/// Formal power series in q truncated at a fixed order N: coefficients of
/// q^0 .. q^N, exact integers.  Value type; arithmetic never changes the
/// order silently, and mixing orders throws std::invalid_argument.
class TruncatedSeries {
 public:
  /// The zero series of the given order (order >= 0).
  explicit TruncatedSeries(int order);

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries one(int order);
  /// q^exponent; requires 0 <= exponent <= order.
  static TruncatedSeries monomial(int exponent, int order);

  int order() const noexcept { return order_; }
  /// Coefficient of q^n; throws std::out_of_range unless 0 <= n <= order.
  const BigInt& coefficient(int n) const;
  void set_coefficient(int n, BigInt value);

  /// Multiplication by q^e with truncation; requires e >= 0.
  TruncatedSeries shifted(int e) const;
  /// Drops coefficients above new_order; requires new_order <= order.
  TruncatedSeries truncated(int new_order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    lhs -= rhs;
    return lhs;
  }
  /// Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs,
                                   const TruncatedSeries& rhs);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// "1 + q + 2*q^2 + ..." with zero terms skipped; the zero series is "0".
  std::string to_text() const;
  /// Exact decimal strings, index = exponent, length order + 1.
  std::vector<std::string> coefficient_strings() const;

 private:
  int order_;
  std::vector<BigInt> coeff_;
};

/// Truncation of 1/(q;q)_m = 1/((1-q)(1-q^2)...(1-q^m)) to the given order.
/// Coefficient of q^n counts partitions of n into parts <= m.  m = 0 gives 1.
/// Negative m gives the ZERO series: sum terms carrying a negative Pochhammer
/// index vanish by convention, which is what makes the tail generating
/// function below match the enumeration oracle for every integer j.
/// Results are cached per (m, order) for the process lifetime.
TruncatedSeries inv_pochhammer(long long m, int order);

/// Generating function of f_k(n), partitions with a k-fixed point (k >= 0):
///   sum_{i>=1} q^{i(i+k)} / ((q;q)_{i+k} (q;q)_{i-1}).
TruncatedSeries gf_fixed(long long k, int order);

/// sum_{i>=0} q^{i(i+k)} / ((q;q)_{i+k} (q;q)_i); for every k >= 0 the
/// coefficient of q^n is p(n).
TruncatedSeries gf_all(long long k, int order);

/// Generating function of g_k(n), partitions without a k-fixed point (k >= 0):
///   sum_{i>=0} q^{i(i+k+1)} / ((q;q)_{i+k} (q;q)_i).
TruncatedSeries gf_unfixed(long long k, int order);

/// Generating function of f_{-k}(n) for k >= 1:
///   sum_{i>=k+1} q^{i(i-k)} / ((q;q)_{i-k} (q;q)_{i-1}).
TruncatedSeries gf_neg_fixed(long long k, int order);

/// Generating function whose coefficient of q^n is sum_{m>=j} M(m, n) for
/// n >= 2 (any integer j):
///   sum_{i>=0} q^{(i+1)(i+j)} / ((q;q)_i (q;q)_{i+j}).
/// At n = 1 the series follows the generating-function crank convention and
/// differs from the combinatorial count.
TruncatedSeries gf_crank_tail(long long j, int order);

}  // namespace partfix
