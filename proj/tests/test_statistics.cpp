#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "partfix/partition.hpp"
#include "partfix/statistics.hpp"

using partfix::FrobeniusSymbol;
using partfix::Partition;

namespace {

const Partition kAlpha({5, 3, 3, 3, 1});
const Partition kBeta({4, 4, 4, 2, 1});
const Partition kGamma({3});

std::vector<Partition> all_partitions(long long n) {
  std::vector<Partition> out;
  partfix::for_each_partition(n, [&](std::span<const long long> view) {
    out.emplace_back(std::vector<long long>(view.begin(), view.end()));
  });
  return out;
}

}  // namespace

TEST_CASE("durfee side of the worked examples") {
  CHECK(partfix::durfee_side(kAlpha) == 3);
  CHECK(partfix::durfee_side(kBeta) == 3);
  CHECK(partfix::durfee_side(kGamma) == 1);
  CHECK(partfix::durfee_side(Partition()) == 0);
}

TEST_CASE("frobenius symbols of the worked examples") {
  const FrobeniusSymbol alpha = partfix::frobenius_symbol(kAlpha);
  CHECK(alpha.top() == std::vector<long long>{4, 1, 0});
  CHECK(alpha.bottom() == std::vector<long long>{4, 2, 1});
  CHECK(alpha.to_text() == "4,1,0/4,2,1");

  const FrobeniusSymbol beta = partfix::frobenius_symbol(kBeta);
  CHECK(beta.top() == std::vector<long long>{3, 2, 1});
  CHECK(beta.bottom() == std::vector<long long>{4, 2, 0});
  CHECK(beta.to_text() == "3,2,1/4,2,0");

  const FrobeniusSymbol empty = partfix::frobenius_symbol(Partition());
  CHECK(empty.size() == 0);
  CHECK(empty.to_text() == "/");
}

TEST_CASE("frobenius symbol validation") {
  CHECK_THROWS_AS(FrobeniusSymbol({2, 1}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(FrobeniusSymbol({2, 2}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FrobeniusSymbol({2, -1}, {1, 0}), std::invalid_argument);
  CHECK_NOTHROW(FrobeniusSymbol({2, 0}, {3, 1}));
}

TEST_CASE("frobenius symbol round-trips and carries the weight, n <= 25") {
  for (long long n = 0; n <= 25; ++n)
    for (const Partition& p : all_partitions(n)) {
      const FrobeniusSymbol symbol = partfix::frobenius_symbol(p);
      const long long top_sum =
          std::accumulate(symbol.top().begin(), symbol.top().end(), 0LL);
      const long long bottom_sum =
          std::accumulate(symbol.bottom().begin(), symbol.bottom().end(), 0LL);
      REQUIRE(static_cast<long long>(symbol.size()) + top_sum + bottom_sum == n);
      REQUIRE(partfix::partition_from_frobenius(symbol) == p);
    }
}

TEST_CASE("conjugation swaps the frobenius rows, n <= 20") {
  for (long long n = 0; n <= 20; ++n)
    for (const Partition& p : all_partitions(n)) {
      const FrobeniusSymbol symbol = partfix::frobenius_symbol(p);
      const FrobeniusSymbol flipped =
          partfix::frobenius_symbol(partfix::conjugate(p));
      REQUIRE(flipped.top() == symbol.bottom());
      REQUIRE(flipped.bottom() == symbol.top());
    }
}

TEST_CASE("crank of the worked examples") {
  CHECK(partfix::crank(kAlpha) == 3);
  CHECK(partfix::crank(kBeta) == 3);
  CHECK(partfix::crank(kGamma) == 3);  // no parts 1, so the largest part
  CHECK(partfix::crank(Partition({1})) == -1);
  CHECK(partfix::crank(Partition({1, 1})) == -2);
  CHECK(partfix::crank(Partition({2})) == 2);
  CHECK(partfix::crank(Partition({3, 1})) == 0);
  CHECK(partfix::crank(Partition({2, 1, 1})) == -2);
  CHECK_THROWS_AS(partfix::crank(Partition()), std::domain_error);
}

TEST_CASE("mex of the worked examples") {
  CHECK(partfix::mex(kAlpha) == 2);
  CHECK(partfix::mex(kBeta) == 3);
  CHECK(partfix::mex_j(kAlpha, 1) == 2);
  CHECK(partfix::mex_j(kAlpha, 2) == 4);
  CHECK(partfix::mex(Partition()) == 1);
  CHECK(partfix::mex_j(Partition(), 5) == 6);
  CHECK_THROWS_AS(partfix::mex_j(kAlpha, -1), std::invalid_argument);
}

TEST_CASE("mex_j is the least excluded value above j, n <= 15") {
  for (long long n = 0; n <= 15; ++n)
    for (const Partition& p : all_partitions(n))
      for (long long j = 0; j <= 4; ++j) {
        const long long value = partfix::mex_j(p, j);
        REQUIRE(value > j);
        const auto& parts = p.parts();
        const auto is_part = [&](long long x) {
          return std::binary_search(parts.rbegin(), parts.rend(), x);
        };
        REQUIRE_FALSE(is_part(value));
        for (long long x = j + 1; x < value; ++x) REQUIRE(is_part(x));
      }
}

TEST_CASE("rectangle rows of the worked examples") {
  CHECK(partfix::durfee_rect_rows(kAlpha, 1) == 2);   // 2 x 3 rectangle
  CHECK(partfix::durfee_rect_rows(kAlpha, -2) == 4);  // 4 x 2 rectangle
  CHECK(partfix::durfee_rect_rows(kAlpha, 0) == partfix::durfee_side(kAlpha));
  CHECK(partfix::durfee_rect_rows(Partition(), 2) == 0);
  CHECK(partfix::durfee_rect_rows(Partition(), -2) == 0);
}

TEST_CASE("rectangle rows match the defining count, n <= 12") {
  for (long long n = 0; n <= 12; ++n)
    for (const Partition& p : all_partitions(n))
      for (long long j = -3; j <= 3; ++j) {
        long long direct = 0;
        for (std::size_t i = 1; i <= p.part_count(); ++i)
          if (p.part(i) >= static_cast<long long>(i) + j) ++direct;
        REQUIRE(partfix::durfee_rect_rows(p, j) == direct);
      }
}

TEST_CASE("fixed points of the worked examples") {
  const auto alpha0 = partfix::find_fixed_point(kAlpha, 0);
  CHECK(alpha0.found);
  CHECK(alpha0.index == 3);  // alpha_3 = 3

  CHECK_FALSE(partfix::find_fixed_point(kBeta, 0).found);

  const auto alpha1 = partfix::find_fixed_point(kAlpha, 1);
  CHECK(alpha1.found);
  CHECK(alpha1.index == 2);  // alpha_2 = 2 + 1

  const auto beta1 = partfix::find_fixed_point(kBeta, 1);
  CHECK(beta1.found);
  CHECK(beta1.index == 3);  // beta_3 = 3 + 1

  CHECK_FALSE(partfix::find_fixed_point(kAlpha, -2).found);
  const auto beta_neg2 = partfix::find_fixed_point(kBeta, -2);
  CHECK(beta_neg2.found);
  CHECK(beta_neg2.index == 4);  // beta_4 = 4 - 2

  CHECK_FALSE(partfix::find_fixed_point(kGamma, -2).found);
  CHECK_FALSE(partfix::find_fixed_point(Partition(), 0).found);
}

TEST_CASE("fixed point index is the unique match, n <= 15") {
  for (long long n = 0; n <= 15; ++n)
    for (const Partition& p : all_partitions(n))
      for (long long k = -3; k <= 3; ++k) {
        std::vector<std::size_t> matches;
        for (std::size_t i = 1; i <= p.part_count(); ++i)
          if (p.part(i) == static_cast<long long>(i) + k) matches.push_back(i);
        REQUIRE(matches.size() <= 1);
        const auto result = partfix::find_fixed_point(p, k);
        REQUIRE(result.found == (matches.size() == 1));
        if (result.found) REQUIRE(result.index == matches.front());
      }
}

TEST_CASE("k-fixed point is equivalent to k in the frobenius top row") {
  for (long long n = 0; n <= 20; ++n)
    for (const Partition& p : all_partitions(n)) {
      const FrobeniusSymbol symbol = partfix::frobenius_symbol(p);
      const auto& top = symbol.top();
      for (long long k = 0; k <= 6; ++k) {
        const bool in_top = std::binary_search(top.rbegin(), top.rend(), k);
        REQUIRE(partfix::find_fixed_point(p, k).found == in_top);
      }
    }
}

TEST_CASE("a (-k)-fixed point needs more than k parts") {
  for (long long n = 0; n <= 20; ++n)
    for (const Partition& p : all_partitions(n))
      for (long long k = 1; k <= 4; ++k)
        if (partfix::find_fixed_point(p, -k).found)
          REQUIRE(static_cast<long long>(p.part_count()) > k);
}
