#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wkit/search.hpp"
#include "wkit/theorems.hpp"

namespace wkit {
namespace {

const WilliamsonQuadruple kOrderTwo({1, 1}, {1, 1}, {1, -1}, {1, -1});

std::vector<WilliamsonQuadruple> found(std::size_t n) {
  SearchConfig cfg;
  cfg.n = n;
  return search(cfg).quadruples;
}

TEST(ProductTheoremOdd, Examples) {
  EXPECT_TRUE(product_theorem_odd_check(WilliamsonQuadruple({1}, {1}, {1}, {1})));
  EXPECT_TRUE(product_theorem_odd_check(WilliamsonQuadruple(
      {1, 1, 1}, {1, -1, -1}, {1, -1, -1}, {1, -1, -1})));
}

TEST(ProductTheoremOdd, Preconditions) {
  EXPECT_THROW(product_theorem_odd_check(kOrderTwo), PreconditionError);
  EXPECT_THROW(product_theorem_odd_check(WilliamsonQuadruple(
                   {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1})),
               PreconditionError);
}

TEST(ProductTheoremOdd, HoldsOnOddOrders) {
  for (std::size_t n : {1U, 3U, 5U, 7U, 9U}) {
    const auto qs = found(n);
    ASSERT_FALSE(qs.empty());
    for (const auto& q : qs) ASSERT_TRUE(product_theorem_odd_check(q)) << q.to_text();
  }
}

TEST(ProductTheoremEven, Examples) {
  EXPECT_TRUE(product_theorem_even_check(kOrderTwo));
  EXPECT_TRUE(product_theorem_even_check(
      WilliamsonQuadruple({1, 1}, {-1, -1}, {1, -1}, {-1, 1})));
}

TEST(ProductTheoremEven, Preconditions) {
  EXPECT_THROW(product_theorem_even_check(WilliamsonQuadruple({1}, {1}, {1}, {1})),
               PreconditionError);
  EXPECT_THROW(product_theorem_even_check(
                   WilliamsonQuadruple({1, 1}, {1, 1}, {1, 1}, {1, 1})),
               PreconditionError);
}

TEST(ProductTheoremEven, HoldsOnEvenOrders) {
  for (std::size_t n : {2U, 4U, 6U, 8U, 10U}) {
    const auto qs = found(n);
    ASSERT_FALSE(qs.empty());
    for (const auto& q : qs) {
      ASSERT_TRUE(product_theorem_even_check(q)) << q.to_text();
      ASSERT_TRUE(corollary_mod4_check(q)) << q.to_text();
    }
  }
}

TEST(Compress2, Examples) {
  EXPECT_EQ(compress2({1, 1}), CompressedSequence({2}));
  EXPECT_EQ(compress2({1, -1, 1, -1}), CompressedSequence({2, -2}));
  EXPECT_EQ(compress2({1, -1, -1, 1}), CompressedSequence({0, 0}));
  EXPECT_EQ(compress2({1, -1, 1, -1}).to_text(), "2 -2");
  EXPECT_THROW(compress2({1, 1, 1}), PreconditionError);
  EXPECT_THROW(CompressedSequence({1}), StructuralError);
}

TEST(Compress2, PreservesRowSum) {
  for (std::size_t n = 2; n <= 12; n += 2) {
    for (const auto& s : testing::all_sequences(n)) {
      const CompressedSequence c = compress2(s);
      int total = 0;
      for (int e : c.entries()) total += e;
      ASSERT_EQ(total, row_sum(s));
    }
  }
}

TEST(CorollaryMod4, Examples) {
  EXPECT_EQ(compressed_sum(kOrderTwo), std::vector<int>{4});
  EXPECT_TRUE(corollary_mod4_check(kOrderTwo));
  EXPECT_THROW(corollary_mod4_check(WilliamsonQuadruple({1}, {1}, {1}, {1})),
               PreconditionError);
  EXPECT_THROW(corollary_mod4_check(
                   WilliamsonQuadruple({1, 1}, {1, 1}, {1, 1}, {1, 1})),
               PreconditionError);
}

TEST(CorollaryMod4, AllZeroCompressionsPassTheFilter) {
  // Every member has opposite halves, so each 2-compression is all zero.
  const WilliamsonQuadruple q({1, -1}, {1, -1}, {-1, 1}, {1, -1});
  for (int e : compressed_sum(q)) EXPECT_EQ(e, 0);
  EXPECT_TRUE(mod4_filter(q));
}

TEST(CorollaryMod4, SumIsTwicePlusCountMinusEight) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 * (1 + trial % 12);
    const std::size_t m = n / 2;
    const auto q = testing::random_quadruple(rng, n);
    const auto sum = compressed_sum(q);
    for (std::size_t i = 0; i < m; ++i) {
      int plus = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        plus += (q.member(k)[i] == 1) + (q.member(k)[i + m] == 1);
      }
      ASSERT_EQ(sum[i], 2 * plus - 8);
    }
  }
}

TEST(TheoremFilter, Examples) {
  EXPECT_TRUE(theorem_filter(kOrderTwo));
  const WilliamsonQuadruple bad({1, 1}, {1, 1}, {1, 1}, {1, -1});
  EXPECT_FALSE(theorem_filter(bad));
  EXPECT_FALSE(is_williamson(bad));
  EXPECT_FALSE(matrix_williamson_check(bad));
}

TEST(TheoremFilter, NeverRejectsWilliamson) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& q : testing::brute_force_williamson(n)) {
      ASSERT_TRUE(theorem_filter(q)) << q.to_text();
      ASSERT_TRUE(mod4_filter(q)) << q.to_text();
    }
  }
}

TEST(TheoremFilter, MatchesEntryProductsDirectly) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 20;
    const auto q = testing::random_quadruple(rng, n);
    auto prod = [&](std::size_t i) {
      return q.a()[i] * q.b()[i] * q.c()[i] * q.d()[i];
    };
    bool expected = true;
    if (n % 2 == 0) {
      for (std::size_t i = 0; i < n / 2; ++i) expected &= prod(i) == prod(i + n / 2);
    } else {
      for (std::size_t i = 1; 2 * i < n; ++i) expected &= prod(i) == -prod(0);
    }
    ASSERT_EQ(theorem_filter(q), expected) << q.to_text();
  }
}

}  // namespace
}  // namespace wkit
