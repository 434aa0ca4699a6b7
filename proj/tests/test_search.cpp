#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "wkit/groupring.hpp"
#include "wkit/search.hpp"
#include "wkit/theorems.hpp"

namespace wkit {
namespace {

std::vector<std::string> texts(const std::vector<WilliamsonQuadruple>& qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) out.push_back(q.to_text());
  return out;
}

// Minimum text over all 16 negation patterns and 24 orderings.
std::string orbit_minimum(const WilliamsonQuadruple& q) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::string best;
  do {
    for (int signs = 0; signs < 16; ++signs) {
      std::string t;
      for (int k = 0; k < 4; ++k) {
        PmOneSequence s = q.member(perm[k]);
        if (signs & (1 << k)) s = s.negated();
        if (k) t += ';';
        t += s.to_text();
      }
      if (best.empty() || t < best) best = t;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Frozen from an independent brute-force enumeration over all ordered
// symmetric quadruples (explicit autocorrelation sums, orbit minimum over
// the 384 negation/permutation images).
struct KnownCount {
  std::size_t n;
  std::uint64_t raw;
  std::uint64_t canonical;
};
constexpr KnownCount kKnown[] = {
    {1, 16, 1},  {2, 96, 1},    {3, 64, 1},  {4, 256, 5},
    {5, 192, 1}, {6, 1536, 4},  {7, 960, 4}, {8, 1536, 9},
};

TEST(EnumerateSymmetric, Examples) {
  const auto one = enumerate_symmetric(1);
  ASSERT_EQ(one.size(), 2U);
  EXPECT_EQ(one[0], PmOneSequence({1}));
  EXPECT_EQ(one[1], PmOneSequence({-1}));
  EXPECT_EQ(enumerate_symmetric(2).size(), 4U);
  const auto three = enumerate_symmetric(3);
  ASSERT_EQ(three.size(), 4U);
  EXPECT_EQ(three[0].to_text(), "+++");
  EXPECT_EQ(three[1].to_text(), "+--");
  EXPECT_EQ(three[2].to_text(), "-++");
  EXPECT_EQ(three[3].to_text(), "---");
}

TEST(EnumerateSymmetric, MatchesDefinitionAndIsSorted) {
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto seqs = enumerate_symmetric(n);
    EXPECT_EQ(seqs.size(), std::size_t{1} << (n / 2 + 1));
    EXPECT_TRUE(std::is_sorted(seqs.begin(), seqs.end()));
    EXPECT_EQ(std::set<PmOneSequence>(seqs.begin(), seqs.end()),
              [&] {
                const auto ref = testing::symmetric_by_filter(n);
                return std::set<PmOneSequence>(ref.begin(), ref.end());
              }());
  }
}

TEST(RowSumPrefilter, MatchesDirectEnumeration) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const int order = static_cast<int>(n);
    std::vector<RowSums> expected;
    for (int a = -order; a <= order; ++a)
      for (int b = -order; b <= order; ++b)
        for (int c = -order; c <= order; ++c)
          for (int d = -order; d <= order; ++d) {
            const bool parity = ((a - order) % 2 == 0) && ((b - order) % 2 == 0) &&
                                ((c - order) % 2 == 0) && ((d - order) % 2 == 0);
            if (parity && a * a + b * b + c * c + d * d == 4 * order) {
              expected.push_back({a, b, c, d});
            }
          }
    EXPECT_EQ(rowsum_prefilter(n), expected) << "n=" << n;
  }
}

TEST(RowSumPrefilter, Examples) {
  // Sign patterns of (1,1,1,1); sign/permutation patterns of (2,2,0,0) and
  // (3,1,1,1).
  EXPECT_EQ(rowsum_prefilter(1).size(), 16U);
  EXPECT_EQ(rowsum_prefilter(2).size(), 6U * 4U);
  EXPECT_EQ(rowsum_prefilter(3).size(), 4U * 16U);
  for (const auto& r : rowsum_prefilter(2)) {
    std::array<int, 4> mags{std::abs(r[0]), std::abs(r[1]), std::abs(r[2]),
                            std::abs(r[3])};
    std::sort(mags.begin(), mags.end());
    EXPECT_EQ(mags, (std::array<int, 4>{0, 0, 2, 2}));
  }
}

TEST(Search, KnownCounts) {
  for (const auto& known : kKnown) {
    SearchConfig cfg;
    cfg.n = known.n;
    const auto result = search(cfg);
    EXPECT_EQ(result.report.raw_count, known.raw) << "n=" << known.n;
    EXPECT_EQ(result.quadruples.size(), known.raw) << "n=" << known.n;
    EXPECT_EQ(result.report.canonical_count, known.canonical) << "n=" << known.n;
    cfg.canonical_only = true;
    EXPECT_EQ(search(cfg).quadruples.size(), known.canonical) << "n=" << known.n;
  }
}

TEST(Search, CompleteAgainstMatrixBruteForce) {
  for (std::size_t n = 1; n <= 5; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    auto expected = testing::brute_force_williamson(n);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(texts(search(cfg).quadruples), texts(expected)) << "n=" << n;
  }
}

TEST(Search, FiltersNeverChangeTheResult) {
  for (std::size_t n = 1; n <= 8; ++n) {
    SearchConfig base;
    base.n = n;
    base.use_product_filter = base.use_mod4_filter =
        base.use_rowsum_prefilter = false;
    const auto reference = texts(search(base).quadruples);
    for (int mask = 1; mask < 8; ++mask) {
      SearchConfig cfg = base;
      cfg.use_rowsum_prefilter = mask & 1;
      cfg.use_product_filter = mask & 2;
      cfg.use_mod4_filter = mask & 4;
      EXPECT_EQ(texts(search(cfg).quadruples), reference)
          << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Search, DeterministicAcrossWorkerCounts) {
  for (std::size_t n : {6U, 8U, 10U}) {
    SearchConfig one;
    one.n = n;
    SearchConfig four = one;
    four.worker_count = 4;
    const auto r1 = search(one);
    const auto r4 = search(four);
    EXPECT_EQ(texts(r1.quadruples), texts(r4.quadruples));
    EXPECT_EQ(r1.report.pruned.rowsum, r4.report.pruned.rowsum);
    EXPECT_EQ(r1.report.pruned.product, r4.report.pruned.product);
    EXPECT_EQ(r1.report.pruned.mod4, r4.report.pruned.mod4);
    EXPECT_EQ(r1.report.paf_tested, r4.report.paf_tested);
  }
}

TEST(Search, ReportAccountsForEveryCandidate) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int mask = 0; mask < 8; ++mask) {
      SearchConfig cfg;
      cfg.n = n;
      cfg.use_rowsum_prefilter = mask & 1;
      cfg.use_product_filter = mask & 2;
      cfg.use_mod4_filter = mask & 4;
      const auto r = search(cfg).report;
      const std::uint64_t s = std::uint64_t{1} << (n / 2 + 1);
      EXPECT_EQ(r.candidates_examined, s * s * s * s);
      EXPECT_EQ(r.candidates_examined, r.pruned.total() + r.paf_tested);
      if (!cfg.use_rowsum_prefilter) EXPECT_EQ(r.pruned.rowsum, 0U);
      if (!cfg.use_product_filter) EXPECT_EQ(r.pruned.product, 0U);
      if (!cfg.use_mod4_filter || n % 2) EXPECT_EQ(r.pruned.mod4, 0U);
      EXPECT_GE(r.raw_count, r.canonical_count);
    }
  }
}

TEST(Search, ResultsPassEveryCheck) {
  for (std::size_t n = 1; n <= 8; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    for (const auto& q : search(cfg).quadruples) {
      ASSERT_TRUE(is_williamson(q));
      ASSERT_TRUE(matrix_williamson_check(q));
      ASSERT_TRUE(hall_identity_check(q));
      if (n % 2 == 0) {
        ASSERT_TRUE(product_theorem_even_check(q));
        ASSERT_TRUE(corollary_mod4_check(q));
      } else {
        ASSERT_TRUE(product_theorem_odd_check(q));
      }
    }
  }
}

TEST(Search, ConfigErrors) {
  SearchConfig cfg;
  cfg.n = 0;
  EXPECT_THROW(search(cfg), ConfigError);
  cfg.n = kDefaultOrderCap + 1;
  EXPECT_THROW(search(cfg), ConfigError);
  cfg.n = 2;
  cfg.worker_count = 0;
  EXPECT_THROW(search(cfg), ConfigError);
}

TEST(Search, OrderCapFromEnvironment) {
  ASSERT_EQ(::setenv("WKIT_MAX_N", "3", 1), 0);
  EXPECT_EQ(order_cap(), 3U);
  SearchConfig cfg;
  cfg.n = 4;
  EXPECT_THROW(search(cfg), ConfigError);
  ::setenv("WKIT_MAX_N", "65", 1);
  EXPECT_THROW(order_cap(), ConfigError);
  ::setenv("WKIT_MAX_N", "abc", 1);
  EXPECT_THROW(order_cap(), ConfigError);
  ::unsetenv("WKIT_MAX_N");
  EXPECT_EQ(order_cap(), kDefaultOrderCap);
}

TEST(Canonicalize, Examples) {
  const WilliamsonQuadruple ones({1}, {1}, {1}, {1});
  EXPECT_EQ(canonicalize(ones), ones);
  const WilliamsonQuadruple q({1, 1, 1}, {1, -1, -1}, {-1, 1, 1}, {1, -1, -1});
  const WilliamsonQuadruple swapped(q.a(), q.c(), q.b(), q.d());
  const WilliamsonQuadruple negated(q.a().negated(), q.b(), q.c(), q.d());
  EXPECT_EQ(canonicalize(q), canonicalize(swapped));
  EXPECT_EQ(canonicalize(q), canonicalize(negated));
}

TEST(Canonicalize, MatchesOrbitMinimumAndIsIdempotent) {
  for (std::size_t n = 1; n <= 8; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    std::set<std::string> orbits;
    for (const auto& q : search(cfg).quadruples) {
      const auto c = canonicalize(q);
      ASSERT_EQ(c.to_text(), orbit_minimum(q));
      ASSERT_EQ(canonicalize(c), c);
      ASSERT_TRUE(is_williamson(c));
      orbits.insert(c.to_text());
    }
    EXPECT_EQ(orbits.size(), kKnown[n - 1].canonical);
  }
}

TEST(Canonicalize, RandomQuadruplesMatchOrbitMinimum) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto q = testing::random_quadruple(rng, 1 + trial % 12);
    ASSERT_EQ(canonicalize(q).to_text(), orbit_minimum(q));
  }
}

TEST(WriteResults, Format) {
  SearchConfig cfg;
  cfg.n = 1;
  std::ostringstream os;
  write_results(os, cfg, search(cfg));
  std::istringstream lines(os.str());
  std::string line;
  int body = 0;
  bool in_report = false;
  while (std::getline(lines, line)) {
    if (line.starts_with('#')) {
      in_report = true;
    } else {
      EXPECT_FALSE(in_report) << "quadruple line after report block";
      ++body;
    }
  }
  EXPECT_EQ(body, 16);
  EXPECT_NE(os.str().find("# raw_count 16\n"), std::string::npos);
  EXPECT_NE(os.str().find("# canonical_count 1\n"), std::string::npos);
}

}  // namespace
}  // namespace wkit
