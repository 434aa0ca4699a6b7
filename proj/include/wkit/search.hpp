#pragma once

// Exhaustive enumeration of Williamson quadruples of a given order.
//
// The candidate space is every ordered quadruple of symmetric ±1 sequences.
// A, B and C are enumerated directly; D is found by scanning symmetric
// candidates against the autocorrelation deficit left by A, B and C. Three
// necessary conditions may prune candidates before the autocorrelation test,
// always in this order:
//
//   rowsum   s_A^2 + s_B^2 + s_C^2 + s_D^2 == 4n; D is only drawn from
//            admissible row-sum cells, the rest are skipped in bulk
//   product  the parity-appropriate product theorem
//   mod4     A' + B' + C' + D' == 0 (mod 4) on the 2-compressions (even n)
//
// None of them changes the result set; the report records how many
// candidates each one removed.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "wkit/seqcore.hpp"

namespace wkit {

inline constexpr std::size_t kDefaultOrderCap = 14;

/// Order cap for exhaustive search: WKIT_MAX_N if set to an integer in
/// [1, kMaxOrder], otherwise kDefaultOrderCap. A malformed or out-of-range
/// WKIT_MAX_N is a ConfigError.
std::size_t order_cap();

struct SearchConfig {
  std::size_t n = 1;
  bool use_product_filter = true;
  bool use_mod4_filter = true;
  bool use_rowsum_prefilter = true;
  bool canonical_only = false;
  std::size_t worker_count = 1;
};

struct PruneCounts {
  std::uint64_t rowsum = 0;
  std::uint64_t product = 0;
  std::uint64_t mod4 = 0;

  std::uint64_t total() const noexcept { return rowsum + product + mod4; }
};

struct SearchReport {
  std::uint64_t raw_count = 0;
  std::uint64_t canonical_count = 0;
  /// Every ordered candidate quadruple, including those skipped in bulk.
  /// Equals pruned.total() + paf_tested.
  std::uint64_t candidates_examined = 0;
  std::uint64_t paf_tested = 0;
  PruneCounts pruned;
  std::chrono::nanoseconds elapsed{0};
};

struct SearchResult {
  /// Sorted by quadruple text form. Raw ordered quadruples, or canonical
  /// representatives when SearchConfig::canonical_only is set.
  std::vector<WilliamsonQuadruple> quadruples;
  SearchReport report;
};

/// Visits every symmetric ±1 sequence of length n once, in lexicographic
/// ('+' before '-') order of the free entries 0..n/2.
void enumerate_symmetric(std::size_t n,
                         const std::function<void(const PmOneSequence&)>& visit);
std::vector<PmOneSequence> enumerate_symmetric(std::size_t n);

using RowSums = std::array<int, 4>;

/// All (s_A, s_B, s_C, s_D) with |s| <= n, s == n (mod 2) and squares summing
/// to 4n, sorted ascending.
std::vector<RowSums> rowsum_prefilter(std::size_t n);

/// Smallest quadruple text form reachable by negating members and permuting
/// them.
WilliamsonQuadruple canonicalize(const WilliamsonQuadruple& q);

/// Throws ConfigError for n outside [1, order_cap()] or worker_count == 0.
SearchResult search(const SearchConfig& cfg);

/// One quadruple per line followed by '#' report lines.
void write_results(std::ostream& os, const SearchConfig& cfg,
                   const SearchResult& result);

}  // namespace wkit
