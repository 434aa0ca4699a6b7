#pragma once

// Product theorems for Williamson sequences (odd and even order), the
// 2-compression transform and its mod-4 consequence, plus an unguarded
// necessary-condition filter for use while searching.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wkit/seqcore.hpp"

namespace wkit {

/// Length-m sequence a'_i = a_i + a_{i+m} of a length-2m ±1 sequence.
/// Entries are in {-2, 0, 2}.
class CompressedSequence {
 public:
  /// Throws StructuralError if any entry is outside {-2, 0, 2}.
  explicit CompressedSequence(std::vector<int> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const& noexcept { return entries_; }
  std::span<const int> entries() const&& = delete;

  /// Space-separated integers.
  std::string to_text() const;

  friend bool operator==(const CompressedSequence&,
                         const CompressedSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// Odd n: a_i b_i c_i d_i == -a_0 b_0 c_0 d_0 for 1 <= i < n/2.
/// PreconditionError for even n or a non-Williamson quadruple.
bool product_theorem_odd_check(const WilliamsonQuadruple& q);

/// Even n = 2m: a_i b_i c_i d_i == a_{i+m} b_{i+m} c_{i+m} d_{i+m} for
/// 0 <= i < m. PreconditionError for odd n or a non-Williamson quadruple.
bool product_theorem_even_check(const WilliamsonQuadruple& q);

/// PreconditionError for odd length.
CompressedSequence compress2(const PmOneSequence& s);

/// Entrywise A' + B' + C' + D' of the four 2-compressions. No Williamson
/// requirement; PreconditionError for odd n.
std::vector<int> compressed_sum(const WilliamsonQuadruple& q);

/// Every entry of A' + B' + C' + D' is 0 mod 4.
/// PreconditionError for odd n or a non-Williamson quadruple.
bool corollary_mod4_check(const WilliamsonQuadruple& q);

/// Product condition on the XOR of the four negative-entry masks (bit i of
/// `product_mask` set iff a_i b_i c_i d_i == -1). Parity of n selects the
/// odd or even statement.
bool product_condition_holds(std::size_t n, std::uint64_t product_mask);

/// Unguarded product-theorem filter for candidates. Returns false only for
/// quadruples that cannot be Williamson.
bool theorem_filter(const WilliamsonQuadruple& candidate);

/// Unguarded mod-4 filter. Always true for odd n (no compression exists).
bool mod4_filter(const WilliamsonQuadruple& candidate);

}  // namespace wkit
