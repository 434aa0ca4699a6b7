#pragma once

// Core sequence types for Williamson sequences: ±1 sequences (first rows of
// circulant matrices), quadruples of them, a small dense integer matrix used
// by the oracles, and the Williamson condition in periodic-autocorrelation
// form and in explicit matrix form.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wkit/errors.hpp"

namespace wkit {

/// Largest order any sequence may have. Search masks are 64-bit words.
inline constexpr std::size_t kMaxOrder = 64;

/// Finite sequence of +1/-1 entries, indexed 0..n-1. Immutable.
class PmOneSequence {
 public:
  /// Throws StructuralError if empty, longer than kMaxOrder, or any entry
  /// is not +1/-1.
  explicit PmOneSequence(std::vector<int> entries);
  PmOneSequence(std::initializer_list<int> entries)
      : PmOneSequence(std::vector<int>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const& noexcept { return entries_; }
  std::span<const int> entries() const&& = delete;

  /// Entrywise negation.
  PmOneSequence negated() const;

  /// Bit i set iff entry i is -1.
  std::uint64_t negative_mask() const noexcept;

  /// "+--" form.
  std::string to_text() const;

  friend bool operator==(const PmOneSequence&, const PmOneSequence&) = default;
  friend auto operator<=>(const PmOneSequence& x, const PmOneSequence& y) {
    return x.to_text() <=> y.to_text();
  }

 private:
  std::vector<int> entries_;
};

/// Four symmetric ±1 sequences of a common length n.
class WilliamsonQuadruple {
 public:
  /// Throws StructuralError if the lengths differ or any member is not
  /// symmetric.
  WilliamsonQuadruple(PmOneSequence a, PmOneSequence b, PmOneSequence c,
                      PmOneSequence d);

  std::size_t order() const noexcept { return a_.size(); }
  const PmOneSequence& a() const noexcept { return a_; }
  const PmOneSequence& b() const noexcept { return b_; }
  const PmOneSequence& c() const noexcept { return c_; }
  const PmOneSequence& d() const noexcept { return d_; }

  /// Member k in 0..3 (a, b, c, d).
  const PmOneSequence& member(std::size_t k) const;

  /// "a;b;c;d" in sequence text form.
  std::string to_text() const;

  friend bool operator==(const WilliamsonQuadruple&,
                         const WilliamsonQuadruple&) = default;
  friend auto operator<=>(const WilliamsonQuadruple& x,
                          const WilliamsonQuadruple& y) {
    return x.to_text() <=> y.to_text();
  }

 private:
  PmOneSequence a_, b_, c_, d_;
};

/// Dense row-major integer matrix.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t order);
  /// Throws StructuralError unless entries.size() == order * order.
  SquareMatrix(std::size_t order, std::vector<std::int64_t> entries);

  static SquareMatrix identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }
  std::int64_t& operator()(std::size_t row, std::size_t col) {
    return entries_[row * order_ + col];
  }
  std::span<const std::int64_t> entries() const& noexcept {
    return entries_;
  }
  std::span<const std::int64_t> entries() const&& = delete;

  SquareMatrix transposed() const;

  SquareMatrix& operator+=(const SquareMatrix& other);
  friend SquareMatrix operator+(SquareMatrix x, const SquareMatrix& y) {
    return x += y;
  }
  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y);
  friend SquareMatrix operator*(std::int64_t k, SquareMatrix x);

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<std::int64_t> entries_;
};

/// s[i] == s[(n - i) mod n] for all i. Orders 1 and 2 are always symmetric.
bool is_symmetric(const PmOneSequence& s);

/// Periodic autocorrelation sum_i s[i] * s[(i + shift) mod n].
/// Throws std::out_of_range unless 0 <= shift < n.
int paf(const PmOneSequence& s, std::size_t shift);

int row_sum(const PmOneSequence& s);

/// PAF form of A^2 + B^2 + C^2 + D^2 = 4n I: the four autocorrelations sum
/// to zero at every nonzero shift. Only shifts 1..n/2 are evaluated since
/// paf(s, k) == paf(s, n - k).
bool is_williamson(const WilliamsonQuadruple& q);

/// M[i][j] = s[(j - i) mod n]; row 0 is s.
SquareMatrix circulant(const PmOneSequence& s);

/// Oracle for is_williamson: expands each member to its circulant, squares
/// by explicit multiplication and compares the sum with 4n I.
bool matrix_williamson_check(const WilliamsonQuadruple& q);

/// Parses "+--" into [1, -1, -1]. Any other character is a ParseError whose
/// column is relative to the start of `text` (1-based).
PmOneSequence parse_sequence(std::string_view text);

/// Parses "a;b;c;d", each member optionally surrounded by whitespace.
/// Mismatched lengths or non-symmetric members are reported as ParseError
/// pointing at the offending member.
WilliamsonQuadruple parse_quadruple(std::string_view text);

}  // namespace wkit
