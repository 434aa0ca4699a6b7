#pragma once

// Exact arithmetic in the group ring Z[C_n] (integer combinations of powers
// of a generator u with u^n = 1) and the two group-ring identities that
// underlie the even-order product theorem. These are oracles: they recompute
// facts about Williamson sequences along a route independent of the PAF path.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wkit/seqcore.hpp"

namespace wkit {

class GroupRingElement {
 public:
  /// Zero element of Z[C_n]. Throws StructuralError if n == 0.
  explicit GroupRingElement(std::size_t n);
  /// Throws StructuralError if coeffs is empty.
  explicit GroupRingElement(std::vector<std::int64_t> coeffs);

  /// u^0.
  static GroupRingElement one(std::size_t n);
  /// 1 + u + ... + u^{n-1}.
  static GroupRingElement all_ones(std::size_t n);
  /// u^(exponent mod n).
  static GroupRingElement monomial(std::size_t n, std::size_t exponent);

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const std::int64_t> coeffs() const& noexcept { return coeffs_; }
  std::span<const std::int64_t> coeffs() const&& = delete;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement x,
                                    const GroupRingElement& y) {
    return x += y;
  }
  friend GroupRingElement operator-(GroupRingElement x,
                                    const GroupRingElement& y) {
    return x -= y;
  }
  friend GroupRingElement operator*(std::int64_t k, GroupRingElement x);

  /// "c0 c1 ... c{n-1}".
  std::string to_text() const;

  friend bool operator==(const GroupRingElement&,
                         const GroupRingElement&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const GroupRingElement& x);

/// x_0 + x_1 u + ... + x_{n-1} u^{n-1}.
GroupRingElement gre_from_signs(const PmOneSequence& s);

/// 0/1 element marking the +1 positions of a sequence, with its coefficient
/// sum (the number of +1 entries).
struct PositiveSupport {
  GroupRingElement element;
  std::size_t count;
};

PositiveSupport positive_support(const PmOneSequence& s);

/// Cyclic convolution: result[k] = sum over i + j == k (mod n) of x[i] y[j].
/// Throws StructuralError on order mismatch.
GroupRingElement gre_mul(const GroupRingElement& x, const GroupRingElement& y);

/// Checks P_A^2 + P_B^2 + P_C^2 + P_D^2 ==
///   (p_A + p_B + p_C + p_D - n)(1 + u + ... + u^{n-1}) + n
/// coefficientwise. Throws PreconditionError if q is not Williamson, since the
/// identity is only claimed for Williamson quadruples.
bool hall_identity_check(const WilliamsonQuadruple& q);

/// Checks P_X^2 == sum over +1 positions i of u^{2i}  (mod 2). Holds for
/// every ±1 sequence.
bool mod2_square_check(const PmOneSequence& s);

/// For each even k in [0, n) counts the +1 entries among the eight entries
/// at indices k/2 and (k+n)/2 of a, b, c, d; true iff every count is even.
/// Only the parity of n is a precondition (PreconditionError for odd n).
bool even_coefficient_parity_check(const WilliamsonQuadruple& q);

}  // namespace wkit
