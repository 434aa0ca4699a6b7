#include "wkit/groupring.hpp"

#include <sstream>
#include <utility>

namespace wkit {

GroupRingElement::GroupRingElement(std::size_t n) : coeffs_(n, 0) {
  if (n == 0) throw StructuralError("group order must be positive");
}

GroupRingElement::GroupRingElement(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw StructuralError("group order must be positive");
}

GroupRingElement GroupRingElement::one(std::size_t n) {
  return monomial(n, 0);
}

GroupRingElement GroupRingElement::all_ones(std::size_t n) {
  GroupRingElement x(n);
  for (auto& c : x.coeffs_) c = 1;
  return x;
}

GroupRingElement GroupRingElement::monomial(std::size_t n,
                                            std::size_t exponent) {
  GroupRingElement x(n);
  x.coeffs_[exponent % n] = 1;
  return x;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  if (other.order() != order()) {
    throw StructuralError("group ring order mismatch");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  if (other.order() != order()) {
    throw StructuralError("group ring order mismatch");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

GroupRingElement operator*(std::int64_t k, GroupRingElement x) {
  for (auto& c : x.coeffs_) c *= k;
  return x;
}

std::string GroupRingElement::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ' ';
    os << coeffs_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupRingElement& x) {
  return os << x.to_text();
}

GroupRingElement gre_from_signs(const PmOneSequence& s) {
  GroupRingElement x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i];
  return x;
}

PositiveSupport positive_support(const PmOneSequence& s) {
  GroupRingElement x(s.size());
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 1) {
      x[i] = 1;
      ++count;
    }
  }
  return {std::move(x), count};
}

GroupRingElement gre_mul(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.order() != y.order()) {
    throw StructuralError("group ring order mismatch: " +
                          std::to_string(x.order()) + " vs " +
                          std::to_string(y.order()));
  }
  const std::size_t n = x.order();
  GroupRingElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      out[(i + j) % n] += x[i] * y[j];
    }
  }
  return out;
}

bool hall_identity_check(const WilliamsonQuadruple& q) {
  if (!is_williamson(q)) {
    throw PreconditionError(
        "hall_identity_check requires a Williamson quadruple");
  }
  const std::size_t n = q.order();
  GroupRingElement lhs(n);
  std::int64_t support_total = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const PositiveSupport p = positive_support(q.member(k));
    lhs += gre_mul(p.element, p.element);
    support_total += static_cast<std::int64_t>(p.count);
  }
  const auto order = static_cast<std::int64_t>(n);
  const GroupRingElement rhs =
      (support_total - order) * GroupRingElement::all_ones(n) +
      order * GroupRingElement::one(n);
  return lhs == rhs;
}

bool mod2_square_check(const PmOneSequence& s) {
  const std::size_t n = s.size();
  const PositiveSupport p = positive_support(s);
  const GroupRingElement square = gre_mul(p.element, p.element);
  GroupRingElement doubled(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == 1) doubled[(2 * i) % n] += 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if ((square[k] - doubled[k]) % 2 != 0) return false;
  }
  return true;
}

bool even_coefficient_parity_check(const WilliamsonQuadruple& q) {
  const std::size_t n = q.order();
  if (n % 2 != 0) {
    throw PreconditionError(
        "even_coefficient_parity_check requires even order, got " +
        std::to_string(n));
  }
  // u^k = u^{2i} has exactly the two solutions i = k/2 and i = (k+n)/2.
  for (std::size_t k = 0; k < n; k += 2) {
    const std::size_t lo = k / 2;
    const std::size_t hi = (k + n) / 2;
    int plus = 0;
    for (std::size_t m = 0; m < 4; ++m) {
      const PmOneSequence& s = q.member(m);
      plus += (s[lo] == 1) + (s[hi] == 1);
    }
    if (plus % 2 != 0) return false;
  }
  return true;
}

}  // namespace wkit
