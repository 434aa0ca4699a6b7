#include "wkit/theorems.hpp"

#include <sstream>
#include <utility>

namespace wkit {

namespace {

void require_williamson(const WilliamsonQuadruple& q, const char* who) {
  if (!is_williamson(q)) {
    throw PreconditionError(std::string(who) +
                            " requires a Williamson quadruple");
  }
}

void require_parity(const WilliamsonQuadruple& q, bool even, const char* who) {
  if ((q.order() % 2 == 0) != even) {
    throw PreconditionError(std::string(who) + " requires " +
                            (even ? "even" : "odd") + " order, got " +
                            std::to_string(q.order()));
  }
}

std::uint64_t product_mask(const WilliamsonQuadruple& q) {
  return q.a().negative_mask() ^ q.b().negative_mask() ^
         q.c().negative_mask() ^ q.d().negative_mask();
}

int entry_product(const WilliamsonQuadruple& q, std::size_t i) {
  return q.a()[i] * q.b()[i] * q.c()[i] * q.d()[i];
}

}  // namespace

CompressedSequence::CompressedSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e != -2 && e != 0 && e != 2) {
      throw StructuralError("compressed entry " + std::to_string(e) +
                            " is not -2, 0 or 2");
    }
  }
}

std::string CompressedSequence::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ' ';
    os << entries_[i];
  }
  return os.str();
}

bool product_theorem_odd_check(const WilliamsonQuadruple& q) {
  require_parity(q, false, "product_theorem_odd_check");
  require_williamson(q, "product_theorem_odd_check");
  const int base = entry_product(q, 0);
  // 1 <= i < n/2 with real division, i.e. i <= (n-1)/2 for odd n.
  for (std::size_t i = 1; 2 * i < q.order(); ++i) {
    if (entry_product(q, i) != -base) return false;
  }
  return true;
}

bool product_theorem_even_check(const WilliamsonQuadruple& q) {
  require_parity(q, true, "product_theorem_even_check");
  require_williamson(q, "product_theorem_even_check");
  const std::size_t m = q.order() / 2;
  for (std::size_t i = 0; i < m; ++i) {
    if (entry_product(q, i) != entry_product(q, i + m)) return false;
  }
  return true;
}

CompressedSequence compress2(const PmOneSequence& s) {
  if (s.size() % 2 != 0) {
    throw PreconditionError("2-compression requires even length, got " +
                            std::to_string(s.size()));
  }
  const std::size_t m = s.size() / 2;
  std::vector<int> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = s[i] + s[i + m];
  return CompressedSequence(std::move(out));
}

std::vector<int> compressed_sum(const WilliamsonQuadruple& q) {
  if (q.order() % 2 != 0) {
    throw PreconditionError("2-compression requires even order, got " +
                            std::to_string(q.order()));
  }
  std::vector<int> sum(q.order() / 2, 0);
  for (std::size_t k = 0; k < 4; ++k) {
    const CompressedSequence c = compress2(q.member(k));
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c[i];
  }
  return sum;
}

bool corollary_mod4_check(const WilliamsonQuadruple& q) {
  require_parity(q, true, "corollary_mod4_check");
  require_williamson(q, "corollary_mod4_check");
  return mod4_filter(q);
}

bool product_condition_holds(std::size_t n, std::uint64_t mask) {
  auto bit = [mask](std::size_t i) { return (mask >> i) & 1U; };
  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    const std::uint64_t low = (std::uint64_t{1} << m) - 1;  // m <= 32
    return (mask & low) == ((mask >> m) & low);
  }
  const auto base = bit(0);
  for (std::size_t i = 1; 2 * i < n; ++i) {
    if (bit(i) == base) return false;
  }
  return true;
}

bool theorem_filter(const WilliamsonQuadruple& candidate) {
  return product_condition_holds(candidate.order(), product_mask(candidate));
}

bool mod4_filter(const WilliamsonQuadruple& candidate) {
  if (candidate.order() % 2 != 0) return true;
  for (int e : compressed_sum(candidate)) {
    if (e % 4 != 0) return false;
  }
  return true;
}

}  // namespace wkit
