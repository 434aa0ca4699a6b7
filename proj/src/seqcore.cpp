#include "wkit/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace wkit {

PmOneSequence::PmOneSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw StructuralError("sequence must have at least one entry");
  }
  if (entries_.size() > kMaxOrder) {
    throw StructuralError("sequence length " + std::to_string(entries_.size()) +
                          " exceeds maximum order " +
                          std::to_string(kMaxOrder));
  }
  for (int e : entries_) {
    if (e != 1 && e != -1) {
      throw StructuralError("sequence entry " + std::to_string(e) +
                            " is not +1 or -1");
    }
  }
}

PmOneSequence PmOneSequence::negated() const {
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = -entries_[i];
  return PmOneSequence(std::move(out));
}

std::uint64_t PmOneSequence::negative_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::string PmOneSequence::to_text() const {
  std::string out;
  out.reserve(entries_.size());
  for (int e : entries_) out.push_back(e > 0 ? '+' : '-');
  return out;
}

WilliamsonQuadruple::WilliamsonQuadruple(PmOneSequence a, PmOneSequence b,
                                         PmOneSequence c, PmOneSequence d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const std::size_t n = a_.size();
  if (b_.size() != n || c_.size() != n || d_.size() != n) {
    throw StructuralError("quadruple members must have equal length");
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (!is_symmetric(member(k))) {
      throw StructuralError("quadruple member " + std::to_string(k) +
                            " is not symmetric");
    }
  }
}

const PmOneSequence& WilliamsonQuadruple::member(std::size_t k) const {
  switch (k) {
    case 0: return a_;
    case 1: return b_;
    case 2: return c_;
    case 3: return d_;
  }
  throw std::out_of_range("quadruple member index out of range");
}

std::string WilliamsonQuadruple::to_text() const {
  return a_.to_text() + ';' + b_.to_text() + ';' + c_.to_text() + ';' +
         d_.to_text();
}

SquareMatrix::SquareMatrix(std::size_t order)
    : order_(order), entries_(order * order, 0) {}

SquareMatrix::SquareMatrix(std::size_t order, std::vector<std::int64_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw StructuralError("matrix entry count does not match order squared");
  }
}

SquareMatrix SquareMatrix::identity(std::size_t order) {
  SquareMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& other) {
  if (other.order_ != order_) throw StructuralError("matrix order mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += other.entries_[i];
  }
  return *this;
}

SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
  if (x.order_ != y.order_) throw StructuralError("matrix order mismatch");
  const std::size_t n = x.order_;
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

SquareMatrix operator*(std::int64_t k, SquareMatrix x) {
  for (auto& e : x.entries_) e *= k;
  return x;
}

bool is_symmetric(const PmOneSequence& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (s[i] != s[n - i]) return false;
  }
  return true;
}

int paf(const PmOneSequence& s, std::size_t shift) {
  const std::size_t n = s.size();
  if (shift >= n) {
    throw std::out_of_range("paf shift " + std::to_string(shift) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  int total = 0;
  for (std::size_t i = 0; i < n; ++i) total += s[i] * s[(i + shift) % n];
  return total;
}

int row_sum(const PmOneSequence& s) {
  int total = 0;
  for (int e : s.entries()) total += e;
  return total;
}

bool is_williamson(const WilliamsonQuadruple& q) {
  const std::size_t n = q.order();
  for (std::size_t shift = 1; shift <= n / 2; ++shift) {
    if (paf(q.a(), shift) + paf(q.b(), shift) + paf(q.c(), shift) +
            paf(q.d(), shift) !=
        0) {
      return false;
    }
  }
  return true;
}

SquareMatrix circulant(const PmOneSequence& s) {
  const std::size_t n = s.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s[(j + n - i) % n];
  }
  return m;
}

bool matrix_williamson_check(const WilliamsonQuadruple& q) {
  const std::size_t n = q.order();
  SquareMatrix sum(n);
  for (std::size_t k = 0; k < 4; ++k) {
    const SquareMatrix m = circulant(q.member(k));
    sum += m * m;
  }
  return sum == static_cast<std::int64_t>(4 * n) * SquareMatrix::identity(n);
}

PmOneSequence parse_sequence(std::string_view text) {
  std::vector<int> entries;
  entries.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': entries.push_back(1); break;
      case '-': entries.push_back(-1); break;
      default:
        throw ParseError(std::string("unexpected character '") + text[i] +
                             "' in sequence",
                         i + 1);
    }
  }
  if (entries.empty()) throw ParseError("empty sequence", 1);
  if (entries.size() > kMaxOrder) {
    throw ParseError("sequence longer than maximum order " +
                         std::to_string(kMaxOrder),
                     kMaxOrder + 1);
  }
  return PmOneSequence(std::move(entries));
}

namespace {

bool is_blank(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

}  // namespace

WilliamsonQuadruple parse_quadruple(std::string_view text) {
  std::vector<PmOneSequence> members;
  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  for (int field = 0; field < 4; ++field) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    std::size_t lo = pos;
    std::size_t hi = end;
    while (lo < hi && is_blank(text[lo])) ++lo;
    while (hi > lo && is_blank(text[hi - 1])) --hi;
    if (lo == hi) {
      throw ParseError("quadruple member " + std::to_string(field + 1) +
                           " is empty",
                       lo + 1);
    }
    try {
      members.push_back(parse_sequence(text.substr(lo, hi - lo)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lo + e.column());
    }
    starts.push_back(lo + 1);
    if (field < 3) {
      if (end == text.size()) {
        throw ParseError("expected 4 ';'-separated sequences, found " +
                             std::to_string(field + 1),
                         text.size() + 1);
      }
      pos = end + 1;
    } else if (end != text.size()) {
      throw ParseError("unexpected ';' after fourth sequence", end + 1);
    }
  }
  const std::size_t n = members[0].size();
  for (std::size_t k = 0; k < 4; ++k) {
    if (members[k].size() != n) {
      throw ParseError("sequence length " + std::to_string(members[k].size()) +
                           " differs from first sequence length " +
                           std::to_string(n),
                       starts[k]);
    }
    if (!is_symmetric(members[k])) {
      throw ParseError("sequence " + std::to_string(k + 1) +
                           " is not symmetric",
                       starts[k]);
    }
  }
  return WilliamsonQuadruple(members[0], members[1], members[2], members[3]);
}

}  // namespace wkit
