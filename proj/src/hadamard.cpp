#include "wkit/hadamard.hpp"

#include <array>

namespace wkit {

namespace {

// Block (row, col) of the array is sign * circulant(member).
struct Block {
  int member;
  int sign;
};

constexpr std::array<std::array<Block, 4>, 4> kArray{{
    {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
    {{{1, -1}, {0, 1}, {3, -1}, {2, 1}}},
    {{{2, -1}, {3, 1}, {0, 1}, {1, -1}}},
    {{{3, -1}, {2, -1}, {1, 1}, {0, 1}}},
}};

void require_pm_one(const SquareMatrix& m) {
  for (auto e : m.entries()) {
    if (e != 1 && e != -1) {
      throw StructuralError("matrix entry " + std::to_string(e) +
                            " is not +1 or -1");
    }
  }
}

}  // namespace

SquareMatrix williamson_array(const WilliamsonQuadruple& q) {
  if (!is_williamson(q)) {
    throw PreconditionError("williamson_array requires a Williamson quadruple");
  }
  const std::size_t n = q.order();
  const std::array<SquareMatrix, 4> circ{circulant(q.a()), circulant(q.b()),
                                         circulant(q.c()), circulant(q.d())};
  SquareMatrix h(4 * n);
  for (std::size_t br = 0; br < 4; ++br) {
    for (std::size_t bc = 0; bc < 4; ++bc) {
      const Block blk = kArray[br][bc];
      const SquareMatrix& src = circ[blk.member];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          h(br * n + i, bc * n + j) = blk.sign * src(i, j);
        }
      }
    }
  }
  return h;
}

bool is_hadamard(const SquareMatrix& m) {
  require_pm_one(m);
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += m(i, k) * m(j, k);
      if (dot != (i == j ? static_cast<std::int64_t>(n) : 0)) return false;
    }
  }
  return true;
}

void write_matrix_text(std::ostream& os, const SquareMatrix& m) {
  require_pm_one(m);
  const std::size_t n = m.order();
  os << "order " << n << '\n';
  std::string row(n, '+');
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j) > 0 ? '+' : '-';
    os << row << '\n';
  }
}

}  // namespace wkit
