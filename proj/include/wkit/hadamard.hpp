#pragma once

#include <ostream>
#include <string>

#include "wkit/seqcore.hpp"

namespace wkit {

/// Order-4n block matrix built from the circulants of a Williamson quadruple:
///
///    A   B   C   D
///   -B   A  -D   C
///   -C   D   A  -B
///   -D  -C   B   A
///
/// Throws PreconditionError if q is not Williamson.
SquareMatrix williamson_array(const WilliamsonQuadruple& q);

/// M M^T == order * I, computed exactly. Throws StructuralError if any entry
/// is not +1/-1.
bool is_hadamard(const SquareMatrix& m);

/// "order N" followed by one row per line of '+'/'-' characters.
/// Throws StructuralError if any entry is not +1/-1.
void write_matrix_text(std::ostream& os, const SquareMatrix& m);

}  // namespace wkit
