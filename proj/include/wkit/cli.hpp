#pragma once

// Subcommands of the `wkit` tool, written against streams so they can be
// driven directly from tests. Each returns the process exit status.

#include <cstddef>
#include <istream>
#include <ostream>

#include "wkit/search.hpp"

namespace wkit::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// One report line per quadruple line: williamson, the parity-appropriate
/// product theorem, the mod-4 corollary (even n) and the Hall identity.
/// Blank lines and '#' lines are skipped.
int cmd_verify(std::istream& in, std::ostream& out, std::ostream& err);

/// Runs the search and writes the results file.
int cmd_search(const SearchConfig& cfg, std::ostream& out, std::ostream& err);

/// One line of space-separated integers per input sequence.
int cmd_compress(std::istream& in, std::ostream& out, std::ostream& err);

/// Writes the order-4n matrix for every quadruple line, after checking it is
/// Hadamard. Refuses non-Williamson input.
int cmd_hadamard(std::istream& in, std::ostream& out, std::ostream& err);

/// Exhaustive self-check: searches each order in [first, last] and checks
/// every theorem and oracle on every quadruple found.
int cmd_check(std::size_t first, std::size_t last, std::size_t workers,
              std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run(int argc, char** argv);

}  // namespace wkit::cli
